#ifndef SHADOW_CORE_HPP
#define SHADOW_CORE_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace shadow {

inline constexpr double kPi = 3.14159265358979323846;

// ---------------------------------------------------------------------------
// Errors. ValidationError maps to exit 1 at the CLI boundary, NumericsError
// (stability guard, degenerate exposure) to exit 2, IoError to exit 3.
// ---------------------------------------------------------------------------
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ValidationError : Error {
  using Error::Error;
};
struct NumericsError : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Height fields
// ---------------------------------------------------------------------------

/// Wraps any signed index onto [0, L) (true modulo, negative-safe).
inline std::size_t wrap_index(std::int64_t i, std::size_t L) {
  std::int64_t n = static_cast<std::int64_t>(L);
  std::int64_t r = i % n;
  if (r < 0) r += n;
  return static_cast<std::size_t>(r);
}

/// Periodic 1-D column-height profile over a substrate of L sites spaced dx
/// apart. Heights are integer lattice units for the Monte-Carlo model and
/// real length units for the continuum schemes; both views share this shape.
template <typename T>
struct BasicHeightField {
  std::vector<T> h;
  double dx = 1.0;

  BasicHeightField() = default;
  BasicHeightField(std::size_t L, T h0, double spacing = 1.0)
      : h(L, h0), dx(spacing) {}

  std::size_t size() const { return h.size(); }

  // Periodic accessors: any signed index is valid.
  T at(std::int64_t i) const { return h[wrap_index(i, h.size())]; }
  T& at(std::int64_t i) { return h[wrap_index(i, h.size())]; }
};

using HeightField = BasicHeightField<double>;
using LatticeField = BasicHeightField<std::int64_t>;

inline HeightField to_real(const LatticeField& f) {
  HeightField out;
  out.dx = f.dx;
  out.h.assign(f.h.begin(), f.h.end());
  return out;
}

/// Flat initial condition: L columns all at h0.
template <typename T>
BasicHeightField<T> flat_field(std::size_t L, T h0, double dx = 1.0) {
  if (L < 4) throw ValidationError("L must be at least 4 (got " + std::to_string(L) + ")");
  return BasicHeightField<T>(L, h0, dx);
}

// ---------------------------------------------------------------------------
// Parameter sets
// ---------------------------------------------------------------------------

/// What happens to a particle that strikes a column side: slide into the
/// adjacent groove (FallDown, the main model) or discard it (Remove).
enum class SideRule { FallDown, Remove };

enum class ContinuumModel { PureShadow, NonlinearAniso };

struct DiscreteParams {
  std::size_t L = 0;
  double theta_max = 0.0;  // radians, half-opening of the incidence fan
  SideRule side_rule = SideRule::FallDown;
  double t_end = 0.0;  // monolayer time units (L launched particles per unit)
  std::vector<double> snapshot_times;
  std::uint64_t seed = 0;
  int samples_per_decade = 20;
};

struct ContinuumParams {
  std::size_t L = 0;
  double dx = 1.0;
  double dt = 0.0;
  double R = 1.0;   // deposition rate
  double nu = 0.0;  // diffusion coefficient
  double D = 0.0;   // noise strength
  ContinuumModel model = ContinuumModel::PureShadow;
  double g_exponent = 2.0;  // shadowing weight exponent in the nonlinear model
  double t_end = 0.0;
  std::vector<double> snapshot_times;
  std::uint64_t seed = 0;
  std::size_t exposure_window = 0;  // 0 selects floor(L/2) and the fast kernel
  int samples_per_decade = 20;
};

/// Checks every invariant; returns the params unchanged or throws a
/// ValidationError naming the offending field.
const DiscreteParams& validate(const DiscreteParams& p);
const ContinuumParams& validate(const ContinuumParams& p);

// ---------------------------------------------------------------------------
// Random source
// ---------------------------------------------------------------------------

/// Deterministic draw source shared by both model families. Backed by
/// mt19937_64 (bit-exact engine sequence mandated by the C++ standard); the
/// real-valued mappings below are hand-rolled so the full stream is
/// platform-independent, which keeps golden-file regressions portable.
/// Single-owner: never share one instance across concurrent tasks.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform on [0,1) with 53-bit resolution.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform on [-1,1), the epsilon distribution of the explicit schemes.
  double uniform_sym() { return 2.0 * uniform01() - 1.0; }

  /// Uniform on [a,b).
  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

 private:
  std::mt19937_64 gen_;
};

// ---------------------------------------------------------------------------
// Run records
// ---------------------------------------------------------------------------

struct Sample {
  double t = 0.0;
  double w = 0.0;  // rms roughness
  double mean_h = 0.0;
};

struct Snapshot {
  double t = 0.0;
  HeightField field;
};

/// Time series plus scheduled interface snapshots from one simulation run.
/// samples are sorted by strictly increasing t; snapshots hold exactly the
/// requested snapshot_times, ordered by time.
struct RunRecord {
  std::vector<Sample> samples;
  std::vector<Snapshot> snapshots;
  std::variant<DiscreteParams, ContinuumParams> params_echo;
  std::uint64_t seed = 0;
};

/// Logarithmically spaced subset of {1..n_total} with roughly per_decade
/// entries per decade; always contains n_total. Used for W(t) sampling so
/// log-log roughness plots come out evenly covered.
std::vector<std::uint64_t> log_sample_steps(std::uint64_t n_total, int per_decade);

}  // namespace shadow

#endif  // SHADOW_CORE_HPP
