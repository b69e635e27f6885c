#include "shadow/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace shadow {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw ValidationError(msg); }

void check_snapshot_times(const std::vector<double>& times, double t_end) {
  for (double t : times) {
    if (!(t >= 0.0 && t <= t_end)) {
      std::ostringstream os;
      os << "snapshot_times entries must lie in [0, t_end]; got " << t;
      fail(os.str());
    }
  }
}

}  // namespace

const DiscreteParams& validate(const DiscreteParams& p) {
  if (p.L < 4) fail("L must be at least 4 (got " + std::to_string(p.L) + ")");
  if (!(p.theta_max >= 0.0)) fail("theta_max must be non-negative");
  if (!(p.theta_max < kPi / 2.0)) fail("theta_max must be below pi/2");
  if (!(p.t_end > 0.0)) fail("t_end must be positive");
  if (p.samples_per_decade < 1) fail("samples_per_decade must be at least 1");
  check_snapshot_times(p.snapshot_times, p.t_end);
  return p;
}

const ContinuumParams& validate(const ContinuumParams& p) {
  if (p.L < 4) fail("L must be at least 4 (got " + std::to_string(p.L) + ")");
  if (!(p.dt > 0.0)) fail("dt must be positive");
  if (!(p.dx > 0.0)) fail("dx must be positive");
  if (!(p.R > 0.0)) fail("R must be positive");
  if (!(p.nu >= 0.0)) fail("nu must be non-negative");
  if (!(p.D >= 0.0)) fail("D must be non-negative");
  if (!(p.g_exponent > 0.0)) fail("g_exponent must be positive");
  if (!(p.t_end > 0.0)) fail("t_end must be positive");
  if (p.exposure_window > p.L / 2)
    fail("exposure_window must not exceed floor(L/2) (got " +
         std::to_string(p.exposure_window) + ")");
  if (p.samples_per_decade < 1) fail("samples_per_decade must be at least 1");
  check_snapshot_times(p.snapshot_times, p.t_end);
  return p;
}

std::vector<std::uint64_t> log_sample_steps(std::uint64_t n_total, int per_decade) {
  std::vector<std::uint64_t> steps;
  if (n_total == 0) return steps;
  double log_max = std::log10(static_cast<double>(n_total));
  int n_marks = static_cast<int>(std::ceil(log_max * per_decade)) + 1;
  for (int k = 0; k <= n_marks; ++k) {
    double v = std::pow(10.0, static_cast<double>(k) / per_decade);
    auto s = static_cast<std::uint64_t>(std::llround(v));
    if (s < 1) s = 1;
    if (s > n_total) break;
    if (steps.empty() || steps.back() != s) steps.push_back(s);
  }
  if (steps.empty() || steps.back() != n_total) steps.push_back(n_total);
  return steps;
}

}  // namespace shadow
