#include "shadow/continuum.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "shadow/analysis.hpp"

namespace shadow {

namespace {

constexpr double kBlowupLimit = 1e12;

void refresh_profile(SchemeState& state, const ContinuumParams& params) {
  const std::size_t half = state.field.size() / 2;
  if (params.exposure_window == 0 || params.exposure_window == half)
    state.profile_cache = exposure_profile_fast(state.field);
  else
    state.profile_cache = exposure_profile(state.field, params.exposure_window);
}

double field_mean(const HeightField& f) {
  double sum = 0.0;
  for (double v : f.h) sum += v;
  return sum / static_cast<double>(f.size());
}

}  // namespace

void step_pure_shadow(SchemeState& state, const ContinuumParams& params, RandomSource& rng) {
  if (params.model != ContinuumModel::PureShadow)
    throw ValidationError("step_pure_shadow called with a different model selected");
  refresh_profile(state, params);

  const std::size_t L = state.field.size();
  const double amp = std::sqrt(2.0 * params.D * params.dt / params.dx);
  const double gain = params.dt * params.R;
  for (std::size_t i = 0; i < L; ++i) {
    const double eps = rng.uniform_sym();  // drawn every step regardless of D
    state.field.h[i] += gain * state.profile_cache.normalized[i] + amp * eps;
  }
  ++state.step_index;
  state.t = params.dt * static_cast<double>(state.step_index);
}

void step_nonlinear(SchemeState& state, const ContinuumParams& params, RandomSource& rng) {
  if (params.model != ContinuumModel::NonlinearAniso)
    throw ValidationError("step_nonlinear called with a different model selected");
  refresh_profile(state, params);

  const std::size_t L = state.field.size();
  const double dx = params.dx;
  const double amp = std::sqrt(2.0 * params.D * params.dt / dx);
  const double diff = params.nu * params.dt / (dx * dx);
  const double gain = params.dt * params.R;

  const std::vector<double>& h = state.field.h;
  std::vector<double> next(L);
  for (std::size_t i = 0; i < L; ++i) {
    const std::size_t ip = i + 1 == L ? 0 : i + 1;
    const std::size_t im = i == 0 ? L - 1 : i - 1;
    const double grad = (h[ip] - h[im]) / (2.0 * dx);
    const double eps = rng.uniform_sym();
    const double bracket = gain * std::sqrt(1.0 + grad * grad) +
                           diff * (h[ip] - 2.0 * h[i] + h[im]) + amp * eps;
    const double v = h[i] + std::pow(state.profile_cache.normalized[i],
                                     params.g_exponent) * bracket;
    if (!std::isfinite(v) || std::abs(v) > kBlowupLimit)
      throw NumericsError("nonlinear scheme unstable at step " +
                          std::to_string(state.step_index + 1) + " (t=" +
                          std::to_string(state.t + params.dt) + "), site " +
                          std::to_string(i));
    next[i] = v;
  }
  state.field.h = std::move(next);
  ++state.step_index;
  state.t = params.dt * static_cast<double>(state.step_index);
}

double linear_growth_rate(double k, const DispersionParams& p) {
  if (k < 0.0) throw ValidationError("wavenumber must be non-negative");
  if (!(p.omega_bar > 0.0)) throw ValidationError("omega_bar must be positive");
  return 2.0 * p.alpha * p.R * k / p.omega_bar - p.nu * k * k;
}

double critical_wavenumber(const DispersionParams& p) {
  if (!(p.nu > 0.0))
    throw ValidationError("nu must be positive: no diffusive cutoff otherwise");
  if (!(p.omega_bar > 0.0)) throw ValidationError("omega_bar must be positive");
  return 2.0 * p.alpha * p.R / (p.omega_bar * p.nu);
}

RunRecord run_continuum(const ContinuumParams& params, const HeightField& initial) {
  validate(params);
  if (initial.size() != params.L)
    throw ValidationError("initial field size must match params.L");
  if (initial.dx != params.dx)
    throw ValidationError("initial field dx must match params.dx");

  const auto n_total = static_cast<std::uint64_t>(std::llround(params.t_end / params.dt));
  const std::vector<std::uint64_t> sample_steps =
      log_sample_steps(n_total, params.samples_per_decade);

  std::vector<std::pair<std::uint64_t, double>> snaps;
  snaps.reserve(params.snapshot_times.size());
  for (double tau : params.snapshot_times)
    snaps.emplace_back(static_cast<std::uint64_t>(std::llround(tau / params.dt)), tau);
  std::stable_sort(snaps.begin(), snaps.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  SchemeState state;
  state.field = initial;
  RandomSource rng(params.seed);

  RunRecord rec;
  rec.seed = params.seed;
  rec.params_echo = params;

  std::size_t next_sample = 0;
  std::size_t next_snap = 0;
  while (next_snap < snaps.size() && snaps[next_snap].first == 0) {
    rec.snapshots.push_back({snaps[next_snap].second, state.field});
    ++next_snap;
  }

  void (*step)(SchemeState&, const ContinuumParams&, RandomSource&) =
      params.model == ContinuumModel::PureShadow ? step_pure_shadow : step_nonlinear;

  for (std::uint64_t n = 1; n <= n_total; ++n) {
    step(state, params, rng);
    if (next_sample < sample_steps.size() && n == sample_steps[next_sample]) {
      rec.samples.push_back({state.t, roughness(state.field), field_mean(state.field)});
      ++next_sample;
    }
    while (next_snap < snaps.size() && snaps[next_snap].first == n) {
      rec.snapshots.push_back({snaps[next_snap].second, state.field});
      ++next_snap;
    }
  }
  return rec;
}

}  // namespace shadow
