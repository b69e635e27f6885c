#include "shadow/discrete.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "shadow/analysis.hpp"

namespace shadow {

namespace {

// March from (x0, y_start) with y_start strictly above every column. Split out
// so the runner can feed its tracked maximum instead of rescanning the field.
ImpactEvent trace_from(const HeightField& field, double x0, double theta, double y_start) {
  const std::size_t L = field.size();
  const double dx = field.dx;

  auto col0 = static_cast<std::size_t>(x0 / dx);
  if (col0 >= L) col0 = L - 1;  // guard the x0 -> L*dx rounding edge

  if (theta == 0.0) return {col0, ImpactKind::Top, IncomingDirection::Vertical};

  const bool right = theta > 0.0;
  const IncomingDirection incoming =
      right ? IncomingDirection::FromLeft : IncomingDirection::FromRight;
  // Vertical drop per column width of horizontal travel.
  const double drop = dx * std::cos(std::abs(theta)) / std::sin(std::abs(theta));
  const double tan_t = std::tan(std::abs(theta));

  std::size_t j = col0;
  double y = y_start;
  // Distance (in column widths) to the first boundary in the travel direction.
  const double frac = x0 / dx - static_cast<double>(col0);
  double db = right ? 1.0 - frac : frac;

  for (;;) {
    // Hit the floor of the current column before its far boundary?
    const double d_hit = (y - field.h[j]) * tan_t / dx;
    if (d_hit < db) return {j, ImpactKind::Top, incoming};

    y -= db * drop;
    const std::size_t jn = right ? (j + 1 == L ? 0 : j + 1) : (j == 0 ? L - 1 : j - 1);
    if (y < field.h[jn]) return {jn, ImpactKind::Side, incoming};
    if (y == field.h[jn]) return {jn, ImpactKind::Top, incoming};
    j = jn;
    db = 1.0;
  }
}

std::size_t landing_site(const ImpactEvent& ev, std::size_t L) {
  if (ev.kind == ImpactKind::Top) return ev.site;
  if (ev.incoming == IncomingDirection::FromLeft)
    return ev.site == 0 ? L - 1 : ev.site - 1;
  if (ev.incoming == IncomingDirection::FromRight)
    return ev.site + 1 == L ? 0 : ev.site + 1;
  throw ValidationError("side impact cannot have a vertical incoming direction");
}

}  // namespace

ImpactEvent trace_particle(const HeightField& field, double x0, double theta) {
  const std::size_t L = field.size();
  if (L == 0) throw ValidationError("trace on an empty field");
  if (!(std::abs(theta) < kPi / 2.0))
    throw ValidationError("theta must satisfy |theta| < pi/2");
  if (!(x0 >= 0.0 && x0 < static_cast<double>(L) * field.dx))
    throw ValidationError("x0 must lie in [0, L*dx)");

  const double h_max = *std::max_element(field.h.begin(), field.h.end());
  return trace_from(field, x0, theta, h_max + 2.0);
}

bool apply_impact(HeightField& field, const ImpactEvent& event, SideRule side_rule) {
  if (event.site >= field.size()) throw ValidationError("impact site out of range");
  if (event.kind == ImpactKind::Top) {
    field.h[event.site] += 1.0;
    return true;
  }
  if (side_rule == SideRule::Remove) return false;
  field.h[landing_site(event, field.size())] += 1.0;
  return true;
}

RunRecord run_discrete(const DiscreteParams& params) {
  validate(params);
  const std::size_t L = params.L;
  const double dL = static_cast<double>(L);

  HeightField field = flat_field(L, 0.0);
  RandomSource rng(params.seed);

  const auto n_total = static_cast<std::uint64_t>(std::llround(params.t_end * dL));
  const std::vector<std::uint64_t> sample_steps =
      log_sample_steps(n_total, params.samples_per_decade);

  // Snapshot schedule as (step, requested time), ordered by step.
  std::vector<std::pair<std::uint64_t, double>> snaps;
  snaps.reserve(params.snapshot_times.size());
  for (double tau : params.snapshot_times)
    snaps.emplace_back(static_cast<std::uint64_t>(std::llround(tau * dL)), tau);
  std::stable_sort(snaps.begin(), snaps.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  RunRecord rec;
  rec.seed = params.seed;
  rec.params_echo = params;

  std::size_t next_sample = 0;
  std::size_t next_snap = 0;
  while (next_snap < snaps.size() && snaps[next_snap].first == 0) {
    rec.snapshots.push_back({snaps[next_snap].second, field});
    ++next_snap;
  }

  double sum_h = 0.0;   // exact: integer-valued throughout
  double h_max = 0.0;   // running maximum, monotone under deposits

  for (std::uint64_t n = 1; n <= n_total; ++n) {
    const double x0 = rng.uniform(0.0, dL * field.dx);
    const double theta = rng.uniform(-params.theta_max, params.theta_max);

    const ImpactEvent ev = trace_from(field, x0, theta, h_max + 2.0);
    if (apply_impact(field, ev, params.side_rule)) {
      const std::size_t s = landing_site(ev, L);
      sum_h += 1.0;
      h_max = std::max(h_max, field.h[s]);
    }

    if (next_sample < sample_steps.size() && n == sample_steps[next_sample]) {
      rec.samples.push_back({static_cast<double>(n) / dL, roughness(field), sum_h / dL});
      ++next_sample;
    }
    while (next_snap < snaps.size() && snaps[next_snap].first == n) {
      rec.snapshots.push_back({snaps[next_snap].second, field});
      ++next_snap;
    }
  }
  return rec;
}

}  // namespace shadow
