#ifndef SHADOW_EXPOSURE_HPP
#define SHADOW_EXPOSURE_HPP

#include <cstddef>
#include <vector>

#include "shadow/core.hpp"

namespace shadow {

/// Per-site exposure angle Omega_i (the angular width of unobstructed upward
/// directions, pi on flat terrain) together with its spatial mean and the
/// mean-normalized profile used by the continuum schemes.
struct ExposureProfile {
  std::vector<double> omega;       // radians, each in [0, pi]
  double omega_bar = 0.0;          // spatial mean of omega
  std::vector<double> normalized;  // omega[i] / omega_bar
};

/// Exposure angle at one site: pi - beta_left - beta_right, where each beta
/// is the largest elevation angle to a column top within `window` sites on
/// that side (clamped at 0; indices wrap periodically). The source is an
/// infinite plane infinitely far above, so an unobstructed site sees pi.
///
/// Requires 1 <= window <= floor(L/2).
double exposure_angle(const HeightField& field, std::size_t i, std::size_t window);

/// Full profile via the O(L*window) scan; the reference implementation.
/// Throws NumericsError if the mean exposure is zero (pathological field).
ExposureProfile exposure_profile(const HeightField& field, std::size_t window);

/// Same result as exposure_profile(field, floor(L/2)) to 1e-12 per site,
/// computed with blockwise upper-convex-hull tangent sweeps in both
/// directions (amortized near-linear) instead of the quadratic scan.
ExposureProfile exposure_profile_fast(const HeightField& field);

/// Ray-casting reference for the same geometry, kept independent of the
/// tangent formulas above: n_rays directions uniform over [0, pi] from a
/// point lifted 1e-9 above the site, blocked against the piecewise-linear
/// interface (periodic images) out to horizontal distance L/2 on each side.
/// Returns pi times the unblocked fraction. Requires n_rays >= 1000.
double exposure_oracle(const HeightField& field, std::size_t i, std::size_t n_rays);

}  // namespace shadow

#endif  // SHADOW_EXPOSURE_HPP
