#include "shadow/exposure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace shadow {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Point in lattice coordinates: x is the (fractional-free) site index, dx is
// applied only when a slope is formed, so hull construction is independent of
// the spatial step.
struct Pt {
  double x;
  double y;
};

inline double orient(const Pt& a, const Pt& b, const Pt& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

// Height-per-length slope from query q to target p. Written so that the
// arithmetic matches the naive scan bit for bit: integer site distance,
// then * dx, then one division.
inline double slope_to(const Pt& q, const Pt& p, double dx) {
  return (p.y - q.y) / ((p.x - q.x) * dx);
}

// Max slope from q to any vertex of a strictly convex upper hull. The slope
// sequence along the hull is unimodal for a query outside the hull's x-range,
// so a binary peak search suffices.
double tangent_max(const std::vector<Pt>& hull, const Pt& q, double dx) {
  std::size_t lo = 0, hi = hull.size() - 1;
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (slope_to(q, hull[mid + 1], dx) >= slope_to(q, hull[mid], dx))
      lo = mid + 1;
    else
      hi = mid;
  }
  return slope_to(q, hull[lo], dx);
}

// Append p on the right of an upper hull held in increasing x.
inline void push_right(std::vector<Pt>& hull, const Pt& p) {
  std::size_t n = hull.size();
  while (n >= 2 && orient(hull[n - 2], hull[n - 1], p) >= 0.0) {
    hull.pop_back();
    --n;
  }
  hull.push_back(p);
}

// Append p on the left of an upper hull held in decreasing x.
inline void push_left(std::vector<Pt>& hull, const Pt& p) {
  std::size_t n = hull.size();
  while (n >= 2 && orient(p, hull[n - 1], hull[n - 2]) >= 0.0) {
    hull.pop_back();
    --n;
  }
  hull.push_back(p);
}

// For every site i, the maximum of (h[(i+j) mod L] - h[i]) / (j*dx) over
// j = 1..W. Blockwise decomposition: a window of W targets spans the suffix
// of the query's own W-aligned block plus a prefix of the next one; each part
// is served by an incrementally built upper hull with tangent queries.
std::vector<double> max_forward_slopes(const std::vector<double>& h,
                                       std::size_t W, double dx) {
  const std::size_t L = h.size();
  std::vector<double> ext(L + W);
  for (std::size_t k = 0; k < ext.size(); ++k) ext[k] = h[k % L];

  std::vector<double> out(L, kNegInf);
  std::vector<Pt> hull;
  hull.reserve(W + 1);

  const std::size_t nblocks = (L + W - 1) / W;
  for (std::size_t b = 0; b < nblocks; ++b) {
    const std::size_t qs = b * W;                          // first query
    const std::size_t qe = std::min(qs + W, L);            // one past last query
    const std::size_t be = std::min(qs + W, ext.size());   // block end for targets

    // Suffix of the own block, targets at distance 1..W-1-r.
    hull.clear();
    for (std::size_t k = be; k-- > qs;) {
      Pt p{static_cast<double>(k), ext[k]};
      if (k < qe && !hull.empty())
        out[k] = std::max(out[k], tangent_max(hull, p, dx));
      push_left(hull, p);
    }

    // Prefix of the next block, targets at distance W-r..W.
    hull.clear();
    const std::size_t nb = qs + W;
    for (std::size_t r = 0; qs + r < qe; ++r) {
      const std::size_t tgt = nb + r;
      if (tgt < ext.size())
        push_right(hull, Pt{static_cast<double>(tgt), ext[tgt]});
      if (!hull.empty()) {
        const std::size_t i = qs + r;
        Pt q{static_cast<double>(i), ext[i]};
        out[i] = std::max(out[i], tangent_max(hull, q, dx));
      }
    }
  }
  return out;
}

double angle_from_slopes(double left_slope, double right_slope) {
  double beta_l = std::atan(std::max(0.0, left_slope));
  double beta_r = std::atan(std::max(0.0, right_slope));
  double omega = kPi - beta_l - beta_r;
  return std::clamp(omega, 0.0, kPi);
}

ExposureProfile finish_profile(std::vector<double> omega) {
  ExposureProfile p;
  p.omega = std::move(omega);
  double sum = 0.0;
  for (double w : p.omega) sum += w;
  p.omega_bar = sum / static_cast<double>(p.omega.size());
  if (p.omega_bar == 0.0)
    throw NumericsError("exposure profile degenerate: mean exposure angle is zero");
  p.normalized.resize(p.omega.size());
  for (std::size_t i = 0; i < p.omega.size(); ++i)
    p.normalized[i] = p.omega[i] / p.omega_bar;
  return p;
}

void check_window(std::size_t window, std::size_t L) {
  if (window < 1 || window > L / 2)
    throw ValidationError("window must lie in [1, floor(L/2)] (got " +
                          std::to_string(window) + " for L=" + std::to_string(L) + ")");
}

}  // namespace

double exposure_angle(const HeightField& field, std::size_t i, std::size_t window) {
  const std::size_t L = field.size();
  check_window(window, L);
  if (i >= L) throw ValidationError("site index out of range");

  const double hi = field.h[i];
  double sl = kNegInf, sr = kNegInf;
  for (std::size_t j = 1; j <= window; ++j) {
    const double d = static_cast<double>(j) * field.dx;
    sl = std::max(sl, (field.h[wrap_index(static_cast<std::int64_t>(i) -
                                              static_cast<std::int64_t>(j), L)] - hi) / d);
    sr = std::max(sr, (field.h[wrap_index(static_cast<std::int64_t>(i) +
                                              static_cast<std::int64_t>(j), L)] - hi) / d);
  }
  return angle_from_slopes(sl, sr);
}

ExposureProfile exposure_profile(const HeightField& field, std::size_t window) {
  const std::size_t L = field.size();
  check_window(window, L);
  std::vector<double> omega(L);
  for (std::size_t i = 0; i < L; ++i) omega[i] = exposure_angle(field, i, window);
  return finish_profile(std::move(omega));
}

ExposureProfile exposure_profile_fast(const HeightField& field) {
  const std::size_t L = field.size();
  if (L < 2) throw ValidationError("field must have at least 2 sites");
  const std::size_t W = L / 2;

  std::vector<double> right = max_forward_slopes(field.h, W, field.dx);

  // A leftward scan is a rightward scan of the reversed field.
  std::vector<double> rev(field.h.rbegin(), field.h.rend());
  std::vector<double> left_rev = max_forward_slopes(rev, W, field.dx);

  std::vector<double> omega(L);
  for (std::size_t i = 0; i < L; ++i)
    omega[i] = angle_from_slopes(left_rev[L - 1 - i], right[i]);
  return finish_profile(std::move(omega));
}

double exposure_oracle(const HeightField& field, std::size_t i, std::size_t n_rays) {
  const std::size_t L = field.size();
  if (n_rays < 1000) throw ValidationError("n_rays must be at least 1000");
  if (i >= L) throw ValidationError("site index out of range");
  const std::size_t W = L / 2;
  const double lift = 1e-9;
  const double qy = field.h[i] + lift;

  // The interface out to horizontal distance W*dx on each side, as the
  // polyline through the periodically unrolled column tops. Each segment
  // blocks one contiguous arc of directions: the arc of width <= pi between
  // the two endpoint directions.
  struct Arc {
    double lo, hi;
  };
  std::vector<Arc> blocked;
  blocked.reserve(2 * W);

  auto rel_point = [&](std::int64_t off) {
    return Pt{static_cast<double>(off) * field.dx,
              field.h[wrap_index(static_cast<std::int64_t>(i) + off, L)] - qy};
  };

  Pt prev = rel_point(-static_cast<std::int64_t>(W));
  for (std::int64_t off = -static_cast<std::int64_t>(W) + 1;
       off <= static_cast<std::int64_t>(W); ++off) {
    Pt cur = rel_point(off);
    double a1 = std::atan2(prev.y, prev.x);
    double a2 = std::atan2(cur.y, cur.x);
    double lo = std::min(a1, a2), hi = std::max(a1, a2);
    if (hi - lo > kPi) {
      // Arc crosses the downward direction; take the complementary wrap.
      double nlo = hi, nhi = lo + 2.0 * kPi;
      lo = nlo;
      hi = nhi;
    }
    lo = std::max(lo, 0.0);
    hi = std::min(hi, kPi);
    if (lo <= hi) blocked.push_back({lo, hi});
    prev = cur;
  }

  std::sort(blocked.begin(), blocked.end(),
            [](const Arc& a, const Arc& b) { return a.lo < b.lo; });

  // Count rays theta_r = pi*(r+1/2)/n_rays that fall inside the merged union.
  const double n = static_cast<double>(n_rays);
  std::size_t hit = 0;
  double cur_lo = 0.0, cur_hi = -1.0;
  auto flush = [&]() {
    if (cur_hi < cur_lo) return;
    double rmin = std::ceil(n * cur_lo / kPi - 0.5);
    double rmax = std::floor(n * cur_hi / kPi - 0.5);
    rmin = std::max(rmin, 0.0);
    rmax = std::min(rmax, n - 1.0);
    if (rmax >= rmin) hit += static_cast<std::size_t>(rmax - rmin) + 1;
  };
  for (const Arc& a : blocked) {
    if (cur_hi < cur_lo) {
      cur_lo = a.lo;
      cur_hi = a.hi;
    } else if (a.lo <= cur_hi) {
      cur_hi = std::max(cur_hi, a.hi);
    } else {
      flush();
      cur_lo = a.lo;
      cur_hi = a.hi;
    }
  }
  flush();

  return kPi * static_cast<double>(n_rays - hit) / n;
}

}  // namespace shadow
