#include "shadow/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace shadow {

namespace {

template <typename T>
double roughness_impl(const BasicHeightField<T>& field) {
  if (field.size() == 0) throw ValidationError("roughness of an empty field");
  const double L = static_cast<double>(field.size());
  double sum = 0.0;
  for (T v : field.h) sum += static_cast<double>(v);
  const double mean = sum / L;
  double ss = 0.0;
  for (T v : field.h) {
    const double d = static_cast<double>(v) - mean;
    ss += d * d;
  }
  return std::sqrt(ss / L);
}

}  // namespace

double roughness(const HeightField& field) { return roughness_impl(field); }
double roughness(const LatticeField& field) { return roughness_impl(field); }

Histogram height_histogram(const HeightField& field, std::size_t n_bins) {
  if (n_bins < 2) throw ValidationError("histogram needs at least 2 bins");
  if (field.size() == 0) throw ValidationError("histogram of an empty field");

  const auto [min_it, max_it] = std::minmax_element(field.h.begin(), field.h.end());
  const double lo = *min_it, hi = *max_it;
  const double total = static_cast<double>(field.size());

  Histogram out;
  if (lo == hi) {
    out.degenerate = true;
    out.bin_edges = {lo, hi};
    out.counts = {field.size()};
    out.frequencies = {1.0};
    return out;
  }

  out.bin_edges.resize(n_bins + 1);
  for (std::size_t b = 0; b <= n_bins; ++b)
    out.bin_edges[b] = lo + (hi - lo) * static_cast<double>(b) / static_cast<double>(n_bins);
  out.counts.assign(n_bins, 0);
  for (double v : field.h) {
    auto b = static_cast<std::size_t>((v - lo) / (hi - lo) * static_cast<double>(n_bins));
    if (b >= n_bins) b = n_bins - 1;  // maximum value belongs to the last bin
    ++out.counts[b];
  }
  out.frequencies.resize(n_bins);
  for (std::size_t b = 0; b < n_bins; ++b)
    out.frequencies[b] = static_cast<double>(out.counts[b]) / total;
  return out;
}

ExponentFit fit_exponent(const std::vector<Sample>& samples, double t_lo, double t_hi) {
  std::vector<double> xs, ys;
  for (const Sample& s : samples) {
    if (s.t < t_lo || s.t > t_hi) continue;
    if (s.t <= 0.0) throw ValidationError("non-positive time in fit window");
    if (s.w <= 0.0) throw ValidationError("non-positive roughness in fit window");
    xs.push_back(std::log(s.t));
    ys.push_back(std::log(s.w));
  }
  const std::size_t n = xs.size();
  if (n < 5)
    throw ValidationError("exponent fit needs at least 5 samples in [" +
                          std::to_string(t_lo) + ", " + std::to_string(t_hi) +
                          "], got " + std::to_string(n));

  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);

  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0.0) throw ValidationError("exponent fit window spans a single time");

  ExponentFit fit;
  fit.n_used = n;
  fit.beta = sxy / sxx;
  double sse = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = ys[i] - my - fit.beta * (xs[i] - mx);
    sse += r * r;
  }
  fit.beta_se = std::sqrt(sse / static_cast<double>(n - 2) / sxx);
  return fit;
}

double fourier_mode(const HeightField& field, std::size_t k_index) {
  const std::size_t L = field.size();
  if (L == 0) throw ValidationError("fourier mode of an empty field");
  if (k_index > L / 2)
    throw ValidationError("k_index must not exceed L/2");

  double mean = 0.0;
  for (double v : field.h) mean += v;
  mean /= static_cast<double>(L);

  double re = 0.0, im = 0.0;
  const double w = -2.0 * kPi * static_cast<double>(k_index) / static_cast<double>(L);
  for (std::size_t j = 0; j < L; ++j) {
    const double d = field.h[j] - mean;
    const double a = w * static_cast<double>(j);
    re += d * std::cos(a);
    im += d * std::sin(a);
  }
  re /= static_cast<double>(L);
  im /= static_cast<double>(L);
  return std::hypot(re, im);
}

PeakStats peak_statistics(const HeightField& field, double rel_threshold) {
  if (!(rel_threshold > 0.0 && rel_threshold < 1.0))
    throw ValidationError("rel_threshold must lie in (0, 1)");
  const std::size_t L = field.size();
  if (L == 0) throw ValidationError("peak statistics of an empty field");

  const auto [min_it, max_it] = std::minmax_element(field.h.begin(), field.h.end());
  const double lo = *min_it, hi = *max_it;
  if (lo == hi) return PeakStats{0, 1.0};

  double mean = 0.0;
  for (double v : field.h) mean += v;
  mean /= static_cast<double>(L);
  if (mean <= 0.0)
    throw ValidationError("mean height must be positive for the max/mean ratio");

  const double thr = lo + rel_threshold * (hi - lo);
  std::vector<char> above(L);
  for (std::size_t i = 0; i < L; ++i) above[i] = field.h[i] >= thr;

  std::size_t runs = 0;
  for (std::size_t i = 0; i < L; ++i)
    if (above[i] && !above[(i + L - 1) % L]) ++runs;
  if (runs == 0) runs = 1;  // every site above: one cyclic run

  return PeakStats{runs, hi / mean};
}

}  // namespace shadow
