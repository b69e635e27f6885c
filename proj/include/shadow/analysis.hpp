#pragma once

#include <cstddef>
#include <vector>

#include "shadow/core.hpp"

namespace shadow {

// Height distribution over uniform bins spanning [min h, max h].
struct Histogram {
  std::vector<double> bin_edges;     // n_bins + 1 edges (2 equal ones if degenerate)
  std::vector<std::size_t> counts;   // per-bin occupation
  std::vector<double> frequencies;   // counts / total, sums to 1
  bool degenerate = false;           // constant field: everything in one bin
};

// Least-squares power-law fit of W against t on log-log axes.
struct ExponentFit {
  double beta = 0.0;     // fitted exponent (slope of log W vs log t)
  double beta_se = 0.0;  // standard error of the slope
  std::size_t n_used = 0;
};

struct PeakStats {
  std::size_t n_peaks = 0;     // cyclic runs of sites above the threshold
  double max_over_mean = 1.0;  // h_max / mean h
};

// Interface width: sqrt((1/L) sum_i (h_i - mean)^2).
double roughness(const HeightField& field);
double roughness(const LatticeField& field);

// Uniform-bin histogram of the heights; entries equal to the maximum land in
// the last bin. A constant field yields a single flagged bin.
Histogram height_histogram(const HeightField& field, std::size_t n_bins);

// Fit W ~ t^beta over samples with t_lo <= t <= t_hi. Requires at least 5
// samples in the window, all with t > 0 and W > 0.
ExponentFit fit_exponent(const std::vector<Sample>& samples, double t_lo, double t_hi);

// Amplitude |(1/L) sum_j (h_j - mean) exp(-2*pi*i*k_index*j/L)| of the
// discrete Fourier mode at wavenumber 2*pi*k_index/(L*dx). k_index <= L/2.
double fourier_mode(const HeightField& field, std::size_t k_index);

// Count maximal cyclic runs of sites with h >= h_min + rel_threshold*(h_max -
// h_min) and report h_max over mean h. Constant field: (0 peaks, ratio 1).
// The ratio requires a positive mean height.
PeakStats peak_statistics(const HeightField& field, double rel_threshold = 0.5);

}  // namespace shadow
