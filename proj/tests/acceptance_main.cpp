// End-to-end acceptance checks. Each numbered check prints exactly one
// [PASS]/[FAIL] line with its measured quantities; the exit code is the
// number of failures. Statistical checks use frozen seeds.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "shadow/analysis.hpp"
#include "shadow/continuum.hpp"
#include "shadow/core.hpp"
#include "shadow/discrete.hpp"
#include "shadow/exposure.hpp"

using namespace shadow;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void record(int idx, const char* name, bool ok, const std::string& detail) {
  std::printf("[%s] %d %s: %s\n", ok ? "PASS" : "FAIL", idx, name, detail.c_str());
  if (!ok) ++failures;
}

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

double mode_center(const Histogram& h) {
  std::size_t best = 0;
  for (std::size_t b = 1; b < h.counts.size(); ++b)
    if (h.counts[b] > h.counts[best]) best = b;
  return 0.5 * (h.bin_edges[best] + h.bin_edges[best + 1]);
}

void height_range(const HeightField& f, double& lo, double& hi) {
  lo = hi = f.h[0];
  for (double v : f.h) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
}

struct MorphoFlags {
  double max_over_mean = 0.0;
  bool mode_bottom_half = false;
  bool mode_top_decile = false;
};

MorphoFlags morphology(const HeightField& f) {
  MorphoFlags m;
  double lo, hi;
  height_range(f, lo, hi);
  const double mode = mode_center(height_histogram(f, 64));
  m.max_over_mean = peak_statistics(f, 0.5).max_over_mean;
  m.mode_bottom_half = mode < lo + 0.5 * (hi - lo);
  m.mode_top_decile = mode >= lo + 0.9 * (hi - lo);
  return m;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  if (!f) return "<unreadable:" + p.string() + ">";
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

// ---- 1..3: ballistic runs at L=256, theta_max=60 deg, t=2000 --------------

static void check_discrete_block() {
  const std::size_t n_seeds = 5;
  std::vector<RunRecord> fall(n_seeds), remove(n_seeds);
  for (std::uint64_t s = 0; s < n_seeds; ++s) {
    DiscreteParams p;
    p.L = 256;
    p.theta_max = 60.0 * kPi / 180.0;
    p.t_end = 2000.0;
    p.snapshot_times = {2000.0};
    p.seed = s + 1;
    fall[s] = run_discrete(p);
    p.side_rule = SideRule::Remove;
    remove[s] = run_discrete(p);
  }

  // 1: conserved mass identity plus plateau-mode morphology
  bool all_exact = true;
  int mode_high = 0;
  double worst_mode_frac = 1.0;
  for (const auto& rec : fall) {
    for (const auto& smp : rec.samples) all_exact = all_exact && (smp.mean_h == smp.t);
    const auto& f = rec.snapshots.back().field;
    double lo, hi;
    height_range(f, lo, hi);
    const double frac = mode_center(height_histogram(f, 64)) / hi;
    worst_mode_frac = std::min(worst_mode_frac, frac);
    if (frac >= 0.85) ++mode_high;
  }
  record(1, "falldown mass identity and plateau mode",
         all_exact && mode_high * 2 > (int)n_seeds,
         fmt("mean_h==t at every sample: %s; mode/h_max >= 0.85 in %d/%zu seeds "
             "(min %.3f)",
             all_exact ? "yes" : "NO", mode_high, n_seeds, worst_mode_frac));

  // 2: roughness growth exponents, early vs late
  double b_early = 0, b_late = 0;
  for (const auto& rec : fall) {
    b_early += fit_exponent(rec.samples, 0.5, 10.0).beta;
    b_late += fit_exponent(rec.samples, 500.0, 2000.0).beta;
  }
  b_early /= n_seeds;
  b_late /= n_seeds;
  record(2, "falldown roughness exponents",
         std::abs(b_early - 0.5) <= 0.15 && std::abs(b_late - 1.0) <= 0.2,
         fmt("beta(0.5..10)=%.3f (want 0.5+-0.15), beta(500..2000)=%.3f "
             "(want 1.0+-0.2), 5-seed means",
             b_early, b_late));

  // 3: side-discard variant vs pure-shadow continuum at matched coverage,
  //    with falldown as the contrasting morphology
  int pair_ok = 0, fall_top = 0;
  double worst_ratio = 1e30;
  for (std::uint64_t s = 0; s < n_seeds; ++s) {
    const auto mr = morphology(remove[s].snapshots.back().field);

    ContinuumParams p;
    p.L = 256;
    p.dt = 0.05;
    p.R = 1.0;
    p.nu = 0.0;
    p.D = 1.0;
    p.model = ContinuumModel::PureShadow;
    p.t_end = remove[s].samples.back().mean_h;  // R=1: same mean coverage
    p.snapshot_times = {p.t_end};
    p.seed = s + 1;
    const auto ps = run_continuum(p, flat_field(256, 0.0));
    const auto mp = morphology(ps.snapshots.back().field);

    worst_ratio = std::min({worst_ratio, mr.max_over_mean, mp.max_over_mean});
    if (mr.max_over_mean >= 3.0 && mr.mode_bottom_half && mp.max_over_mean >= 3.0 &&
        mp.mode_bottom_half)
      ++pair_ok;
    if (morphology(fall[s].snapshots.back().field).mode_top_decile) ++fall_top;
  }
  record(3, "side-discard and pure-shadow share groove morphology",
         pair_ok * 2 > (int)n_seeds && fall_top * 2 > (int)n_seeds,
         fmt("max/mean>=3 with bottom-half mode in %d/%zu matched pairs "
             "(min max/mean %.1f); falldown mode in top decile in %d/%zu",
             pair_ok, n_seeds, worst_ratio, fall_top, n_seeds));
}

// ---- 4: pure-shadow deterministic growth-rate identity --------------------

static void check_rate_identity() {
  ContinuumParams p;
  p.L = 256;
  p.dt = 0.05;
  p.R = 1.0;
  p.nu = 0.0;
  p.D = 0.0;
  p.model = ContinuumModel::PureShadow;
  p.t_end = 1.0;  // steppers are driven directly below

  RandomSource init(2024);
  SchemeState st;
  st.field.h.resize(p.L);
  st.field.dx = 1.0;
  for (auto& v : st.field.h) v = init.uniform(0.0, 30.0);

  RandomSource rng(3);
  double prev = std::accumulate(st.field.h.begin(), st.field.h.end(), 0.0) / p.L;
  double worst = 0.0;
  for (int n = 0; n < 10000; ++n) {
    step_pure_shadow(st, p, rng);
    const double m =
        std::accumulate(st.field.h.begin(), st.field.h.end(), 0.0) / p.L;
    worst = std::max(worst, std::abs((m - prev) / (p.dt * p.R) - 1.0));
    prev = m;
  }
  record(4, "pure-shadow mean grows by dt*R every step", worst <= 1e-9,
         fmt("worst per-step relative deviation %.2e over 10^4 steps on a rough "
             "field (limit 1e-9)",
             worst));
}

// ---- 5: exposure angle vs ray oracle and fast kernel ----------------------

static void check_exposure() {
  double worst_oracle = 0.0, worst_fast = 0.0;
  for (int fcase = 0; fcase < 100; ++fcase) {
    RandomSource rng(9001 + (std::uint64_t)fcase);
    HeightField f;
    f.h.resize(128);
    f.dx = 1.0;
    for (auto& v : f.h) v = rng.uniform(0.0, 10.0);

    const auto fast = exposure_profile_fast(f);
    for (std::size_t i = 0; i < f.size(); ++i) {
      const double naive = exposure_angle(f, i, 64);
      worst_fast = std::max(worst_fast, std::abs(fast.omega[i] - naive));
      worst_oracle =
          std::max(worst_oracle, std::abs(naive - exposure_oracle(f, i, 100000)));
    }
  }
  record(5, "exposure angle agrees with the ray oracle", worst_oracle <= 1e-3 && worst_fast <= 1e-12,
         fmt("max |angle - 1e5-ray oracle| %.2e (limit 1e-3); max |fast - naive| "
             "%.2e (limit 1e-12); 100 random fields, L=128",
             worst_oracle, worst_fast));
}

// ---- 6: seeded-mode growth vs linear dispersion prediction ----------------

static void check_dispersion_growth() {
  DispersionParams dp;  // alpha=0.7, omega_bar=pi, R=nu=1
  const double kstar = critical_wavenumber(dp);
  const std::size_t L = 256;
  const double scale = (double)L / (2.0 * kPi);

  auto measured_rate = [&](double k_target, double& k_out) {
    const auto m = (std::size_t)std::llround(k_target * scale);
    k_out = 2.0 * kPi * (double)m / (double)L;
    ContinuumParams p;
    p.L = L;
    p.dt = 0.01;
    p.R = 1.0;
    p.nu = 1.0;
    p.D = 0.0;
    p.model = ContinuumModel::NonlinearAniso;
    p.t_end = 1.0;
    SchemeState st;
    st.field.h.resize(L);
    st.field.dx = 1.0;
    for (std::size_t j = 0; j < L; ++j)
      st.field.h[j] = 1e-3 * std::cos(2.0 * kPi * (double)(m * j) / (double)L);
    RandomSource rng(1);
    const double a0 = fourier_mode(st.field, m);
    for (int n = 0; n < 100; ++n) step_nonlinear(st, p, rng);
    return std::log(fourier_mode(st.field, m) / a0) / (100.0 * p.dt);
  };

  double k_q, k_h, k_2;
  const double r_q = measured_rate(kstar / 4.0, k_q);
  const double r_h = measured_rate(kstar / 2.0, k_h);
  const double r_2 = measured_rate(2.0 * kstar, k_2);
  const double dev_q = std::abs(r_q / linear_growth_rate(k_q, dp) - 1.0);
  const double dev_h = std::abs(r_h / linear_growth_rate(k_h, dp) - 1.0);

  record(6, "seeded-mode growth matches the dispersion relation",
         dev_q <= 0.30 && dev_h <= 0.30 && r_2 < 0.0,
         fmt("deviation from sigma(k): %.0f%% at k=%.3f, %.0f%% at k=%.3f "
             "(limit 30%%); rate at 2k* %.4f (must be negative)",
             100.0 * dev_q, k_q, 100.0 * dev_h, k_h, r_2));
}

// ---- 7: nonlinear model roughness exponents -------------------------------

static void check_nonlinear_exponents() {
  const int n_seeds = 3;
  std::vector<RunRecord> recs(n_seeds);
  std::vector<std::thread> pool;
  for (int s = 0; s < n_seeds; ++s)
    pool.emplace_back([&recs, s] {
      ContinuumParams p;
      p.L = 512;
      p.dt = 0.01;
      p.R = 1.0;
      p.nu = 1.0;
      p.D = 1.0;
      p.model = ContinuumModel::NonlinearAniso;
      p.t_end = 1000.0;
      p.seed = (std::uint64_t)s + 1;
      recs[s] = run_continuum(p, flat_field(512, 0.0));
    });
  for (auto& t : pool) t.join();

  double b1 = 0, b2 = 0, b3 = 0;
  for (const auto& rec : recs) {
    b1 += fit_exponent(rec.samples, 0.05, 1.0).beta;
    b2 += fit_exponent(rec.samples, 2.0, 50.0).beta;
    b3 += fit_exponent(rec.samples, 100.0, 1000.0).beta;
  }
  b1 /= n_seeds;
  b2 /= n_seeds;
  b3 /= n_seeds;
  record(7, "nonlinear roughness exponents",
         std::abs(b1 - 0.5) <= 0.15 && std::abs(b2 - 0.4) <= 0.15 && b3 >= 0.7,
         fmt("beta(0.05..1)=%.3f (want 0.5+-0.15), beta(2..50)=%.3f "
             "(want 0.4+-0.15), beta(100..1000)=%.3f (want >=0.7); 3-seed means",
             b1, b2, b3));
}

// ---- 8: CLI determinism ---------------------------------------------------

static void check_cli_determinism() {
#ifndef SHADOWGROWTH_CLI_PATH
  record(8, "identical CLI invocations are byte-identical", false,
         "CLI path not compiled in");
#else
  const fs::path root =
      fs::temp_directory_path() / "shadowgrowth_acceptance_cli";
  fs::remove_all(root);
  std::string common = std::string(SHADOWGROWTH_CLI_PATH) +
                       " run --mode pure_shadow --L 64 --t-end 5 --D 1 --seed 42"
                       " --snapshot-times 5 --out-dir ";
  const fs::path a = root / "a", b = root / "b";
  const int rc1 = std::system((common + a.string() + " >/dev/null").c_str());
  const int rc2 = std::system((common + b.string() + " >/dev/null").c_str());
  const std::string sa = slurp(a / "series.csv"), sb = slurp(b / "series.csv");
  const bool same_series = !sa.empty() && sa.front() == '#' && sa == sb;
  const bool same_snap =
      slurp(a / "snapshot_t5.csv") == slurp(b / "snapshot_t5.csv");
  record(8, "identical CLI invocations are byte-identical",
         rc1 == 0 && rc2 == 0 && same_series && same_snap,
         fmt("exit codes %d,%d; series.csv %s, snapshot %s", rc1, rc2,
             same_series ? "identical" : "DIFFER",
             same_snap ? "identical" : "DIFFER"));
  fs::remove_all(root);
#endif
}

// ---- 9: vertical-rain run against the independent Poisson prediction ------

static void check_random_deposition() {
  // E[W^2] = t*(1 - 1/L) for independent per-column Poisson counts.
  const double target = 1.0 - 1.0 / 64.0;
  double acc = 0.0;
  const int n_seeds = 20;
  for (std::uint64_t s = 101; s < 101 + n_seeds; ++s) {
    DiscreteParams p;
    p.L = 64;
    p.theta_max = 0.0;
    p.t_end = 1000.0;
    p.seed = s;
    const auto rec = run_discrete(p);
    const auto& last = rec.samples.back();
    acc += last.w * last.w / last.t;
  }
  acc /= n_seeds;
  const double rel = std::abs(acc / target - 1.0);
  record(9, "vertical rain matches the Poisson roughness law", rel <= 0.05,
         fmt("mean W^2/t = %.4f over %d seeds vs %.6f (deviation %.1f%%, "
             "limit 5%%)",
             acc, n_seeds, target, 100.0 * rel));
}

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  std::printf("acceptance checks (frozen seeds; exit code = failures)\n");
  try {
    check_discrete_block();
    check_rate_identity();
    check_exposure();
    check_dispersion_growth();
    check_nonlinear_exponents();
    check_cli_determinism();
    check_random_deposition();
  } catch (const std::exception& e) {
    std::printf("[FAIL] aborted: %s\n", e.what());
    ++failures;
  }
  std::printf("%d failure(s), %.1f s\n", failures,
              std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                  .count());
  return failures;
}
