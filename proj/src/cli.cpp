#include "shadow/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <locale>
#include <string>
#include <system_error>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "shadow/analysis.hpp"
#include "shadow/continuum.hpp"
#include "shadow/core.hpp"
#include "shadow/discrete.hpp"

namespace shadow::cli {
namespace {

namespace fs = std::filesystem;

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Short label for snapshot-time file names (t=2000 -> "2000", t=0.5 -> "0.5").
std::string fmt_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_double(const std::string& raw, const std::string& what) {
  const std::string s = trim(raw);
  double v{};
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size())
    throw ValidationError("bad number for " + what + ": '" + raw + "'");
  return v;
}

std::uint64_t parse_u64(const std::string& raw, const std::string& what) {
  const std::string s = trim(raw);
  std::uint64_t v{};
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size())
    throw ValidationError("bad integer for " + what + ": '" + raw + "'");
  return v;
}

std::vector<double> parse_times(const std::string& raw) {
  std::vector<double> out;
  std::size_t start = 0;
  const std::string s = trim(raw);
  if (s.empty()) return out;
  while (true) {
    const std::size_t comma = s.find(',', start);
    out.push_back(parse_double(s.substr(start, comma - start), "snapshot_times"));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string join_times(const std::vector<double>& ts) {
  std::string out;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i) out += ',';
    out += fmt17(ts[i]);
  }
  return out;
}

struct Options {
  std::string mode;
  std::size_t L = 256;
  double t_end = 0.0;
  std::uint64_t seed = 1;
  std::size_t samples_per_decade = 20;
  std::vector<double> snapshot_times;
  std::size_t histogram_bins = 64;
  std::string out_dir;

  double theta_max_deg = 60.0;
  std::string side_rule = "falldown";

  double dt = 0.0;  // 0 or absent: model default (0.05 pure_shadow, 0.01 nonlinear)
  double dx = 1.0;
  double R = 1.0;
  double nu = 1.0;
  double D = 1.0;
  double g_exponent = 2.0;
  std::size_t exposure_window = 0;  // 0: fast floor(L/2) kernel

  double alpha = 0.7;
  double omega_bar = kPi;

  std::string input;
  double rel_threshold = 0.5;

  std::string seeds_range;  // "a..b": sweep, one subdirectory per seed
  std::string config_path;
};

// ---- config file ---------------------------------------------------------

using KeyValues = std::vector<std::pair<std::string, std::string>>;

KeyValues read_config_file(const fs::path& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot read config file " + path.string());
  KeyValues out;
  std::string line;
  int ln = 0;
  while (std::getline(f, line)) {
    ++ln;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const std::size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw ValidationError("config line " + std::to_string(ln) + " is not 'key = value'");
    std::string key = trim(t.substr(0, eq));
    if (key.empty())
      throw ValidationError("config line " + std::to_string(ln) + " has an empty key");
    out.emplace_back(std::move(key), trim(t.substr(eq + 1)));
  }
  return out;
}

struct KeyBinding {
  const char* key;   // config-file key
  const char* flag;  // matching CLI flag, for precedence
  std::function<void(const std::string&)> apply;
};

// Config values fill in only where the matching flag was not passed.
void apply_config(const CLI::App& sub, const std::string& path,
                  const std::vector<KeyBinding>& binds) {
  for (const auto& [key, value] : read_config_file(path)) {
    const KeyBinding* bind = nullptr;
    for (const auto& b : binds)
      if (key == b.key) {
        bind = &b;
        break;
      }
    if (!bind) throw ValidationError("unknown config key '" + key + "'");
    if (sub.get_option(bind->flag)->count() == 0) bind->apply(value);
  }
}

// ---- output helpers ------------------------------------------------------

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir.string() + ": " + ec.message());
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path.string() + " for writing");
  f.imbue(std::locale::classic());
  return f;
}

void finish(std::ofstream& f, const fs::path& path) {
  f.flush();
  if (!f) throw IoError("write failed: " + path.string());
}

void write_manifest(const fs::path& dir, const KeyValues& kv) {
  const fs::path path = dir / "manifest.cfg";
  auto f = open_out(path);
  f << "# resolved configuration; rerun with --config " << path.string()
    << " to reproduce\n";
  for (const auto& [k, v] : kv) f << k << " = " << v << "\n";
  finish(f, path);
}

void write_series(const fs::path& dir, const std::vector<Sample>& samples) {
  const fs::path path = dir / "series.csv";
  auto f = open_out(path);
  f << "# roughness time series; t in monolayer time units, w and mean_h in height units\n";
  f << "t,w,mean_h\n";
  for (const Sample& s : samples)
    f << fmt17(s.t) << ',' << fmt17(s.w) << ',' << fmt17(s.mean_h) << '\n';
  finish(f, path);
}

void write_snapshot(const fs::path& dir, const Snapshot& snap) {
  const std::string label = fmt_label(snap.t);
  const fs::path path = dir / ("snapshot_t" + label + ".csv");
  auto f = open_out(path);
  f << "# interface snapshot at t=" << label
    << "; x in substrate units, h in height units\n";
  f << "x,h\n";
  for (std::size_t i = 0; i < snap.field.size(); ++i)
    f << fmt17(static_cast<double>(i) * snap.field.dx) << ',' << fmt17(snap.field.h[i])
      << '\n';
  finish(f, path);
}

void write_histogram_file(const fs::path& path, const std::string& what,
                          const Histogram& hist) {
  auto f = open_out(path);
  f << "# height distribution " << what
    << "; bin_center in height units, frequency sums to 1\n";
  f << "bin_center,count,frequency\n";
  for (std::size_t b = 0; b < hist.counts.size(); ++b) {
    const double center = 0.5 * (hist.bin_edges[b] + hist.bin_edges[b + 1]);
    f << fmt17(center) << ',' << hist.counts[b] << ',' << fmt17(hist.frequencies[b])
      << '\n';
  }
  finish(f, path);
}

// ---- subcommand drivers --------------------------------------------------

KeyValues manifest_for_run(const Options& o, std::uint64_t seed, const fs::path& dir,
                           double dt_resolved, bool with_seeds) {
  KeyValues kv;
  kv.emplace_back("mode", o.mode);
  kv.emplace_back("L", std::to_string(o.L));
  kv.emplace_back("t_end", fmt17(o.t_end));
  if (o.mode == "discrete") {
    kv.emplace_back("theta_max_deg", fmt17(o.theta_max_deg));
    kv.emplace_back("side_rule", o.side_rule);
  } else {
    kv.emplace_back("dt", fmt17(dt_resolved));
    kv.emplace_back("dx", fmt17(o.dx));
    kv.emplace_back("R", fmt17(o.R));
    kv.emplace_back("nu", fmt17(o.nu));
    kv.emplace_back("D", fmt17(o.D));
    kv.emplace_back("g_exponent", fmt17(o.g_exponent));
    kv.emplace_back("exposure_window", std::to_string(o.exposure_window));
  }
  if (with_seeds)
    kv.emplace_back("seeds", o.seeds_range);
  else
    kv.emplace_back("seed", std::to_string(seed));
  kv.emplace_back("samples_per_decade", std::to_string(o.samples_per_decade));
  kv.emplace_back("snapshot_times", join_times(o.snapshot_times));
  kv.emplace_back("histogram_bins", std::to_string(o.histogram_bins));
  kv.emplace_back("out_dir", dir.string());
  return kv;
}

double resolve_dt(const Options& o) {
  if (o.dt > 0.0) return o.dt;
  return o.mode == "pure_shadow" ? 0.05 : 0.01;
}

void run_one_seed(const Options& o, std::uint64_t seed, const fs::path& dir) {
  ensure_dir(dir);
  RunRecord rec;
  if (o.mode == "discrete") {
    DiscreteParams p;
    p.L = o.L;
    p.theta_max = o.theta_max_deg * kPi / 180.0;
    if (o.side_rule == "falldown")
      p.side_rule = SideRule::FallDown;
    else if (o.side_rule == "remove")
      p.side_rule = SideRule::Remove;
    else
      throw ValidationError("side_rule must be 'falldown' or 'remove'");
    p.t_end = o.t_end;
    p.snapshot_times = o.snapshot_times;
    p.seed = seed;
    p.samples_per_decade = o.samples_per_decade;
    validate(p);
    write_manifest(dir, manifest_for_run(o, seed, dir, 0.0, false));
    rec = run_discrete(p);
  } else {
    ContinuumParams p;
    p.L = o.L;
    p.dx = o.dx;
    p.dt = resolve_dt(o);
    p.R = o.R;
    p.nu = o.nu;
    p.D = o.D;
    p.model = o.mode == "pure_shadow" ? ContinuumModel::PureShadow
                                      : ContinuumModel::NonlinearAniso;
    p.g_exponent = o.g_exponent;
    p.t_end = o.t_end;
    p.snapshot_times = o.snapshot_times;
    p.seed = seed;
    p.exposure_window = o.exposure_window;
    p.samples_per_decade = o.samples_per_decade;
    validate(p);
    write_manifest(dir, manifest_for_run(o, seed, dir, p.dt, false));
    rec = run_continuum(p, flat_field(o.L, 0.0, o.dx));
  }

  write_series(dir, rec.samples);
  for (const Snapshot& snap : rec.snapshots) {
    write_snapshot(dir, snap);
    if (o.histogram_bins >= 2) {
      const std::string label = fmt_label(snap.t);
      write_histogram_file(dir / ("histogram_t" + label + ".csv"), "at t=" + label,
                           height_histogram(snap.field, o.histogram_bins));
    }
  }
}

std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& raw) {
  const std::size_t dots = raw.find("..");
  if (dots == std::string::npos)
    throw ValidationError("seeds must be a range 'a..b', got '" + raw + "'");
  const std::uint64_t a = parse_u64(raw.substr(0, dots), "seeds");
  const std::uint64_t b = parse_u64(raw.substr(dots + 2), "seeds");
  if (b < a) throw ValidationError("seeds range must satisfy a <= b");
  if (b - a >= 1000) throw ValidationError("seeds range too large (limit 1000)");
  return {a, b};
}

void cmd_run(const Options& o, const fs::path& out_dir) {
  if (o.mode != "discrete" && o.mode != "pure_shadow" && o.mode != "nonlinear")
    throw ValidationError("mode must be discrete, pure_shadow or nonlinear");

  if (o.seeds_range.empty()) {
    run_one_seed(o, o.seed, out_dir);
    return;
  }

  const auto [a, b] = parse_seed_range(o.seeds_range);
  ensure_dir(out_dir);
  write_manifest(out_dir, manifest_for_run(o, 0, out_dir, resolve_dt(o), true));

  std::vector<std::uint64_t> seeds;
  for (std::uint64_t s = a; s <= b; ++s) seeds.push_back(s);
  std::vector<std::exception_ptr> errors(seeds.size());

  std::size_t width = std::thread::hardware_concurrency();
  if (width == 0) width = 1;
  for (std::size_t base = 0; base < seeds.size(); base += width) {
    const std::size_t stop = std::min(base + width, seeds.size());
    std::vector<std::thread> pool;
    pool.reserve(stop - base);
    for (std::size_t i = base; i < stop; ++i) {
      pool.emplace_back([&o, &out_dir, &seeds, &errors, i] {
        try {
          run_one_seed(o, seeds[i],
                       out_dir / ("seed_" + std::to_string(seeds[i])));
        } catch (...) {
          errors[i] = std::current_exception();
        }
      });
    }
    for (std::thread& t : pool) t.join();
  }
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);
}

void cmd_disperse(const Options& o, const fs::path& out_dir) {
  DispersionParams dp{o.R, o.nu, o.omega_bar, o.alpha};
  const double kstar = critical_wavenumber(dp);

  ensure_dir(out_dir);
  KeyValues kv;
  kv.emplace_back("mode", "dispersion_scan");
  kv.emplace_back("R", fmt17(o.R));
  kv.emplace_back("nu", fmt17(o.nu));
  kv.emplace_back("alpha", fmt17(o.alpha));
  kv.emplace_back("omega_bar", fmt17(o.omega_bar));
  kv.emplace_back("out_dir", out_dir.string());
  write_manifest(out_dir, kv);

  const fs::path path = out_dir / "dispersion.csv";
  auto f = open_out(path);
  f << "# linear growth rate sigma(k) = 2*alpha*R*k/omega_bar - nu*k^2;"
       " k in 1/length units, sigma in 1/time units\n";
  f << "# k_star = " << fmt17(kstar) << "\n";
  f << "k,sigma\n";
  for (int i = 0; i <= 100; ++i) {
    const double k = 2.0 * kstar * (static_cast<double>(i) / 100.0);
    f << fmt17(k) << ',' << fmt17(linear_growth_rate(k, dp)) << '\n';
  }
  finish(f, path);
}

HeightField read_snapshot_csv(const fs::path& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot read snapshot file " + path.string());
  std::vector<double> xs, hs;
  std::string line;
  int ln = 0;
  bool header_skipped = false;
  while (std::getline(f, line)) {
    ++ln;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const std::size_t comma = t.find(',');
    if (comma == std::string::npos)
      throw ValidationError("snapshot line " + std::to_string(ln) + " is not 'x,h'");
    if (!header_skipped) {
      header_skipped = true;
      const std::string first = trim(t.substr(0, comma));
      double probe{};
      auto [p, ec] = std::from_chars(first.data(), first.data() + first.size(), probe);
      if (ec != std::errc{} || p != first.data() + first.size()) continue;  // header row
    }
    xs.push_back(parse_double(t.substr(0, comma), "x"));
    hs.push_back(parse_double(t.substr(comma + 1), "h"));
  }
  if (hs.size() < 4) throw ValidationError("snapshot has fewer than 4 sites");
  HeightField field;
  field.h = std::move(hs);
  field.dx = xs.size() >= 2 ? xs[1] - xs[0] : 1.0;
  if (!(field.dx > 0.0)) throw ValidationError("snapshot x column must be increasing");
  return field;
}

void cmd_analyze(const Options& o, const fs::path& out_dir) {
  if (o.input.empty()) throw ValidationError("analyze requires --input");
  const HeightField field = read_snapshot_csv(o.input);

  ensure_dir(out_dir);
  KeyValues kv;
  kv.emplace_back("mode", "analyze");
  kv.emplace_back("input", o.input);
  kv.emplace_back("histogram_bins", std::to_string(o.histogram_bins));
  kv.emplace_back("rel_threshold", fmt17(o.rel_threshold));
  kv.emplace_back("out_dir", out_dir.string());
  write_manifest(out_dir, kv);

  const double w = roughness(field);
  double mean = 0.0, lo = field.h[0], hi = field.h[0];
  for (double v : field.h) {
    mean += v;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  mean /= static_cast<double>(field.size());
  const PeakStats peaks = peak_statistics(field, o.rel_threshold);

  const fs::path spath = out_dir / "summary.csv";
  auto f = open_out(spath);
  f << "# snapshot diagnostics; w, mean_h, h_min, h_max in height units,"
       " max_over_mean dimensionless\n";
  f << "w,mean_h,h_min,h_max,n_peaks,max_over_mean\n";
  f << fmt17(w) << ',' << fmt17(mean) << ',' << fmt17(lo) << ',' << fmt17(hi) << ','
    << peaks.n_peaks << ',' << fmt17(peaks.max_over_mean) << '\n';
  finish(f, spath);

  if (o.histogram_bins >= 2)
    write_histogram_file(out_dir / "histogram.csv",
                         "of " + fs::path(o.input).filename().string(),
                         height_histogram(field, o.histogram_bins));
}

}  // namespace

int run_main(int argc, const char* const* argv) {
  Options o;
  CLI::App app{"shadowed thin-film growth simulator"};
  app.require_subcommand(1);

  CLI::App* run = app.add_subcommand("run", "simulate one model and write data files");
  run->add_option("--mode", o.mode, "discrete | pure_shadow | nonlinear");
  run->add_option("--L", o.L, "number of lattice sites");
  run->add_option("--t-end", o.t_end, "end time in monolayer units");
  run->add_option("--seed", o.seed, "RNG seed");
  run->add_option("--seeds", o.seeds_range, "seed sweep a..b, one subdirectory each");
  run->add_option("--theta-max-deg", o.theta_max_deg,
                  "discrete: max incidence angle in degrees");
  run->add_option("--side-rule", o.side_rule, "discrete: falldown | remove");
  run->add_option("--dt", o.dt, "continuum: time step (default 0.05 pure_shadow, 0.01 nonlinear)");
  run->add_option("--dx", o.dx, "continuum: lattice spacing");
  run->add_option("--R", o.R, "continuum: deposition rate");
  run->add_option("--nu", o.nu, "continuum: diffusion coefficient (nonlinear)");
  run->add_option("--D", o.D, "continuum: noise strength");
  run->add_option("--g-exponent", o.g_exponent, "continuum: exposure weighting power");
  run->add_option("--exposure-window", o.exposure_window,
                  "continuum: horizon window in sites; 0 = fast floor(L/2) kernel");
  run->add_option("--samples-per-decade", o.samples_per_decade,
                  "log-spaced sample density for series.csv");
  run->add_option("--snapshot-times", o.snapshot_times, "times to store full interfaces");
  run->add_option("--histogram-bins", o.histogram_bins,
                  "bins for per-snapshot height histograms; <2 disables");
  run->add_option("--out-dir", o.out_dir, "output directory");
  run->add_option("--config", o.config_path, "key = value file; flags take precedence");

  CLI::App* disperse = app.add_subcommand("disperse", "tabulate sigma(k) and k*");
  disperse->add_option("--R", o.R, "deposition rate");
  disperse->add_option("--nu", o.nu, "diffusion coefficient");
  disperse->add_option("--alpha", o.alpha, "linearization constant");
  disperse->add_option("--omega-bar", o.omega_bar, "mean exposure angle in radians");
  disperse->add_option("--out-dir", o.out_dir, "output directory");
  disperse->add_option("--config", o.config_path, "key = value file; flags take precedence");

  CLI::App* analyze = app.add_subcommand("analyze", "recompute diagnostics from a snapshot");
  analyze->add_option("--input", o.input, "snapshot_t*.csv file to read");
  analyze->add_option("--histogram-bins", o.histogram_bins, "histogram bins; <2 disables");
  analyze->add_option("--rel-threshold", o.rel_threshold,
                      "relative height threshold for peak counting");
  analyze->add_option("--out-dir", o.out_dir, "output directory");
  analyze->add_option("--config", o.config_path, "key = value file; flags take precedence");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const CLI::App* active = run->parsed() ? run : disperse->parsed() ? disperse : analyze;

    std::vector<KeyBinding> binds;
    if (active == run) {
      binds = {
          {"mode", "--mode", [&](const std::string& v) { o.mode = v; }},
          {"L", "--L", [&](const std::string& v) { o.L = parse_u64(v, "L"); }},
          {"t_end", "--t-end", [&](const std::string& v) { o.t_end = parse_double(v, "t_end"); }},
          {"seed", "--seed", [&](const std::string& v) { o.seed = parse_u64(v, "seed"); }},
          {"seeds", "--seeds", [&](const std::string& v) { o.seeds_range = v; }},
          {"theta_max_deg", "--theta-max-deg",
           [&](const std::string& v) { o.theta_max_deg = parse_double(v, "theta_max_deg"); }},
          {"side_rule", "--side-rule", [&](const std::string& v) { o.side_rule = v; }},
          {"dt", "--dt", [&](const std::string& v) { o.dt = parse_double(v, "dt"); }},
          {"dx", "--dx", [&](const std::string& v) { o.dx = parse_double(v, "dx"); }},
          {"R", "--R", [&](const std::string& v) { o.R = parse_double(v, "R"); }},
          {"nu", "--nu", [&](const std::string& v) { o.nu = parse_double(v, "nu"); }},
          {"D", "--D", [&](const std::string& v) { o.D = parse_double(v, "D"); }},
          {"g_exponent", "--g-exponent",
           [&](const std::string& v) { o.g_exponent = parse_double(v, "g_exponent"); }},
          {"exposure_window", "--exposure-window",
           [&](const std::string& v) { o.exposure_window = parse_u64(v, "exposure_window"); }},
          {"samples_per_decade", "--samples-per-decade",
           [&](const std::string& v) {
             o.samples_per_decade = parse_u64(v, "samples_per_decade");
           }},
          {"snapshot_times", "--snapshot-times",
           [&](const std::string& v) { o.snapshot_times = parse_times(v); }},
          {"histogram_bins", "--histogram-bins",
           [&](const std::string& v) { o.histogram_bins = parse_u64(v, "histogram_bins"); }},
          {"out_dir", "--out-dir", [&](const std::string& v) { o.out_dir = v; }},
      };
    } else if (active == disperse) {
      binds = {
          {"mode", "--out-dir", [&](const std::string&) {}},  // echoed by manifests; ignored
          {"R", "--R", [&](const std::string& v) { o.R = parse_double(v, "R"); }},
          {"nu", "--nu", [&](const std::string& v) { o.nu = parse_double(v, "nu"); }},
          {"alpha", "--alpha", [&](const std::string& v) { o.alpha = parse_double(v, "alpha"); }},
          {"omega_bar", "--omega-bar",
           [&](const std::string& v) { o.omega_bar = parse_double(v, "omega_bar"); }},
          {"out_dir", "--out-dir", [&](const std::string& v) { o.out_dir = v; }},
      };
    } else {
      binds = {
          {"mode", "--out-dir", [&](const std::string&) {}},  // echoed by manifests; ignored
          {"input", "--input", [&](const std::string& v) { o.input = v; }},
          {"histogram_bins", "--histogram-bins",
           [&](const std::string& v) { o.histogram_bins = parse_u64(v, "histogram_bins"); }},
          {"rel_threshold", "--rel-threshold",
           [&](const std::string& v) { o.rel_threshold = parse_double(v, "rel_threshold"); }},
          {"out_dir", "--out-dir", [&](const std::string& v) { o.out_dir = v; }},
      };
    }
    if (!o.config_path.empty()) apply_config(*active, o.config_path, binds);

    fs::path out_dir = o.out_dir;
    if (out_dir.empty()) {
      const char* env = std::getenv("SHADOWGROWTH_OUT_DIR");
      out_dir = env && *env ? fs::path(env) : fs::path("out");
    }

    if (active == run)
      cmd_run(o, out_dir);
    else if (active == disperse)
      cmd_disperse(o, out_dir);
    else
      cmd_analyze(o, out_dir);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const NumericsError& e) {
    std::cerr << "numerical abort: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace shadow::cli
