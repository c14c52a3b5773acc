#include "rsgd/cli.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rsgd/checks.hpp"
#include "rsgd/csv.hpp"
#include "rsgd/gossip.hpp"
#include "rsgd/problems/karcher.hpp"
#include "rsgd/problems/oja.hpp"
#include "rsgd/problems/psd_lms.hpp"
#include "rsgd/sgd.hpp"

namespace rsgd {

namespace {

// ---------------------------------------------------------------- helpers

uint64_t fnv1a64(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string with_run_suffix(const std::string& path, int run) {
  const size_t dot = path.find_last_of('.');
  const std::string tag = "_r" + std::to_string(run);
  if (dot == std::string::npos || dot == 0) return path + tag;
  return path.substr(0, dot) + tag + path.substr(dot);
}

StepSchedule make_schedule(double a, double b, double eps, double t_scale) {
  if (t_scale > 0.0) return StepSchedule::t_scaled(a, t_scale, eps);
  return StepSchedule::decay(a, b, eps);
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

// Shared iteration/recording skeleton: records at iteration 0, every
// `cadence` steps, and at the end; wraps geometry failures with the
// iteration index.
template <typename StepFn, typename RecordFn>
void drive(long iters, int cadence, StepFn step, RecordFn record) {
  record(0);
  for (long t = 0; t < iters; ++t) {
    try {
      step(t);
    } catch (const GeometryError& e) {
      throw DivergenceError(std::string("step failed: ") + e.what(), t);
    }
    if ((t + 1) % cadence == 0 || t + 1 == iters) record(t + 1);
  }
}

void check_finite(const Matrix& w, long t) {
  if (!w.allFinite()) throw DivergenceError("non-finite coordinate in iterate", t);
}

// --------------------------------------------------------------- configs

struct CommonConfig {
  uint64_t seed = 42;
  std::string out;
  int record_every = 100;
  int runs = 1;
  void validate() const {
    require(record_every >= 1, "record-every must be >= 1");
    require(runs >= 1, "runs must be >= 1");
    require(!out.empty(), "out must not be empty");
  }
};

struct GainConfig {
  double a = 0.01;
  double b = 0.0;
  double eps = 0.0;
  double t_scale = 0.0;
  void validate() const {
    require(a > 0.0, "gain a must be > 0");
    require(b >= 0.0, "gain b must be >= 0");
    require(eps >= 0.0, "gain eps must be >= 0");
    require(t_scale >= 0.0, "gain-t-scale must be >= 0");
  }
  StepSchedule schedule() const { return make_schedule(a, b, eps, t_scale); }
  std::string describe() const {
    std::ostringstream os;
    os << "a=" << a << ";b=" << b << ";eps=" << eps << ";t_scale=" << t_scale;
    return os.str();
  }
};

struct OjaCliConfig {
  CommonConfig common{.out = "oja.csv"};
  GainConfig gain{.a = 0.01, .b = 0.05};
  int n = 20;
  int r = 3;
  long iters = 200000;
  std::string variant = "geodesic";
  std::string spectrum_top;  // comma list for the leading eigenvalues
  double input_bound_factor = 10.0;
};

struct KarcherCliConfig {
  CommonConfig common{.out = "karcher.csv"};
  GainConfig gain{.a = 0.5, .b = 30.0};
  int npoints = 20;
  double radius = 0.8;
  long iters = 100000;
  double s_margin = 0.1;
  std::string rule = "adaptive";
};

struct PsdCliConfig {
  CommonConfig common{.out = "psd.csv"};
  GainConfig gain{.a = 0.5, .t_scale = 5000.0};
  int n = 20;
  int r = 3;
  long iters = 200000;
  std::string algorithm = "factor";
  std::string oracle_out;
};

struct GossipCliConfig {
  CommonConfig common{.out = "gossip.csv", .runs = 50};
  int n = 10;
  int m = 6;
  long events = 10000;
  double gamma = 0.5;
  double heterogeneity = 0.0;
  int samples_per_node = 100;
  std::string rule = "riemannian";
  std::string per_replica_out;
};

// ----------------------------------------------------------- experiments

int cmd_check(uint64_t seed, int cases, bool corrupt) {
  SuiteTolerances tol;
  if (corrupt) {
    // test hook: unreachable budgets force a failing report
    tol.exp_log_roundtrip = 1e-30;
    tol.gradient_rel = 1e-30;
    tol.metric_symmetry = 1e-30;
  }
  auto results = run_all_geometry_suites(cases, seed, tol);
  bool all_pass = true;
  for (const auto& r : results) {
    std::printf("%-22s %-24s %s  worst=%.3e  budget=%.3e\n", r.manifold.c_str(),
                r.check.c_str(), r.pass ? "pass" : "FAIL", r.worst, r.budget);
    all_pass = all_pass && r.pass;
  }
  std::printf("check: %s (%d cases per geometry, seed %" PRIu64 ")\n",
              all_pass ? "all checks passed" : "FAILURES detected", cases, seed);
  return all_pass ? 0 : 1;
}

Vector parse_spectrum(const OjaCliConfig& cfg) {
  Vector spectrum = Vector::Ones(cfg.n);
  if (cfg.spectrum_top.empty()) {
    for (int i = 0; i < cfg.r; ++i) spectrum(i) = cfg.n - i;
    return spectrum;
  }
  std::stringstream ss(cfg.spectrum_top);
  std::string item;
  int i = 0;
  while (std::getline(ss, item, ',')) {
    require(i < cfg.n, "spectrum-top has more entries than n");
    try {
      spectrum(i) = std::stod(item);
    } catch (const std::exception&) {
      throw std::invalid_argument("spectrum-top: malformed number '" + item + "'");
    }
    ++i;
  }
  return spectrum;
}

int cmd_oja(const OjaCliConfig& cfg) {
  cfg.common.validate();
  cfg.gain.validate();
  require(cfg.n >= 1, "n must be >= 1");
  require(cfg.r >= 1 && cfg.r <= cfg.n, "need 1 <= r <= n");
  require(cfg.iters >= 0, "iters must be >= 0");
  require(cfg.variant == "geodesic" || cfg.variant == "qr",
          "variant must be geodesic or qr");
  require(cfg.input_bound_factor > 0.0, "input-bound-factor must be > 0");

  Rng setup_rng(cfg.common.seed);
  Vector spectrum = parse_spectrum(cfg);
  OjaProblem oja = OjaProblem::with_spectrum(spectrum, cfg.r, setup_rng,
                                             cfg.input_bound_factor);
  Problem p = oja.problem();
  const StepSchedule schedule = cfg.gain.schedule();
  const bool geodesic = cfg.variant == "geodesic";

  const uint64_t hash = fnv1a64(
      "oja;n=" + std::to_string(cfg.n) + ";r=" + std::to_string(cfg.r) +
      ";iters=" + std::to_string(cfg.iters) + ";" + cfg.gain.describe() +
      ";variant=" + cfg.variant + ";spectrum=" + cfg.spectrum_top +
      ";bound=" + std::to_string(cfg.input_bound_factor) +
      ";cadence=" + std::to_string(cfg.common.record_every));

  for (int run_idx = 0; run_idx < cfg.common.runs; ++run_idx) {
    const std::string path = cfg.common.runs == 1
                                 ? cfg.common.out
                                 : with_run_suffix(cfg.common.out, run_idx);
    Rng rng(cfg.common.seed + run_idx);
    Matrix w = oja.random_start(rng);
    CsvWriter csv(path, {"iter", "loss", "stationarity_residual", "principal_angle"});
    drive(
        cfg.iters, cfg.common.record_every,
        [&](long t) {
          const Sample z = p.sample(rng);
          w = geodesic ? step_exp(p, w, z, schedule(t))
                       : step_retract(p, w, z, schedule(t));
          check_finite(w, t);
        },
        [&](long t) {
          csv.row(t, {p.batch_cost(w), oja_stationarity_residual(w, oja.covariance),
                      subspace_angle(w, oja.dominant_basis)});
        });
    csv.close();
    std::printf("[oja] config=%016" PRIx64 " seed=%" PRIu64
                " final_residual=%.9g final_angle=%.9g out=%s\n",
                hash, cfg.common.seed + run_idx,
                oja_stationarity_residual(w, oja.covariance),
                subspace_angle(w, oja.dominant_basis), path.c_str());
  }
  return 0;
}

int cmd_karcher(const KarcherCliConfig& cfg) {
  cfg.common.validate();
  cfg.gain.validate();
  require(cfg.npoints >= 1, "npoints must be >= 1");
  require(cfg.radius > 0.0 && cfg.radius < 1.0, "radius must be in (0, 1)");
  require(cfg.iters >= 0, "iters must be >= 0");
  require(cfg.s_margin > 0.0, "s-margin must be > 0");
  require(cfg.rule == "adaptive" || cfg.rule == "exp", "rule must be adaptive or exp");

  Rng setup_rng(cfg.common.seed);
  KarcherDiskProblem karcher =
      KarcherDiskProblem::random(cfg.npoints, cfg.radius, setup_rng, cfg.s_margin);
  Problem p = karcher.problem();
  Matrix mean = karcher_batch_mean(karcher.data);
  const StepSchedule schedule = cfg.gain.schedule();
  const bool adaptive = cfg.rule == "adaptive";

  const uint64_t hash = fnv1a64(
      "karcher;npoints=" + std::to_string(cfg.npoints) +
      ";radius=" + std::to_string(cfg.radius) + ";iters=" + std::to_string(cfg.iters) +
      ";" + cfg.gain.describe() + ";s_margin=" + std::to_string(cfg.s_margin) +
      ";rule=" + cfg.rule + ";cadence=" + std::to_string(cfg.common.record_every));

  for (int run_idx = 0; run_idx < cfg.common.runs; ++run_idx) {
    const std::string path = cfg.common.runs == 1
                                 ? cfg.common.out
                                 : with_run_suffix(cfg.common.out, run_idx);
    Rng rng(cfg.common.seed + run_idx);
    Matrix w = Matrix::Zero(2, 1);
    CsvWriter csv(path, {"iter", "cost", "dist_to_batch_mean"});
    drive(
        cfg.iters, cfg.common.record_every,
        [&](long t) {
          const Sample z = p.sample(rng);
          w = adaptive ? step_adaptive(p, w, z, schedule(t))
                       : step_exp(p, w, z, schedule(t));
          check_finite(w, t);
        },
        [&](long t) {
          csv.row(t, {karcher.batch_cost(w), disk_distance(w, mean)});
        });
    csv.close();
    std::printf("[karcher] config=%016" PRIx64 " seed=%" PRIu64
                " final_dist_to_mean=%.9g out=%s\n",
                hash, cfg.common.seed + run_idx, disk_distance(w, mean), path.c_str());
  }
  return 0;
}

int cmd_psd(const PsdCliConfig& cfg) {
  cfg.common.validate();
  cfg.gain.validate();
  require(cfg.n >= 1, "n must be >= 1");
  require(cfg.r >= 1 && cfg.r <= cfg.n, "need 1 <= r <= n");
  require(cfg.iters >= 0, "iters must be >= 0");
  require(cfg.algorithm == "factor" || cfg.algorithm == "naive",
          "algorithm must be factor or naive");
  require(cfg.algorithm != "naive" || cfg.r == cfg.n,
          "the naive projected algorithm needs full rank (r == n)");

  Rng setup_rng(cfg.common.seed);
  PsdLmsProblem psd = PsdLmsProblem::random(cfg.n, cfg.r, setup_rng);
  const StepSchedule schedule = cfg.gain.schedule();

  const uint64_t hash = fnv1a64(
      "psd;n=" + std::to_string(cfg.n) + ";r=" + std::to_string(cfg.r) +
      ";iters=" + std::to_string(cfg.iters) + ";" + cfg.gain.describe() +
      ";algorithm=" + cfg.algorithm + ";cadence=" +
      std::to_string(cfg.common.record_every) + ";oracle=" + cfg.oracle_out);

  const std::vector<std::string> columns = {"iter", "output_error",
                                            "est_error_frobenius"};
  for (int run_idx = 0; run_idx < cfg.common.runs; ++run_idx) {
    const std::string path = cfg.common.runs == 1
                                 ? cfg.common.out
                                 : with_run_suffix(cfg.common.out, run_idx);
    Rng rng(cfg.common.seed + run_idx);
    Matrix g0 = psd.initial_factor(rng);
    double final_err = 0.0;

    if (cfg.algorithm == "factor") {
      Matrix g = g0;
      CsvWriter csv(path, columns);
      drive(
          cfg.iters, cfg.common.record_every,
          [&](long t) {
            const Sample z = psd.draw(rng);
            g = psd_step(g, z.x, z.y, schedule(t));
            check_finite(g, t);
          },
          [&](long t) { csv.row(t, {psd.output_mse(g), psd.estimation_error(g)}); });
      csv.close();
      final_err = psd.estimation_error(g);
    } else {
      Matrix pmat = g0 * g0.transpose();
      CsvWriter csv(path, columns);
      drive(
          cfg.iters, cfg.common.record_every,
          [&](long t) {
            const Sample z = psd.draw(rng);
            pmat = psd_naive_step(pmat, z.x, z.y, schedule(t));
            check_finite(pmat, t);
          },
          [&](long t) {
            Matrix m = pmat - psd.v;
            const double tr = m.trace();
            csv.row(t, {2.0 * m.squaredNorm() + tr * tr, m.norm()});
          });
      csv.close();
      final_err = (pmat - psd.v).norm();
    }

    // Averaged-gradient oracle sharing G0 and the gain sequence; the dashed
    // reference curve of the identification experiment.
    if (!cfg.oracle_out.empty() && cfg.algorithm == "factor") {
      const std::string opath = cfg.common.runs == 1
                                    ? cfg.oracle_out
                                    : with_run_suffix(cfg.oracle_out, run_idx);
      Matrix j = g0;
      CsvWriter csv(opath, columns);
      drive(
          cfg.iters, cfg.common.record_every,
          [&](long t) {
            j = psd_averaged_step(j, psd.v, schedule(t));
            check_finite(j, t);
          },
          [&](long t) { csv.row(t, {psd.output_mse(j), psd.estimation_error(j)}); });
      csv.close();
    }

    std::printf("[psd] config=%016" PRIx64 " seed=%" PRIu64
                " final_est_error=%.9g relative=%.9g out=%s\n",
                hash, cfg.common.seed + run_idx, final_err, final_err / psd.v.norm(),
                path.c_str());
  }
  return 0;
}

int cmd_gossip(const GossipCliConfig& cfg) {
  cfg.common.validate();
  require(cfg.n >= 1, "n must be >= 1");
  require(cfg.m >= 2, "m must be >= 2");
  require(cfg.events >= 0, "events must be >= 0");
  require(cfg.gamma > 0.0 && cfg.gamma <= 0.5, "gamma must be in (0, 1/2]");
  require(cfg.heterogeneity >= 0.0, "heterogeneity must be >= 0");
  require(cfg.samples_per_node >= 1, "samples-per-node must be >= 1");
  require(cfg.rule == "riemannian" || cfg.rule == "euclidean",
          "rule must be riemannian or euclidean");

  Rng setup_rng(cfg.common.seed);
  GossipNetwork init{make_initial_covariances(cfg.m, cfg.n, cfg.samples_per_node,
                                              cfg.heterogeneity, setup_rng),
                     GossipNetwork::uniform_edge_probs(cfg.m)};

  GossipConfig gcfg;
  gcfg.events = cfg.events;
  gcfg.gamma = cfg.gamma;
  gcfg.rule = cfg.rule == "riemannian" ? GossipRule::Riemannian : GossipRule::Euclidean;
  gcfg.runs = cfg.common.runs;
  gcfg.record_every = cfg.common.record_every;

  GossipAverage avg = run_gossip(gcfg, init, cfg.common.seed);

  CsvWriter csv(cfg.common.out, {"event", "sqrt_cost_mean", "hull_diameter_mean"});
  for (size_t i = 0; i < avg.events.size(); ++i)
    csv.row(avg.events[i], {avg.sqrt_cost_mean[i], avg.hull_mean[i]});
  csv.close();

  if (!cfg.per_replica_out.empty()) {
    for (int k = 0; k < cfg.common.runs; ++k) {
      CsvWriter rcsv(cfg.per_replica_out + "_r" + std::to_string(k) + ".csv",
                     {"event", "sqrt_cost", "hull_diameter"});
      for (const GossipTick& tick : avg.per_run[k].series)
        rcsv.row(tick.event, {tick.sqrt_cost, tick.hull});
      rcsv.close();
    }
  }

  const uint64_t hash = fnv1a64(
      "gossip;n=" + std::to_string(cfg.n) + ";m=" + std::to_string(cfg.m) +
      ";events=" + std::to_string(cfg.events) + ";gamma=" + std::to_string(cfg.gamma) +
      ";h=" + std::to_string(cfg.heterogeneity) +
      ";spn=" + std::to_string(cfg.samples_per_node) + ";rule=" + cfg.rule +
      ";runs=" + std::to_string(cfg.common.runs) +
      ";cadence=" + std::to_string(cfg.common.record_every));
  std::printf("[gossip] config=%016" PRIx64 " seed=%" PRIu64
              " final_sqrt_cost_mean=%.9g final_hull_mean=%.9g out=%s\n",
              hash, cfg.common.seed, avg.sqrt_cost_mean.back(), avg.hull_mean.back(),
              cfg.common.out.c_str());
  return 0;
}

// ------------------------------------------------------- argv preparation

// Flat key=value config file support: each key must name a flag of the
// invoked subcommand; unknown keys fail the parse. Command-line flags win
// over file values (the expansion inserts file values first and every
// option takes its last occurrence).
std::vector<std::string> config_file_args(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path);
  std::vector<std::string> args;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    std::string trimmed = line.substr(first, last - first + 1);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    const auto eq = trimmed.find('=');
    if (eq == std::string::npos || eq == 0)
      throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                  " is not key=value");
    std::string key = trimmed.substr(0, eq);
    const auto key_end = key.find_last_not_of(" \t");
    key = key.substr(0, key_end + 1);
    std::string value = trimmed.substr(eq + 1);
    const auto value_begin = value.find_first_not_of(" \t");
    value = value_begin == std::string::npos ? "" : value.substr(value_begin);
    if (key == "config")
      throw std::invalid_argument("config: key 'config' is not allowed in a file");
    if (key.find('-') == 0)
      throw std::invalid_argument("config: keys are bare flag names, got '" + key + "'");
    args.push_back("--" + key + "=" + value);
  }
  return args;
}

std::vector<std::string> expand_args(int argc, const char* const* argv) {
  std::vector<std::string> args(argv, argv + argc);
  // locate --config and the subcommand position
  std::string config_path;
  size_t subcommand_pos = 0;
  for (size_t i = 1; i < args.size(); ++i) {
    if (args[i].rfind("--config=", 0) == 0) {
      config_path = args[i].substr(9);
    } else if (args[i] == "--config" && i + 1 < args.size()) {
      config_path = args[i + 1];
      ++i;
    } else if (subcommand_pos == 0 && !args[i].empty() && args[i][0] != '-') {
      subcommand_pos = i;
    }
  }
  if (config_path.empty()) return args;
  std::vector<std::string> file_args = config_file_args(config_path);
  if (subcommand_pos == 0)
    throw std::invalid_argument("config: --config requires a subcommand");
  args.insert(args.begin() + subcommand_pos + 1, file_args.begin(), file_args.end());
  return args;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"Riemannian stochastic gradient descent experiments"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  uint64_t check_seed = 42;
  int check_cases = 50;
  bool check_corrupt = false;
  OjaCliConfig oja;
  KarcherCliConfig karcher;
  PsdCliConfig psd;
  GossipCliConfig gossip;

  // consumed in the pre-parse expansion; the option only has to exist
  static std::string config_path_sink;
  auto add_common = [](CLI::App* sub, CommonConfig& c) {
    sub->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    sub->add_option("--seed", c.seed, "RNG seed");
    sub->add_option("--out", c.out, "output CSV path");
    sub->add_option("--record-every", c.record_every, "metric recording cadence");
    sub->add_option("--runs", c.runs, "replica count");
    sub->add_option("--config", config_path_sink,
                    "flat key=value file; flags override file values");
  };
  auto add_gain = [](CLI::App* sub, GainConfig& g) {
    sub->add_option("--a", g.a, "initial gain");
    sub->add_option("--b", g.b, "gain decay coefficient");
    sub->add_option("--eps", g.eps, "gain exponent offset");
    sub->add_option("--gain-t-scale", g.t_scale,
                    "use gamma_t = a/(1 + t/scale)^(1/2+eps) instead");
  };

  CLI::App* check = app.add_subcommand("check", "run the manifold validation suite");
  check->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  check->add_option("--seed", check_seed, "RNG seed");
  check->add_option("--cases", check_cases, "random cases per geometry");
  check->add_flag("--corrupt-tolerances", check_corrupt)->group("");

  CLI::App* oja_cmd = app.add_subcommand("oja", "online dominant-subspace tracking");
  add_common(oja_cmd, oja.common);
  add_gain(oja_cmd, oja.gain);
  oja_cmd->add_option("--n", oja.n, "ambient dimension");
  oja_cmd->add_option("--r", oja.r, "subspace rank");
  oja_cmd->add_option("--iters", oja.iters, "iteration count");
  oja_cmd->add_option("--variant", oja.variant, "geodesic | qr");
  oja_cmd->add_option("--spectrum-top", oja.spectrum_top,
                      "comma list of leading eigenvalues (rest are 1)");
  oja_cmd->add_option("--input-bound-factor", oja.input_bound_factor,
                      "input clipping radius, in units of sqrt(tr A)");

  CLI::App* karcher_cmd =
      app.add_subcommand("karcher", "randomized hyperbolic Karcher mean");
  add_common(karcher_cmd, karcher.common);
  add_gain(karcher_cmd, karcher.gain);
  karcher_cmd->add_option("--npoints", karcher.npoints, "data point count");
  karcher_cmd->add_option("--radius", karcher.radius, "data Euclidean radius");
  karcher_cmd->add_option("--iters", karcher.iters, "iteration count");
  karcher_cmd->add_option("--s-margin", karcher.s_margin,
                          "margin of S over the max squared data radius");
  karcher_cmd->add_option("--rule", karcher.rule, "adaptive | exp");

  CLI::App* psd_cmd = app.add_subcommand("psd", "low-rank PSD matrix identification");
  add_common(psd_cmd, psd.common);
  add_gain(psd_cmd, psd.gain);
  psd_cmd->add_option("--n", psd.n, "matrix dimension");
  psd_cmd->add_option("--r", psd.r, "rank");
  psd_cmd->add_option("--iters", psd.iters, "iteration count");
  psd_cmd->add_option("--algorithm", psd.algorithm, "factor | naive");
  psd_cmd->add_option("--oracle-out", psd.oracle_out,
                      "also write the averaged-gradient oracle curve here");

  CLI::App* gossip_cmd =
      app.add_subcommand("gossip", "randomized SPD consensus on a line graph");
  add_common(gossip_cmd, gossip.common);
  gossip_cmd->add_option("--n", gossip.n, "covariance dimension");
  gossip_cmd->add_option("--m", gossip.m, "node count");
  gossip_cmd->add_option("--events", gossip.events, "event count per replica");
  gossip_cmd->add_option("--gamma", gossip.gamma, "fixed gain in (0, 1/2]");
  gossip_cmd->add_option("--heterogeneity", gossip.heterogeneity,
                         "spread of per-node covariance scales");
  gossip_cmd->add_option("--samples-per-node", gossip.samples_per_node,
                         "samples behind each initial covariance");
  gossip_cmd->add_option("--rule", gossip.rule, "riemannian | euclidean");
  gossip_cmd->add_option("--per-replica-out", gossip.per_replica_out,
                         "prefix for per-replica CSV files");

  std::vector<std::string> args;
  try {
    args = expand_args(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  std::vector<const char*> ptrs;
  ptrs.reserve(args.size());
  for (const auto& a : args) ptrs.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(ptrs.size()), ptrs.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(check)) return cmd_check(check_seed, check_cases, check_corrupt);
    if (app.got_subcommand(oja_cmd)) return cmd_oja(oja);
    if (app.got_subcommand(karcher_cmd)) return cmd_karcher(karcher);
    if (app.got_subcommand(psd_cmd)) return cmd_psd(psd);
    if (app.got_subcommand(gossip_cmd)) return cmd_gossip(gossip);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const DivergenceError& e) {
    std::fprintf(stderr, "runtime failure: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "runtime failure: %s\n", e.what());
    return 1;
  }
  return 2;
}

}  // namespace rsgd
