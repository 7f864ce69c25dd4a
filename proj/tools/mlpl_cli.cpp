// mlpl_cli: ingest, train, fit-fading, predict, simulate, evaluate, gen-synth.
//
// Every command writes into <out>/<command>/<name>/ together with a
// manifest.json (resolved configuration, seeds, SHA-256 of inputs and
// outputs, tool version, timestamps). Errors go to stderr as a single
// line "error[E_TAG]: message" with a nonzero exit status.

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "mlpl/csv.hpp"
#include "mlpl/error.hpp"
#include "mlpl/fading.hpp"
#include "mlpl/linksim.hpp"
#include "mlpl/metrics.hpp"
#include "mlpl/pathloss_model.hpp"
#include "mlpl/propagation.hpp"
#include "mlpl/synth.hpp"
#include "mlpl/traces.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

struct UsageError : mlpl::Error {
  explicit UsageError(const std::string& what) : Error(mlpl::ErrorCode::Usage, what) {}
};

std::string utc_now() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string sha256_file(const fs::path& path) {
  const std::string data = mlpl::csv::read_text(path);
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 0xf]);
  }
  return out;
}

// Options shared by every subcommand.
struct Common {
  std::uint64_t seed = 1;
  std::string out = "out";
  std::string name = "default";
  std::string config;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--seed", c.seed, "Seed for all randomness");
  sub->add_option("--out", c.out, "Output root directory");
  sub->add_option("--name", c.name, "Run name (output goes to <out>/<command>/<name>)");
  sub->add_option("--config", c.config, "key=value file; command-line flags win");
}

// Collects products and writes the manifest once the command has finished.
class Run {
 public:
  Run(const CLI::App& sub, const Common& c)
      : sub_(sub), common_(c), started_(utc_now()) {
    dir_ = fs::path(c.out) / sub.get_name() / c.name;
    fs::create_directories(dir_);
    if (!c.config.empty()) input(c.config);
  }

  const fs::path& dir() const { return dir_; }

  void input(const std::string& path) {
    if (!path.empty()) inputs_[path] = sha256_file(path);
  }

  fs::path write(const std::string& file, const std::string& text) {
    const auto p = dir_ / file;
    mlpl::csv::write_text(p, text);
    outputs_.push_back(file);
    return p;
  }

  void seed(const std::string& key, std::uint64_t value) { seeds_[key] = value; }
  void note(const std::string& key, json value) { notes_[key] = std::move(value); }

  void finish() {
    json config = json::object();
    for (const auto* opt : sub_.get_options()) {
      const auto name = opt->get_single_name();
      if (name == "help" || name.empty()) continue;
      if (opt->count() > 0) {
        const auto r = opt->results();
        config[name] = r.size() == 1 ? json(r.front()) : json(r);
      } else {
        config[name] = opt->get_default_str();
      }
    }
    json m;
    m["tool"] = "mlpl_cli";
    m["version"] = kVersion;
    m["command"] = sub_.get_name();
    m["name"] = common_.name;
    m["config"] = config;
    json seeds = seeds_;
    seeds["seed"] = common_.seed;
    m["seeds"] = seeds;
    m["inputs"] = inputs_;
    json outs = json::object();
    for (const auto& f : outputs_) outs[f] = sha256_file(dir_ / f);
    m["outputs"] = outs;
    if (!notes_.empty()) m["notes"] = notes_;
    m["started_utc"] = started_;
    m["finished_utc"] = utc_now();
    mlpl::csv::write_text(dir_ / "manifest.json", m.dump(2) + "\n");
  }

 private:
  const CLI::App& sub_;
  const Common& common_;
  std::string started_;
  fs::path dir_;
  std::map<std::string, std::string> inputs_;
  std::vector<std::string> outputs_;
  std::map<std::string, std::uint64_t> seeds_;
  json notes_ = json::object();
};

mlpl::Position parse_position(const std::string& text) {
  const auto f = mlpl::csv::split(text, ',');
  if (f.size() != 3) throw UsageError("position must be x,y,z, got '" + text + "'");
  return {mlpl::csv::parse_double(f[0]), mlpl::csv::parse_double(f[1]),
          mlpl::csv::parse_double(f[2])};
}

std::string samples_csv(const std::vector<mlpl::PathLossSample>& s) {
  return mlpl::serialize_simple(s);
}

// ---- ingest ---------------------------------------------------------------

struct IngestOpts {
  std::string input;
  double noise_figure = 7.0;
};

void cmd_ingest(const CLI::App& sub, const Common& c, const IngestOpts& o) {
  if (mlpl::csv::read_header(o.input) == mlpl::kSimpleHeader) {
    throw mlpl::ValidationError(o.input +
                                ": already a simple-format samples file "
                                "(distance_m,path_loss_db); pass it to `train` directly");
  }
  const auto records = mlpl::parse_raw(o.input);
  const auto samples = mlpl::records_to_samples(records, {o.noise_figure});
  Run run(sub, c);
  run.input(o.input);
  run.write("samples.csv", samples_csv(samples));
  run.note("n_samples", samples.size());
  run.finish();
}

// ---- train ----------------------------------------------------------------

struct TrainOpts {
  std::string samples;
  std::string held_out;
  std::string scenario = "fullset";
  mlpl::TrainConfig cfg;
};

std::vector<double> predict_all(const mlpl::PathLossModel& m,
                                const std::vector<mlpl::PathLossSample>& s) {
  std::vector<double> out;
  out.reserve(s.size());
  for (const auto& x : s) out.push_back(m.predict(x.distance));
  return out;
}

std::vector<double> losses(const std::vector<mlpl::PathLossSample>& s) {
  std::vector<double> out;
  out.reserve(s.size());
  for (const auto& x : s) out.push_back(x.path_loss);
  return out;
}

void cmd_train(const CLI::App& sub, const Common& c, const TrainOpts& o) {
  const auto samples = mlpl::parse_simple(o.samples);
  std::vector<mlpl::PathLossSample> held;
  if (!o.held_out.empty()) held = mlpl::parse_simple(o.held_out);
  const auto scenario = mlpl::scenario_from_name(o.scenario);
  if (!held.empty() && scenario != mlpl::Scenario::FullSet) {
    throw UsageError("--held-out only applies to the fullset scenario");
  }
  const auto split = mlpl::make_split(samples, scenario, held);
  const auto model = mlpl::train(split.train, o.cfg);

  Run run(sub, c);
  run.input(o.samples);
  run.input(o.held_out);
  run.write("model.txt", mlpl::serialize_model(model));
  json report;
  report["scenario"] = mlpl::scenario_name(scenario);
  report["n_train"] = split.train.size();
  report["n_test"] = split.test.size();
  report["train_rmse_db"] = mlpl::rmse(predict_all(model, split.train), losses(split.train));
  report["test_rmse_db"] = mlpl::rmse(predict_all(model, split.test), losses(split.test));
  report["range_min_m"] = model.range_min();
  report["range_max_m"] = model.range_max();
  report["n_trees"] = model.trees().size();
  run.write("report.json", report.dump(2) + "\n");
  run.write("test_samples.csv", samples_csv(split.test));
  run.finish();
}

// ---- fit-fading -----------------------------------------------------------

struct FadingOpts {
  std::string samples;
  std::string raw;
  double noise_figure = 7.0;
  int bins = 100;
  std::size_t points = 1000;
  bool conjecture = false;
  double sigma = 0.0;
};

json fit_json(const mlpl::FadingFit& f) {
  return {{"family", mlpl::family_name(f.family())},
          {"shape", f.params.shape},
          {"location", f.params.location},
          {"scale", f.params.scale},
          {"sse", f.sse}};
}

void cmd_fit_fading(const CLI::App& sub, const Common& c, const FadingOpts& o) {
  if (o.samples.empty() == o.raw.empty()) {
    throw UsageError("fit-fading needs exactly one of --samples or --raw");
  }
  if (o.bins < 1) throw UsageError("--bins must be positive");
  Run run(sub, c);
  json report;
  report["n_bins"] = o.bins;
  report["n_points"] = o.points;

  if (o.conjecture) {
    // Only distance/path-loss pairs are trusted: zero-mean Normal with a
    // configured sigma, no fitting. sigma 0 means no fading at all.
    if (!o.samples.empty()) run.input(o.samples);
    run.input(o.raw);
    if (o.sigma < 0) throw UsageError("--sigma must be non-negative");
    report["mode"] = "conjecture";
    if (o.sigma == 0) {
      report["selected"] = nullptr;
    } else {
      const mlpl::FadingFit fit{{mlpl::Family::Normal, 0.0, 0.0, o.sigma}, 0.0};
      report["selected"] = fit_json(fit);
      run.write("cdf.csv", mlpl::serialize_cdf(mlpl::to_cdf_table(fit, o.points)));
    }
    run.write("report.json", report.dump(2) + "\n");
    run.finish();
    return;
  }

  std::vector<mlpl::PathLossSample> samples;
  if (!o.samples.empty()) {
    samples = mlpl::parse_simple(o.samples);
    run.input(o.samples);
  } else {
    samples = mlpl::records_to_samples(mlpl::parse_raw(o.raw), {o.noise_figure});
    run.input(o.raw);
  }
  const auto residuals = mlpl::extract_residuals(samples);
  if (residuals.values.size() < mlpl::kMinFadingValues) {
    throw mlpl::FitError("fit-fading: need at least " +
                         std::to_string(mlpl::kMinFadingValues) + " samples, got " +
                         std::to_string(residuals.values.size()));
  }
  const auto candidates = mlpl::fit_candidates(residuals.values, o.bins);
  const auto best = mlpl::select_best(candidates);
  report["mode"] = "fit";
  report["n_values"] = residuals.values.size();
  json cand = json::array();
  for (const auto& f : candidates) cand.push_back(fit_json(f));
  report["candidates"] = cand;
  report["selected"] = fit_json(best);
  run.write("cdf.csv", mlpl::serialize_cdf(mlpl::to_cdf_table(best, o.points)));
  run.write("report.json", report.dump(2) + "\n");
  run.finish();
}

// ---- predict --------------------------------------------------------------

struct PredictOpts {
  std::string model;
  std::string samples;
  std::vector<double> distances;
};

void cmd_predict(const CLI::App& sub, const Common& c, const PredictOpts& o) {
  const auto model = mlpl::load_model(o.model);
  std::vector<double> d = o.distances;
  if (!o.samples.empty()) {
    for (const auto& s : mlpl::parse_simple(o.samples)) d.push_back(s.distance);
  }
  if (d.empty()) throw UsageError("predict needs --distance or --samples");
  std::vector<mlpl::PathLossSample> out;
  out.reserve(d.size());
  for (double x : d) out.push_back({x, model.predict(x)});
  Run run(sub, c);
  run.input(o.model);
  run.input(o.samples);
  run.write("predictions.csv", samples_csv(out));
  run.finish();
}

// ---- simulate -------------------------------------------------------------

struct SimulateOpts {
  std::string model;
  std::string baseline;
  std::string cdf;
  std::string trajectory;
  std::string fixed = "0,0,0";
  std::uint64_t stream = 0;
  double freq = 5220.0;
  double exponent = 3.0;
  double ref_distance = 1.0;
  double ref_loss = 0.0;  // 0 means Friis at the reference distance
  mlpl::SimConfig sim;
};

void cmd_simulate(const CLI::App& sub, const Common& c, SimulateOpts o) {
  if (o.model.empty() == o.baseline.empty()) {
    throw UsageError("simulate needs exactly one of --model or --baseline");
  }
  mlpl::PathLossVariant variant;
  if (!o.model.empty()) {
    variant = mlpl::MlplVariant{
        std::make_shared<const mlpl::PathLossModel>(mlpl::load_model(o.model))};
  } else if (o.baseline == "friis") {
    variant = mlpl::FriisVariant{o.freq};
  } else if (o.baseline == "log-distance") {
    mlpl::LogDistanceParams p{o.ref_distance, o.ref_loss, o.exponent};
    if (p.ref_loss == 0.0) p.ref_loss = mlpl::friis_loss(p.ref_distance, o.freq);
    variant = mlpl::LogDistanceVariant{p};
  } else {
    throw UsageError("unknown baseline '" + o.baseline + "' (friis, log-distance)");
  }
  o.sim.seed = c.seed;
  auto engine = o.cdf.empty()
                    ? mlpl::PropagationEngine(variant)
                    : mlpl::PropagationEngine(variant, mlpl::parse_cdf(o.cdf),
                                              mlpl::make_stream(c.seed, o.stream));
  const auto traj = mlpl::parse_trajectory(o.trajectory, parse_position(o.fixed));
  const auto result = mlpl::run(traj, engine, o.sim);

  Run run(sub, c);
  run.input(o.model);
  run.input(o.cdf);
  run.input(o.trajectory);
  run.seed("stream_id", o.stream);
  run.write("linkrun.csv", mlpl::serialize_link_run(result));
  run.note("delivered_bits", result.delivered_bits());
  if (engine.rng()) run.note("fading_draws", engine.rng()->draw_count());
  run.finish();
}

// ---- evaluate -------------------------------------------------------------

struct EvaluateOpts {
  std::string predictions;
  std::string linkrun;
  std::string reference;
  double bin_width = 1.0;
};

std::vector<mlpl::PathLossSample> read_linkrun(const std::string& path) {
  const auto t = mlpl::csv::read(path, mlpl::kLinkRunHeader);
  std::vector<mlpl::PathLossSample> out;
  out.reserve(t.rows.size());
  for (const auto& r : t.rows) out.push_back({r.values[1], r.values[2]});
  return out;
}

void cmd_evaluate(const CLI::App& sub, const Common& c, const EvaluateOpts& o) {
  if (o.predictions.empty() == o.linkrun.empty()) {
    throw UsageError("evaluate needs exactly one of --predictions or --linkrun");
  }
  const auto model = o.predictions.empty() ? read_linkrun(o.linkrun)
                                           : mlpl::parse_simple(o.predictions);
  const auto real = mlpl::parse_simple(o.reference);
  const auto mc = mlpl::percentile_curve(model, o.bin_width);
  const auto rc = mlpl::percentile_curve(real, o.bin_width);
  const auto diff = mlpl::percentile_diff(mc, rc);
  if (!diff.warning.empty()) std::cerr << "warning: " << diff.warning << "\n";

  Run run(sub, c);
  run.input(o.predictions);
  run.input(o.linkrun);
  run.input(o.reference);
  run.write("curve_model.csv", mlpl::serialize_curve(mc));
  run.write("curve_reference.csv", mlpl::serialize_curve(rc));
  run.write("diff.csv", mlpl::serialize_diff(diff));
  const auto ml = losses(model), rl = losses(real);
  if (ml.size() >= 4) run.write("box_model.csv", mlpl::serialize_box_stats(mlpl::box_stats(ml)));
  if (rl.size() >= 4) {
    run.write("box_reference.csv", mlpl::serialize_box_stats(mlpl::box_stats(rl)));
  }
  if (!diff.warning.empty()) run.note("warning", diff.warning);
  run.finish();
}

// ---- gen-synth ------------------------------------------------------------

struct SynthOpts {
  mlpl::SynthConfig cfg;
  std::string fading = "normal";
  double shape = 0.0;
  double loc = 0.0;
  double scale = 4.0;
  std::string trajectory;
  std::string fixed = "0,0,0";
};

void cmd_gen_synth(const CLI::App& sub, const Common& c, SynthOpts o) {
  o.cfg.seed = c.seed;
  if (o.fading == "none") {
    o.cfg.fading.reset();
  } else {
    o.cfg.fading = mlpl::DistParams{mlpl::family_from_name(o.fading), o.shape, o.loc, o.scale};
  }
  std::vector<mlpl::TraceRecord> records;
  Run run(sub, c);
  if (o.trajectory.empty()) {
    records = mlpl::generate_trace(o.cfg);
  } else {
    run.input(o.trajectory);
    records = mlpl::generate_trace(
        o.cfg, mlpl::parse_trajectory(o.trajectory, parse_position(o.fixed)));
  }
  std::vector<mlpl::Waypoint> wps;
  wps.reserve(records.size());
  for (const auto& r : records) wps.push_back({r.t, r.rx_pos});
  const mlpl::Trajectory traj(std::move(wps), records.front().tx_pos);

  run.seed("geometry_stream", 0);
  run.seed("fading_stream", 1);
  run.write("raw.csv", mlpl::serialize_raw(records));
  run.write("trajectory.csv", mlpl::serialize_trajectory(traj));
  run.finish();
}

// ---- config file ----------------------------------------------------------

bool has_flag(const std::vector<std::string>& args, const std::string& flag) {
  return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
    return a == flag || a.rfind(flag + "=", 0) == 0;
  });
}

// Appends "--key=value" for every config entry not already given on the
// command line, so flags always win.
std::vector<std::string> merge_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;
  std::ifstream in(path);
  if (!in) throw mlpl::IoError("cannot open config file " + path);
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::string> extra;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw mlpl::ParseError(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::replace(key.begin(), key.end(), '_', '-');
    const std::string value = trim(line.substr(eq + 1));
    if (key == "config") continue;
    const std::string flag = "--" + key;
    if (!has_flag(args, flag)) extra.push_back(flag + "=" + value);
  }
  args.insert(args.end(), extra.begin(), extra.end());
  return args;
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

int fail(std::string_view tag, const std::string& msg, int code = 1) {
  std::cerr << "error[" << tag << "]: " << one_line(msg) << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Machine-learning path loss pipeline"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Common common;

  IngestOpts ingest;
  auto* s_ingest = app.add_subcommand("ingest", "Raw trace -> distance/path-loss samples");
  s_ingest->add_option("--input", ingest.input, "Raw trace CSV")->required();
  s_ingest->add_option("--noise-figure", ingest.noise_figure, "Receiver noise figure (dB)");

  TrainOpts train;
  auto* s_train = app.add_subcommand("train", "Train the boosted-tree path loss model");
  s_train->add_option("--samples", train.samples, "Samples CSV")->required();
  s_train->add_option("--scenario", train.scenario,
                      "extrapolation, interpolation or fullset");
  s_train->add_option("--held-out", train.held_out, "Held-out samples for fullset testing");
  s_train->add_option("--n-trees", train.cfg.n_trees);
  s_train->add_option("--max-depth", train.cfg.max_depth);
  s_train->add_option("--learning-rate", train.cfg.learning_rate);
  s_train->add_option("--min-samples-leaf", train.cfg.min_samples_leaf);

  FadingOpts fading;
  auto* s_fading = app.add_subcommand("fit-fading", "Fit the fast-fading distribution");
  s_fading->add_option("--samples", fading.samples, "Samples CSV");
  s_fading->add_option("--raw", fading.raw, "Raw trace CSV");
  s_fading->add_option("--noise-figure", fading.noise_figure, "Receiver noise figure (dB)");
  s_fading->add_option("--bins", fading.bins, "Histogram bins for SSE selection");
  s_fading->add_option("--points", fading.points, "CDF table size");
  s_fading->add_flag("--conjecture", fading.conjecture,
                     "Skip fitting; use zero-mean Normal with --sigma");
  s_fading->add_option("--sigma", fading.sigma, "Sigma for --conjecture (0: no fading)");

  PredictOpts predict;
  auto* s_predict = app.add_subcommand("predict", "Predict path loss at given distances");
  s_predict->add_option("--model", predict.model, "Model file")->required();
  s_predict->add_option("--samples", predict.samples, "Take distances from a samples CSV");
  s_predict->add_option("--distance", predict.distances, "Distance(s) in metres")
      ->delimiter(',');

  SimulateOpts simulate;
  auto* s_sim = app.add_subcommand("simulate", "Replay a trajectory through the link model");
  s_sim->add_option("--model", simulate.model, "Model file");
  s_sim->add_option("--baseline", simulate.baseline, "friis or log-distance");
  s_sim->add_option("--cdf", simulate.cdf, "Fading CDF table");
  s_sim->add_option("--trajectory", simulate.trajectory, "Trajectory CSV")->required();
  s_sim->add_option("--fixed", simulate.fixed, "Fixed node position x,y,z");
  s_sim->add_option("--stream", simulate.stream, "Fading stream id");
  s_sim->add_option("--freq", simulate.freq, "Carrier (MHz) for baselines");
  s_sim->add_option("--exponent", simulate.exponent, "Log-distance exponent");
  s_sim->add_option("--ref-distance", simulate.ref_distance, "Log-distance d0 (m)");
  s_sim->add_option("--ref-loss", simulate.ref_loss, "Log-distance PL(d0); 0 = Friis(d0)");
  s_sim->add_option("--tx-power", simulate.sim.budget.tx_power);
  s_sim->add_option("--tx-gain", simulate.sim.budget.tx_gain);
  s_sim->add_option("--rx-gain", simulate.sim.budget.rx_gain);
  s_sim->add_option("--bandwidth", simulate.sim.bandwidth);
  s_sim->add_option("--noise-figure", simulate.sim.noise.noise_figure);
  s_sim->add_option("--payload", simulate.sim.payload);
  s_sim->add_option("--duration", simulate.sim.duration);
  s_sim->add_option("--tick", simulate.sim.tick);

  EvaluateOpts evaluate;
  auto* s_eval = app.add_subcommand("evaluate", "Percentile curves, diffs and box stats");
  s_eval->add_option("--predictions", evaluate.predictions, "Predictions CSV");
  s_eval->add_option("--linkrun", evaluate.linkrun, "LinkRun CSV");
  s_eval->add_option("--reference", evaluate.reference, "Reference samples CSV")->required();
  s_eval->add_option("--bin-width", evaluate.bin_width, "Distance bin (m)");

  SynthOpts synth;
  auto* s_synth = app.add_subcommand("gen-synth", "Synthetic raw trace from a known channel");
  s_synth->add_option("--n-samples", synth.cfg.n_samples);
  s_synth->add_option("--min-distance", synth.cfg.min_distance);
  s_synth->add_option("--max-distance", synth.cfg.max_distance);
  s_synth->add_option("--ref-distance", synth.cfg.path_loss.ref_distance);
  s_synth->add_option("--ref-loss", synth.cfg.path_loss.ref_loss);
  s_synth->add_option("--exponent", synth.cfg.path_loss.exponent);
  s_synth->add_option("--fading", synth.fading, "normal, rayleigh, rician or none");
  s_synth->add_option("--fading-shape", synth.shape);
  s_synth->add_option("--fading-loc", synth.loc);
  s_synth->add_option("--fading-scale", synth.scale);
  s_synth->add_option("--trajectory", synth.trajectory, "Receiver waypoints CSV");
  s_synth->add_option("--fixed", synth.fixed, "Transmitter position with --trajectory");
  s_synth->add_option("--tx-power", synth.cfg.budget.tx_power);
  s_synth->add_option("--tx-gain", synth.cfg.budget.tx_gain);
  s_synth->add_option("--rx-gain", synth.cfg.budget.rx_gain);
  s_synth->add_option("--freq", synth.cfg.freq);
  s_synth->add_option("--bandwidth", synth.cfg.bandwidth);
  s_synth->add_option("--noise-figure", synth.cfg.noise.noise_figure);

  for (auto* sub : app.get_subcommands({})) {
    add_common(sub, common);
    for (auto* opt : sub->get_options()) opt->capture_default_str();
  }

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = merge_config(std::move(args));
    std::reverse(args.begin(), args.end());
    try {
      app.parse(args);
    } catch (const CLI::CallForHelp& e) {
      return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
      return app.exit(e);
    } catch (const CLI::ParseError& e) {
      return fail("E_USAGE", e.what(), 2);
    }

    if (s_ingest->parsed()) cmd_ingest(*s_ingest, common, ingest);
    if (s_train->parsed()) cmd_train(*s_train, common, train);
    if (s_fading->parsed()) cmd_fit_fading(*s_fading, common, fading);
    if (s_predict->parsed()) cmd_predict(*s_predict, common, predict);
    if (s_sim->parsed()) cmd_simulate(*s_sim, common, simulate);
    if (s_eval->parsed()) cmd_evaluate(*s_eval, common, evaluate);
    if (s_synth->parsed()) cmd_gen_synth(*s_synth, common, synth);
  } catch (const mlpl::Error& e) {
    return fail(mlpl::error_tag(e.code()), e.what(), e.code() == mlpl::ErrorCode::Usage ? 2 : 1);
  } catch (const std::exception& e) {
    return fail("E_INTERNAL", e.what());
  }
  return 0;
}
