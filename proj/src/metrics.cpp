#include "mlpl/metrics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>

#include "mlpl/csv.hpp"
#include "mlpl/error.hpp"

namespace mlpl {
namespace {

double sorted_percentile(const std::vector<double>& sorted, double q) {
  const double h = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

}  // namespace

double percentile(std::span<const double> values, double q) {
  if (values.empty()) throw ValidationError("percentile of an empty set");
  if (!(q >= 0.0 && q <= 1.0)) throw DomainError("percentile: q must be in [0, 1]");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  return sorted_percentile(sorted, q);
}

PercentileCurve percentile_curve(std::span<const PathLossSample> samples, double bin_width) {
  if (!(bin_width > 0.0)) throw DomainError("bin width must be positive");
  if (samples.empty()) throw ValidationError("percentile curve of an empty set");
  std::map<long, std::vector<double>> bins;
  for (const auto& s : samples) {
    bins[static_cast<long>(std::floor(s.distance / bin_width))].push_back(s.path_loss);
  }
  PercentileCurve curve{bin_width, {}};
  for (auto& [k, v] : bins) {
    std::sort(v.begin(), v.end());
    curve.bins.push_back({k, (static_cast<double>(k) + 0.5) * bin_width,
                          sorted_percentile(v, 0.25), sorted_percentile(v, 0.5),
                          sorted_percentile(v, 0.75), v.size()});
  }
  return curve;
}

PercentileDiff percentile_diff(const PercentileCurve& model, const PercentileCurve& real) {
  PercentileDiff out;
  if (model.bin_width != real.bin_width) {
    throw ValidationError("percentile curves use different bin widths");
  }
  std::map<long, const PercentileBin*> lookup;
  for (const auto& b : real.bins) lookup[b.index] = &b;
  for (const auto& m : model.bins) {
    const auto it = lookup.find(m.index);
    if (it == lookup.end()) continue;
    const auto& r = *it->second;
    out.rows.push_back({m.index, m.centre, std::abs(m.p25 - r.p25), std::abs(m.p50 - r.p50),
                        std::abs(m.p75 - r.p75)});
  }
  if (out.rows.empty()) out.warning = "percentile curves share no distance bins";
  return out;
}

BoxStats box_stats(std::span<const double> values) {
  if (values.size() < 4) throw ValidationError("box_stats needs at least 4 values");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  BoxStats b;
  b.q1 = sorted_percentile(sorted, 0.25);
  b.median = sorted_percentile(sorted, 0.5);
  b.q3 = sorted_percentile(sorted, 0.75);
  const double lo = b.fence_low(), hi = b.fence_high();
  bool any_inside = false;
  for (double v : sorted) {
    if (v < lo || v > hi) {
      b.outliers.push_back(v);
      continue;
    }
    if (!any_inside) b.whisker_low = v;
    b.whisker_high = v;
    any_inside = true;
  }
  return b;
}

std::string scenario_name(Scenario s) {
  switch (s) {
    case Scenario::Extrapolation: return "Extrapolation";
    case Scenario::Interpolation: return "Interpolation";
    case Scenario::FullSet: return "FullSet";
  }
  return "unknown";
}

Scenario scenario_from_name(const std::string& raw) {
  std::string name = raw;
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (name == "extrapolation") return Scenario::Extrapolation;
  if (name == "interpolation") return Scenario::Interpolation;
  if (name == "fullset" || name == "full-set" || name == "full") return Scenario::FullSet;
  throw ValidationError("unknown scenario '" + raw + "'");
}

bool in_interpolation_train(double d) {
  return d < 5.0 || (d >= 10.0 && d <= 15.0) || d > 20.0;
}

ScenarioSplit make_split(std::span<const PathLossSample> samples, Scenario scenario,
                         std::span<const PathLossSample> held_out) {
  if (samples.empty()) throw ValidationError("make_split: no samples");
  ScenarioSplit out{scenario, {}, {}};
  switch (scenario) {
    case Scenario::Extrapolation:
      for (const auto& s : samples) (s.distance < 10.0 ? out.train : out.test).push_back(s);
      break;
    case Scenario::Interpolation:
      for (const auto& s : samples) {
        (in_interpolation_train(s.distance) ? out.train : out.test).push_back(s);
      }
      break;
    case Scenario::FullSet:
      out.train.assign(samples.begin(), samples.end());
      if (held_out.empty()) {
        out.test = out.train;
      } else {
        out.test.assign(held_out.begin(), held_out.end());
      }
      break;
  }
  if (out.train.empty()) {
    throw ValidationError(scenario_name(scenario) + " scenario: empty training partition");
  }
  if (out.test.empty()) {
    throw ValidationError(scenario_name(scenario) + " scenario: empty test partition");
  }
  return out;
}

double rmse(std::span<const double> predicted, std::span<const double> actual) {
  if (predicted.size() != actual.size() || predicted.empty()) {
    throw ValidationError("rmse: size mismatch or empty input");
  }
  double ss = 0.0;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    ss += (predicted[i] - actual[i]) * (predicted[i] - actual[i]);
  }
  return std::sqrt(ss / static_cast<double>(predicted.size()));
}

std::string serialize_curve(const PercentileCurve& curve) {
  std::string out = "bin_m,p25,p50,p75,count\n";
  for (const auto& b : curve.bins) {
    out += csv::format(b.centre) + "," + csv::format(b.p25) + "," + csv::format(b.p50) + "," +
           csv::format(b.p75) + "," + std::to_string(b.count) + "\n";
  }
  return out;
}

std::string serialize_diff(const PercentileDiff& diff) {
  std::string out = "bin_m,diff_p25,diff_p50,diff_p75\n";
  for (const auto& r : diff.rows) {
    out += csv::format(r.centre) + "," + csv::format(r.d25) + "," + csv::format(r.d50) + "," +
           csv::format(r.d75) + "\n";
  }
  return out;
}

std::string serialize_box_stats(const BoxStats& box) {
  std::string out = "q1,median,q3,whisker_low,whisker_high,outliers\n";
  out += csv::format(box.q1) + "," + csv::format(box.median) + "," + csv::format(box.q3) + "," +
         csv::format(box.whisker_low) + "," + csv::format(box.whisker_high) + ",";
  for (std::size_t i = 0; i < box.outliers.size(); ++i) {
    if (i) out.push_back(';');
    out += csv::format(box.outliers[i]);
  }
  out.push_back('\n');
  return out;
}

}  // namespace mlpl
