#pragma once

#include <span>
#include <string>
#include <vector>

#include "mlpl/traces.hpp"

namespace mlpl {

/// Linear-interpolation quantile on the sorted values, h = q * (N - 1).
double percentile(std::span<const double> values, double q);

struct PercentileBin {
  long index = 0;       // bin k covers [k*w, (k+1)*w)
  double centre = 0.0;  // m
  double p25 = 0.0;
  double p50 = 0.0;
  double p75 = 0.0;
  std::size_t count = 0;
};

struct PercentileCurve {
  double bin_width = 1.0;
  std::vector<PercentileBin> bins;  // ascending index, empty bins omitted
};

PercentileCurve percentile_curve(std::span<const PathLossSample> samples, double bin_width = 1.0);

struct PercentileDiff {
  struct Row {
    long index = 0;
    double centre = 0.0;
    double d25 = 0.0;
    double d50 = 0.0;
    double d75 = 0.0;
  };
  std::vector<Row> rows;
  std::string warning;  // non-empty when the curves share no bins
};

/// Per-bin |model - real| for the three quartiles, over bins present in both.
PercentileDiff percentile_diff(const PercentileCurve& model, const PercentileCurve& real);

/// Boxplot statistics with 1.5 x IQR fences. Whiskers are the most extreme
/// values inside the fences; everything outside is an outlier.
struct BoxStats {
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double whisker_low = 0.0;
  double whisker_high = 0.0;
  std::vector<double> outliers;  // ascending

  double iqr() const { return q3 - q1; }
  double fence_low() const { return q1 - 1.5 * iqr(); }
  double fence_high() const { return q3 + 1.5 * iqr(); }
};

BoxStats box_stats(std::span<const double> values);

enum class Scenario { Extrapolation, Interpolation, FullSet };

std::string scenario_name(Scenario s);
Scenario scenario_from_name(const std::string& name);

struct ScenarioSplit {
  Scenario scenario = Scenario::FullSet;
  std::vector<PathLossSample> train;
  std::vector<PathLossSample> test;
};

/// Extrapolation trains on d < 10 m and tests on the rest. Interpolation
/// trains on d < 5, 10 <= d <= 15 and d > 20 and tests on the gaps. FullSet
/// trains on everything and tests on `held_out`, or on the training data when
/// no held-out run is given. Empty partitions are an error.
ScenarioSplit make_split(std::span<const PathLossSample> samples, Scenario scenario,
                         std::span<const PathLossSample> held_out = {});

bool in_interpolation_train(double d);

double rmse(std::span<const double> predicted, std::span<const double> actual);

std::string serialize_curve(const PercentileCurve& curve);
std::string serialize_diff(const PercentileDiff& diff);
std::string serialize_box_stats(const BoxStats& box);

}  // namespace mlpl
