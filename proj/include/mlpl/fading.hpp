#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mlpl/distributions.hpp"
#include "mlpl/error.hpp"
#include "mlpl/traces.hpp"

namespace mlpl {

/// Fast-fading residuals: each sample's path loss minus the mean path loss of
/// its one-metre bin, bin = floor(distance).
struct Residuals {
  std::vector<double> values;
  std::map<long, double> per_metre_mean;
};

Residuals extract_residuals(std::span<const PathLossSample> samples);

struct FadingFit {
  DistParams params;
  double sse = 0.0;

  Family family() const { return params.family; }
};

/// Raised when fitting fails. Carries the best parameters reached, if any.
class FitError : public Error {
 public:
  explicit FitError(const std::string& what, std::optional<DistParams> best = std::nullopt)
      : Error(ErrorCode::Fit, what), best_(best) {}

  const std::optional<DistParams>& best_iterate() const { return best_; }

 private:
  std::optional<DistParams> best_;
};

/// Closed-form maximum likelihood: sample mean and 1/N standard deviation.
FadingFit fit_normal(std::span<const double> values);

/// Location-shifted Rayleigh by maximum likelihood.
FadingFit fit_rayleigh(std::span<const double> values);

/// Three-parameter (shape, location, scale) Rician by maximum likelihood.
FadingFit fit_rician(std::span<const double> values);

/// Negative log-likelihood of `values` under `p`; +inf outside the support.
double negative_log_likelihood(const DistParams& p, std::span<const double> values);

/// Sum of squared differences between the density-normalized histogram of
/// `values` (n_bins equal-width bins over [min, max]) and the PDF at bin
/// centres.
double histogram_sse(const DistParams& p, std::span<const double> values, int n_bins);

/// Every candidate family with its SSE, in family order. Families whose fit
/// fails are left out.
std::vector<FadingFit> fit_candidates(std::span<const double> values, int n_bins = 100);

/// Relative SSE difference below which two candidates count as tied.
inline constexpr double kSseTieMargin = 0.10;

/// Minimum-SSE family among Normal, Rayleigh and Rician. Ties (within
/// kSseTieMargin) go to the earlier family. Requires at least 30 values.
FadingFit select_fading(std::span<const double> values, int n_bins = 100);

/// The selection rule of select_fading applied to already fitted candidates
/// (family order).
FadingFit select_best(std::span<const FadingFit> fits);

inline constexpr std::size_t kMinFadingValues = 30;
inline constexpr double kCdfTailProbability = 1e-4;

/// Sampled (loss dB, cumulative probability) support of a fading distribution.
class CdfTable {
 public:
  struct Point {
    double loss = 0.0;
    double cum_prob = 0.0;
  };

  /// Throws ValidationError unless losses are strictly increasing,
  /// probabilities non-decreasing from exactly 0 to exactly 1, and there are
  /// at least two points.
  explicit CdfTable(std::vector<Point> points);

  const std::vector<Point>& points() const { return points_; }
  double min_loss() const { return points_.front().loss; }
  double max_loss() const { return points_.back().loss; }

  /// Piecewise-linear inverse CDF, the sampling rule used by randvar.
  double interpolate(double u) const;

 private:
  std::vector<Point> points_;
};

/// Quantile table: endpoints at the 1e-4 and 1 - 1e-4 quantiles (clamped to
/// probabilities 0 and 1), interior points at quantile(i / (n_points - 1)).
/// n_points must be in [2, 10000].
CdfTable to_cdf_table(const FadingFit& fit, std::size_t n_points = 1000);

std::string serialize_cdf(const CdfTable& table);
CdfTable parse_cdf(const std::filesystem::path& path);
void save_cdf(const CdfTable& table, const std::filesystem::path& path);

}  // namespace mlpl
