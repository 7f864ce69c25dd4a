#include "mlpl/fading.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numeric>

#include "mlpl/csv.hpp"
#include "mlpl/nelder_mead.hpp"

namespace mlpl {

Residuals extract_residuals(std::span<const PathLossSample> samples) {
  std::map<long, std::pair<double, std::size_t>> acc;
  for (const auto& s : samples) {
    auto& [sum, n] = acc[static_cast<long>(std::floor(s.distance))];
    sum += s.path_loss;
    ++n;
  }
  Residuals out;
  for (const auto& [bin, sn] : acc) {
    out.per_metre_mean[bin] = sn.first / static_cast<double>(sn.second);
  }
  out.values.reserve(samples.size());
  for (const auto& s : samples) {
    out.values.push_back(s.path_loss -
                         out.per_metre_mean.at(static_cast<long>(std::floor(s.distance))));
  }
  return out;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Summary {
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
};

Summary check_fit_input(std::span<const double> values, const char* who) {
  if (values.size() < 2) throw FitError(std::string(who) + ": need at least 2 values");
  Summary s{values[0], values[0], 0.0};
  for (double v : values) {
    if (!std::isfinite(v)) throw FitError(std::string(who) + ": non-finite value");
    s.min = std::min(s.min, v);
    s.max = std::max(s.max, v);
    s.mean += v;
  }
  if (s.min == s.max) throw FitError(std::string(who) + ": all values are equal");
  s.mean /= static_cast<double>(values.size());
  return s;
}

// Start slightly below the sample minimum so every point is inside the support.
double initial_location(const Summary& s) { return s.min - 1e-3 * (s.max - s.min); }

DistParams nll_params(Family family, const Eigen::VectorXd& x) {
  DistParams p{family};
  if (family == Family::Rician) {
    const double k2 = x(0) * x(0);
    p.shape = k2 / (1.0 - k2);
    p.scale = x(2);
    p.location = x(1) - x(2) * p.shape;
  } else {
    p.location = x(0);
    p.scale = x(1);
  }
  return p;
}

NelderMeadResult minimize_nll(Family family, std::span<const double> values,
                              const Eigen::VectorXd& start, const Summary& s) {
  const auto objective = [&](const Eigen::VectorXd& x) {
    const DistParams p = nll_params(family, x);
    if (family == Family::Rician && !(std::abs(x(0)) < 1.0)) return kInf;
    if (!(p.scale > 0.0) || !(p.location < s.min)) return kInf;
    return negative_log_likelihood(p, values);
  };
  auto result = nelder_mead(objective, start);
  // One restart from the best vertex guards against a collapsed simplex.
  if (result.converged) {
    NelderMeadOptions restart;
    restart.initial_step = 1e-3;
    auto again = nelder_mead(objective, result.x, restart);
    if (again.value <= result.value) {
      result.x = again.x;
      result.value = again.value;
    }
  }
  if (!result.converged || !std::isfinite(result.value)) {
    throw FitError(std::string(family_name(family)) + " fit did not converge",
                   nll_params(family, result.x));
  }
  return result;
}

}  // namespace

double negative_log_likelihood(const DistParams& p, std::span<const double> values) {
  double nll = 0.0;
  for (double v : values) {
    const double lp = log_pdf(p, v);
    if (!std::isfinite(lp)) return kInf;
    nll -= lp;
  }
  return nll;
}

FadingFit fit_normal(std::span<const double> values) {
  const Summary s = check_fit_input(values, "fit_normal");
  double ss = 0.0;
  for (double v : values) ss += (v - s.mean) * (v - s.mean);
  DistParams p{Family::Normal};
  p.location = s.mean;
  p.scale = std::sqrt(ss / static_cast<double>(values.size()));
  return {p, 0.0};
}

FadingFit fit_rayleigh(std::span<const double> values) {
  const Summary s = check_fit_input(values, "fit_rayleigh");
  const double loc = initial_location(s);
  double ss = 0.0;
  for (double v : values) ss += (v - loc) * (v - loc);
  const double scale = std::sqrt(ss / (2.0 * static_cast<double>(values.size())));

  Eigen::VectorXd start(2);
  start << loc, scale;
  const auto r = minimize_nll(Family::Rayleigh, values, start, s);
  return {nll_params(Family::Rayleigh, r.x), 0.0};
}

FadingFit fit_rician(std::span<const double> values) {
  const Summary s = check_fit_input(values, "fit_rician");
  const double loc = initial_location(s);
  // Moments of y = x - loc: E[y^2] = nu^2 + 2 sigma^2,
  // E[y^4] = nu^4 + 8 nu^2 sigma^2 + 8 sigma^4.
  double m2 = 0.0, m4 = 0.0;
  for (double v : values) {
    const double y2 = (v - loc) * (v - loc);
    m2 += y2;
    m4 += y2 * y2;
  }
  m2 /= static_cast<double>(values.size());
  m4 /= static_cast<double>(values.size());
  const double nu4 = 2.0 * m2 * m2 - m4;
  double nu = nu4 > 0.0 ? std::pow(nu4, 0.25) : 0.0;
  double sigma2 = 0.5 * (m2 - nu * nu);
  if (!(sigma2 > 0.0)) {
    nu = 0.0;
    sigma2 = 0.5 * m2;
  }
  const double sigma = std::sqrt(sigma2);

  Eigen::VectorXd start(3);
  const double b = std::max(nu / sigma, 0.1);
  start << std::sqrt(b / (1.0 + b)), loc + sigma * b, sigma;
  const auto r = minimize_nll(Family::Rician, values, start, s);
  return {nll_params(Family::Rician, r.x), 0.0};
}

double histogram_sse(const DistParams& p, std::span<const double> values, int n_bins) {
  if (n_bins < 1) throw ValidationError("histogram needs at least one bin");
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it, hi = *hi_it;
  const double width = (hi - lo) / n_bins;
  if (!(width > 0.0)) throw FitError("histogram of constant values");
  std::vector<double> counts(static_cast<std::size_t>(n_bins), 0.0);
  for (double v : values) {
    auto k = static_cast<long>((v - lo) / width);
    k = std::clamp(k, 0L, static_cast<long>(n_bins - 1));
    counts[static_cast<std::size_t>(k)] += 1.0;
  }
  const double norm = 1.0 / (static_cast<double>(values.size()) * width);
  double sse = 0.0;
  for (int k = 0; k < n_bins; ++k) {
    const double centre = lo + (k + 0.5) * width;
    const double diff = counts[static_cast<std::size_t>(k)] * norm - pdf(p, centre);
    sse += diff * diff;
  }
  return sse;
}

std::vector<FadingFit> fit_candidates(std::span<const double> values, int n_bins) {
  using Fitter = FadingFit (*)(std::span<const double>);
  constexpr Fitter fitters[] = {&fit_normal, &fit_rayleigh, &fit_rician};
  std::vector<std::future<FadingFit>> jobs;
  for (auto fitter : fitters) {
    jobs.push_back(std::async(std::launch::async, [fitter, values, n_bins] {
      FadingFit fit = fitter(values);
      fit.sse = histogram_sse(fit.params, values, n_bins);
      return fit;
    }));
  }
  std::vector<FadingFit> out;
  for (auto& job : jobs) {
    try {
      out.push_back(job.get());
    } catch (const FitError&) {
      // A family that cannot be fitted is simply not a candidate.
    }
  }
  return out;
}

FadingFit select_fading(std::span<const double> values, int n_bins) {
  if (values.size() < kMinFadingValues) {
    throw FitError("select_fading: need at least " + std::to_string(kMinFadingValues) +
                   " values, got " + std::to_string(values.size()));
  }
  return select_best(fit_candidates(values, n_bins));
}

FadingFit select_best(std::span<const FadingFit> fits) {
  if (fits.empty()) throw FitError("select_fading: no family could be fitted");
  // Candidates arrive in family order. A later family has to beat the current
  // choice by more than the tie margin; Rician nests Rayleigh (b = 0) and
  // approaches Normal (b -> inf), so it otherwise wins on sampling noise alone.
  const FadingFit* best = &fits.front();
  for (const auto& f : fits) {
    if (f.sse < best->sse * (1.0 - kSseTieMargin)) best = &f;
  }
  return *best;
}

CdfTable::CdfTable(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.size() < 2) throw ValidationError("CDF table needs at least two points");
  if (points_.front().cum_prob != 0.0) throw ValidationError("CDF table must start at probability 0");
  if (points_.back().cum_prob != 1.0) throw ValidationError("CDF table must end at probability 1");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!std::isfinite(points_[i].loss)) throw ValidationError("CDF table loss must be finite");
    if (i == 0) continue;
    if (!(points_[i].loss > points_[i - 1].loss)) {
      throw ValidationError("CDF table losses must be strictly increasing (row " +
                            std::to_string(i + 1) + ")");
    }
    if (points_[i].cum_prob < points_[i - 1].cum_prob) {
      throw ValidationError("CDF table probabilities must be non-decreasing (row " +
                            std::to_string(i + 1) + ")");
    }
  }
}

double CdfTable::interpolate(double u) const {
  if (u < points_.front().cum_prob) return points_.front().loss;
  // First bracket with p1 <= u < p2.
  const auto it = std::upper_bound(points_.begin(), points_.end(), u,
                                   [](double v, const Point& p) { return v < p.cum_prob; });
  if (it == points_.end()) return points_.back().loss;
  const Point& hi = *it;
  const Point& lo = *(it - 1);
  return lo.loss + (u - lo.cum_prob) * (hi.loss - lo.loss) / (hi.cum_prob - lo.cum_prob);
}

CdfTable to_cdf_table(const FadingFit& fit, std::size_t n_points) {
  if (n_points < 2 || n_points > 10000) {
    throw ValidationError("CDF table size must be in [2, 10000]");
  }
  std::vector<CdfTable::Point> points(n_points);
  const double last = static_cast<double>(n_points - 1);
  for (std::size_t i = 0; i < n_points; ++i) {
    double q = static_cast<double>(i) / last;
    if (i == 0) q = kCdfTailProbability;
    if (i + 1 == n_points) q = 1.0 - kCdfTailProbability;
    points[i].loss = quantile(fit.params, q);
    points[i].cum_prob = static_cast<double>(i) / last;
  }
  points.front().cum_prob = 0.0;
  points.back().cum_prob = 1.0;
  return CdfTable(std::move(points));
}

std::string serialize_cdf(const CdfTable& table) {
  std::string out = "loss_db,cum_prob\n";
  for (const auto& p : table.points()) {
    out += csv::format(p.loss) + "," + csv::format(p.cum_prob) + "\n";
  }
  return out;
}

CdfTable parse_cdf(const std::filesystem::path& path) {
  const auto t = csv::read(path, {"loss_db", "cum_prob"});
  std::vector<CdfTable::Point> points;
  points.reserve(t.rows.size());
  for (const auto& row : t.rows) points.push_back({row.values[0], row.values[1]});
  try {
    return CdfTable(std::move(points));
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

void save_cdf(const CdfTable& table, const std::filesystem::path& path) {
  csv::write_text(path, serialize_cdf(table));
}

}  // namespace mlpl
