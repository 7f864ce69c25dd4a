#include "mlpl/distributions.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "mlpl/error.hpp"

namespace mlpl {

double log_bessel_i0(double x) {
  x = std::abs(x);
  if (x < 15.0) {
    // sum_k ((x/2)^2)^k / (k!)^2
    const double y = 0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 500; ++k) {
      term *= y / (static_cast<double>(k) * static_cast<double>(k));
      sum += term;
      if (term < sum * 1e-17) break;
    }
    return std::log(sum);
  }
  // I0(x) ~ e^x / sqrt(2 pi x) * sum_k ((2k-1)!!)^2 / (k! 8^k x^k)
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < 30; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = term * odd * odd / (8.0 * k * x);
    if (next > term) break;
    term = next;
    sum += term;
    if (term < sum * 1e-17) break;
  }
  return x - 0.5 * std::log(2.0 * std::numbers::pi * x) + std::log(sum);
}

double bessel_i0(double x) { return std::exp(log_bessel_i0(x)); }

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Normal: return "normal";
    case Family::Rayleigh: return "rayleigh";
    case Family::Rician: return "rician";
  }
  return "unknown";
}

Family family_from_name(std::string_view name) {
  if (name == "normal") return Family::Normal;
  if (name == "rayleigh") return Family::Rayleigh;
  if (name == "rician" || name == "rice") return Family::Rician;
  throw ValidationError("unknown distribution family '" + std::string(name) + "'");
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

double normal_quantile(double q) {
  if (!(q > 0.0 && q < 1.0)) throw DomainError("normal_quantile: q must be in (0, 1)");
  // Acklam's rational approximation, then one Halley step on erfc.
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double plow = 0.02425;
  double x = 0.0;
  if (q < plow) {
    const double r = std::sqrt(-2.0 * std::log(q));
    x = (((((c[0] * r + c[1]) * r + c[2]) * r + c[3]) * r + c[4]) * r + c[5]) /
        ((((d[0] * r + d[1]) * r + d[2]) * r + d[3]) * r + 1.0);
  } else if (q <= 1.0 - plow) {
    const double s = q - 0.5;
    const double r = s * s;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * s /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double r = std::sqrt(-2.0 * std::log1p(-q));
    x = -(((((c[0] * r + c[1]) * r + c[2]) * r + c[3]) * r + c[4]) * r + c[5]) /
        ((((d[0] * r + d[1]) * r + d[2]) * r + d[3]) * r + 1.0);
  }
  const double e = normal_cdf(x) - q;
  const double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * x * x);
  return x - u / (1.0 + 0.5 * x * u);
}

namespace {

// 1 - Q1(b, z): Poisson(b^2/2) mixture of regularized lower incomplete gamma
// functions P(j + 1, z^2/2).
double rician_std_cdf(double b, double z) {
  if (z <= 0.0) return 0.0;
  const double lambda = 0.5 * b * b;
  const double y = 0.5 * z * z;
  if (lambda == 0.0) return -std::expm1(-y);

  // P(1, y) = 1 - e^-y, P(j+1, y) = P(j, y) - e^-y y^j / j!
  double lower = -std::expm1(-y);
  double log_poisson_y = -y;  // log(e^-y y^0 / 0!)
  double log_weight = -lambda;
  double total = 0.0;
  const int jmax = static_cast<int>(lambda + 12.0 * std::sqrt(lambda) + 60.0);
  for (int j = 0; j <= jmax; ++j) {
    if (j > 0) {
      log_poisson_y += std::log(y) - std::log(static_cast<double>(j));
      lower -= std::exp(log_poisson_y);
      if (lower < 0.0) lower = 0.0;
      log_weight += std::log(lambda) - std::log(static_cast<double>(j));
    }
    total += std::exp(log_weight) * lower;
  }
  return std::min(1.0, std::max(0.0, total));
}

void check_params(const DistParams& p) {
  if (!(p.scale > 0.0) || !std::isfinite(p.location)) {
    throw DomainError("distribution scale must be positive and location finite");
  }
  if (p.family == Family::Rician && !(p.shape >= 0.0)) {
    throw DomainError("rician shape must be non-negative");
  }
}

}  // namespace

double log_pdf(const DistParams& p, double x) {
  const double z = (x - p.location) / p.scale;
  switch (p.family) {
    case Family::Normal:
      return -0.5 * z * z - std::log(p.scale) - 0.5 * std::log(2.0 * std::numbers::pi);
    case Family::Rayleigh:
      if (!(z > 0.0)) return -std::numeric_limits<double>::infinity();
      return std::log(z) - 0.5 * z * z - std::log(p.scale);
    case Family::Rician:
      if (!(z > 0.0)) return -std::numeric_limits<double>::infinity();
      return std::log(z) - 0.5 * (z * z + p.shape * p.shape) +
             log_bessel_i0(z * p.shape) - std::log(p.scale);
  }
  return -std::numeric_limits<double>::infinity();
}

double pdf(const DistParams& p, double x) { return std::exp(log_pdf(p, x)); }

double cdf(const DistParams& p, double x) {
  check_params(p);
  const double z = (x - p.location) / p.scale;
  switch (p.family) {
    case Family::Normal: return normal_cdf(z);
    case Family::Rayleigh: return z <= 0.0 ? 0.0 : -std::expm1(-0.5 * z * z);
    case Family::Rician: return rician_std_cdf(p.shape, z);
  }
  return 0.0;
}

double quantile(const DistParams& p, double q) {
  check_params(p);
  if (!(q > 0.0 && q < 1.0)) throw DomainError("quantile: q must be in (0, 1)");
  switch (p.family) {
    case Family::Normal: return p.location + p.scale * normal_quantile(q);
    case Family::Rayleigh:
      return p.location + p.scale * std::sqrt(-2.0 * std::log1p(-q));
    case Family::Rician: {
      double lo = 0.0;
      double hi = p.shape + 10.0;
      while (rician_std_cdf(p.shape, hi) < q) hi *= 2.0;
      for (int i = 0; i < 200 && hi - lo > 1e-13 * (1.0 + hi); ++i) {
        const double mid = 0.5 * (lo + hi);
        (rician_std_cdf(p.shape, mid) < q ? lo : hi) = mid;
      }
      return p.location + p.scale * 0.5 * (lo + hi);
    }
  }
  return 0.0;
}

}  // namespace mlpl
