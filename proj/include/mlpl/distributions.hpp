#pragma once

#include <array>
#include <string_view>

namespace mlpl {

// Closed-form and numeric pieces of the three fading families. All families
// are location/scale shifted: x is in dB, the standardized variable is
// z = (x - location) / scale.

/// log(I0(x)) for x >= 0. Power series below 15, asymptotic expansion above;
/// evaluated in the log domain so large arguments do not overflow.
double log_bessel_i0(double x);

/// I0(x) = exp(log_bessel_i0(x)); overflows to +inf past x ~ 713.
double bessel_i0(double x);

enum class Family { Normal, Rayleigh, Rician };

std::string_view family_name(Family f);
Family family_from_name(std::string_view name);

/// Family parameters. Normal uses (location=mean, scale=std); Rayleigh uses
/// (location, scale); Rician additionally uses shape b.
struct DistParams {
  Family family = Family::Normal;
  double shape = 0.0;
  double location = 0.0;
  double scale = 1.0;
};

double log_pdf(const DistParams& p, double x);
double pdf(const DistParams& p, double x);
double cdf(const DistParams& p, double x);

/// Inverse CDF for q in (0, 1). Normal and Rayleigh are analytic; Rician is
/// found by bracketed bisection on its CDF.
double quantile(const DistParams& p, double q);

/// Standard normal helpers.
double normal_cdf(double z);
double normal_quantile(double q);

}  // namespace mlpl
