#pragma once

namespace mlpl {

constexpr double kSpeedOfLight = 299792458.0;  // m/s

struct LogDistanceParams {
  double ref_distance = 1.0;  // m
  double ref_loss = 0.0;      // dB
  double exponent = 3.0;
};

/// Free-space loss 20*log10(4*pi*d*f/c), system loss factor 1.
double friis_loss(double d, double freq_mhz);

/// ref_loss + 10*exponent*log10(d/ref_distance).
double log_distance_loss(double d, const LogDistanceParams& p);

/// d0 = 1 m, reference loss = Friis at 1 m, indoor exponent 3.
LogDistanceParams default_log_distance(double freq_mhz);

}  // namespace mlpl
