#include "mlpl/baselines.hpp"

#include <cmath>
#include <numbers>

#include "mlpl/error.hpp"

namespace mlpl {

double friis_loss(double d, double freq_mhz) {
  if (!(d > 0.0)) throw DomainError("friis_loss: distance must be positive");
  if (!(freq_mhz > 0.0)) throw DomainError("friis_loss: frequency must be positive");
  return 20.0 * std::log10(4.0 * std::numbers::pi * d * freq_mhz * 1e6 / kSpeedOfLight);
}

double log_distance_loss(double d, const LogDistanceParams& p) {
  if (!(d > 0.0)) throw DomainError("log_distance_loss: distance must be positive");
  if (!(p.ref_distance > 0.0) || !(p.exponent > 0.0)) {
    throw DomainError("log_distance_loss: invalid parameters");
  }
  return p.ref_loss + 10.0 * p.exponent * std::log10(d / p.ref_distance);
}

LogDistanceParams default_log_distance(double freq_mhz) {
  return {1.0, friis_loss(1.0, freq_mhz), 3.0};
}

}  // namespace mlpl
