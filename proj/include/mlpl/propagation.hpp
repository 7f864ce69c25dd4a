#pragma once

#include <memory>
#include <optional>
#include <variant>

#include "mlpl/baselines.hpp"
#include "mlpl/fading.hpp"
#include "mlpl/pathloss_model.hpp"
#include "mlpl/randvar.hpp"

namespace mlpl {

struct LinkBudget {
  double tx_power = 7.0;  // dBm
  double tx_gain = -7.0;  // dBi
  double rx_gain = -7.0;  // dBi
};

/// tx_power + tx_gain + rx_gain - loss, in dBm.
constexpr double rx_power(const LinkBudget& b, double loss) {
  return b.tx_power + b.tx_gain + b.rx_gain - loss;
}

struct MlplVariant {
  std::shared_ptr<const PathLossModel> model;
};
struct FriisVariant {
  double freq_mhz = 5220.0;
};
struct LogDistanceVariant {
  LogDistanceParams params;
};
using PathLossVariant = std::variant<MlplVariant, FriisVariant, LogDistanceVariant>;

/// Total propagation loss = deterministic path loss + one fast-fading draw.
/// An engine with fading owns its RngStream and must not be shared between
/// threads; a fading-free engine is a pure function of distance.
class PropagationEngine {
 public:
  explicit PropagationEngine(PathLossVariant variant);
  PropagationEngine(PathLossVariant variant, CdfTable fading, RngStream rng);

  /// Throws DomainError for d <= 0. Draws once from the fading stream when
  /// fading is configured. Negative totals are passed through unclamped.
  double total_loss(double d);

  double path_loss(double d) const;

  bool has_fading() const { return fading_.has_value(); }
  const std::optional<RngStream>& rng() const { return rng_; }

 private:
  PathLossVariant variant_;
  std::optional<CdfTable> fading_;
  std::optional<RngStream> rng_;
};

}  // namespace mlpl
