#include "mlpl/propagation.hpp"

#include "mlpl/error.hpp"

namespace mlpl {

PropagationEngine::PropagationEngine(PathLossVariant variant) : variant_(std::move(variant)) {
  if (const auto* m = std::get_if<MlplVariant>(&variant_); m && !m->model) {
    throw ValidationError("MLPL engine requires a model");
  }
}

PropagationEngine::PropagationEngine(PathLossVariant variant, CdfTable fading, RngStream rng)
    : PropagationEngine(std::move(variant)) {
  fading_.emplace(std::move(fading));
  rng_.emplace(rng);
}

double PropagationEngine::path_loss(double d) const {
  if (!(d > 0.0)) throw DomainError("total_loss: distance must be positive");
  struct Visitor {
    double d;
    double operator()(const MlplVariant& v) const { return v.model->predict(d); }
    double operator()(const FriisVariant& v) const { return friis_loss(d, v.freq_mhz); }
    double operator()(const LogDistanceVariant& v) const {
      return log_distance_loss(d, v.params);
    }
  };
  return std::visit(Visitor{d}, variant_);
}

double PropagationEngine::total_loss(double d) {
  const double deterministic = path_loss(d);
  if (!fading_) return deterministic;
  return deterministic + sample_fading(*fading_, *rng_);
}

}  // namespace mlpl
