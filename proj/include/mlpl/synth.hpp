#pragma once

#include <optional>
#include <vector>

#include "mlpl/baselines.hpp"
#include "mlpl/distributions.hpp"
#include "mlpl/linksim.hpp"
#include "mlpl/randvar.hpp"
#include "mlpl/traces.hpp"

namespace mlpl {

/// Direct sampler for the fading families, independent of the quantile
/// code: Box-Muller for Normal, inversion for Rayleigh and the modulus of a
/// shifted complex Gaussian for Rician.
double draw(const DistParams& p, RngStream& rng);

struct SynthConfig {
  LogDistanceParams path_loss{1.0, 47.0, 2.2};
  std::optional<DistParams> fading = DistParams{Family::Normal, 0.0, 0.0, 4.0};
  std::size_t n_samples = 10000;
  double min_distance = 2.0;
  double max_distance = 24.0;
  LinkBudget budget;
  double freq = 5220.0;      // MHz
  double bandwidth = 20.0;   // MHz
  RadioConfig noise;
  std::uint64_t seed = 1;
};

/// Raw trace from a known log-distance + fading channel. The transmitter sits
/// at the origin; the receiver is placed at a uniform distance in
/// [min_distance, max_distance] in a random horizontal direction, one record
/// per second. SNR is derived through the link budget so ingesting the trace
/// recovers generator path loss exactly.
std::vector<TraceRecord> generate_trace(const SynthConfig& cfg);

/// Same channel, but receiver positions follow the trajectory waypoints.
std::vector<TraceRecord> generate_trace(const SynthConfig& cfg, const Trajectory& traj);

/// Samples drawn directly from the generator's path-loss law + fading.
std::vector<PathLossSample> generate_samples(const SynthConfig& cfg);

}  // namespace mlpl
