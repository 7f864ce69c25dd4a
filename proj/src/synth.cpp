#include "mlpl/synth.hpp"

#include <cmath>
#include <numbers>

#include "mlpl/error.hpp"

namespace mlpl {
namespace {

double standard_normal(RngStream& rng) {
  // 1 - u keeps the log argument in (0, 1].
  const double u1 = 1.0 - rng.next_uniform();
  const double u2 = rng.next_uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

TraceRecord make_record(const SynthConfig& cfg, double t, const Position& tx,
                        const Position& rx, RngStream& fading_rng) {
  const double d = distance(tx, rx);
  double loss = log_distance_loss(d, cfg.path_loss);
  if (cfg.fading) loss += draw(*cfg.fading, fading_rng);
  TraceRecord r;
  r.t = t;
  r.tx_power = cfg.budget.tx_power;
  r.tx_gain = cfg.budget.tx_gain;
  r.rx_gain = cfg.budget.rx_gain;
  r.tx_pos = tx;
  r.rx_pos = rx;
  r.freq = cfg.freq;
  r.bandwidth = cfg.bandwidth;
  r.snr = rx_power(cfg.budget, loss) - noise_floor(cfg.bandwidth, cfg.noise);
  return r;
}

void check(const SynthConfig& cfg) {
  if (!(cfg.min_distance > 0.0) || !(cfg.max_distance >= cfg.min_distance)) {
    throw ValidationError("synthetic distance range must satisfy 0 < min <= max");
  }
}

}  // namespace

double draw(const DistParams& p, RngStream& rng) {
  switch (p.family) {
    case Family::Normal: return p.location + p.scale * standard_normal(rng);
    case Family::Rayleigh: {
      const double u = 1.0 - rng.next_uniform();
      return p.location + p.scale * std::sqrt(-2.0 * std::log(u));
    }
    case Family::Rician: {
      const double re = p.shape + standard_normal(rng);
      const double im = standard_normal(rng);
      return p.location + p.scale * std::hypot(re, im);
    }
  }
  return 0.0;
}

std::vector<TraceRecord> generate_trace(const SynthConfig& cfg) {
  check(cfg);
  auto geometry = make_stream(cfg.seed, 0);
  auto fading = make_stream(cfg.seed, 1);
  std::vector<TraceRecord> out;
  out.reserve(cfg.n_samples);
  for (std::size_t i = 0; i < cfg.n_samples; ++i) {
    const double d =
        cfg.min_distance + (cfg.max_distance - cfg.min_distance) * geometry.next_uniform();
    const double theta = 2.0 * std::numbers::pi * geometry.next_uniform();
    const Position rx(d * std::cos(theta), d * std::sin(theta), 0.0);
    out.push_back(make_record(cfg, static_cast<double>(i), Position::Zero(), rx, fading));
  }
  return out;
}

std::vector<TraceRecord> generate_trace(const SynthConfig& cfg, const Trajectory& traj) {
  auto fading = make_stream(cfg.seed, 1);
  std::vector<TraceRecord> out;
  out.reserve(traj.waypoints().size());
  for (const auto& w : traj.waypoints()) {
    out.push_back(make_record(cfg, w.t, traj.fixed_pos(), w.pos, fading));
  }
  return out;
}

std::vector<PathLossSample> generate_samples(const SynthConfig& cfg) {
  check(cfg);
  auto geometry = make_stream(cfg.seed, 0);
  auto fading = make_stream(cfg.seed, 1);
  std::vector<PathLossSample> out;
  out.reserve(cfg.n_samples);
  for (std::size_t i = 0; i < cfg.n_samples; ++i) {
    const double d =
        cfg.min_distance + (cfg.max_distance - cfg.min_distance) * geometry.next_uniform();
    double loss = log_distance_loss(d, cfg.path_loss);
    if (cfg.fading) loss += draw(*cfg.fading, fading);
    out.push_back({d, loss});
  }
  return out;
}

}  // namespace mlpl
