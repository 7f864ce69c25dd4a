#include "mlpl/linksim.hpp"

#include <algorithm>
#include <cmath>

#include "mlpl/csv.hpp"
#include "mlpl/error.hpp"

namespace mlpl {

Trajectory::Trajectory(std::vector<Waypoint> waypoints, Position fixed_pos)
    : waypoints_(std::move(waypoints)), fixed_pos_(std::move(fixed_pos)) {
  if (waypoints_.empty()) throw ValidationError("trajectory needs at least one waypoint");
  for (std::size_t i = 1; i < waypoints_.size(); ++i) {
    if (!(waypoints_[i].t > waypoints_[i - 1].t)) {
      throw ValidationError("trajectory times must be strictly increasing (waypoint " +
                            std::to_string(i + 1) + ")");
    }
  }
}

Position Trajectory::position_at(double t) const {
  if (t < waypoints_.front().t) {
    throw DomainError("position_at: t=" + csv::format(t) + " precedes the first waypoint");
  }
  const auto it = std::upper_bound(waypoints_.begin(), waypoints_.end(), t,
                                   [](double v, const Waypoint& w) { return v < w.t; });
  return (it - 1)->pos;
}

Trajectory parse_trajectory(const std::filesystem::path& path, const Position& fixed_pos) {
  const auto t = csv::read(path, kTrajectoryHeader);
  std::vector<Waypoint> wps;
  wps.reserve(t.rows.size());
  for (const auto& row : t.rows) {
    const auto& v = row.values;
    if (!wps.empty() && !(v[0] > wps.back().t)) {
      throw ValidationError(path.string() + ":" + std::to_string(row.line) +
                            ": trajectory times must be strictly increasing");
    }
    wps.push_back({v[0], Position(v[1], v[2], v[3])});
  }
  return Trajectory(std::move(wps), fixed_pos);
}

std::string serialize_trajectory(const Trajectory& traj) {
  std::string out = csv::join(kTrajectoryHeader) + "\n";
  for (const auto& w : traj.waypoints()) {
    out += csv::format(w.t) + "," + csv::format(w.pos.x()) + "," + csv::format(w.pos.y()) +
           "," + csv::format(w.pos.z()) + "\n";
  }
  return out;
}

void RateTable::validate() const {
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (!(entries[i].min_snr > entries[i - 1].min_snr) ||
        !(entries[i].phy_rate > entries[i - 1].phy_rate)) {
      throw ValidationError("rate table must be strictly increasing in SNR and rate");
    }
  }
}

RateTable default_rate_table() {
  return {{{6, 6}, {8, 9}, {9, 12}, {11, 18}, {17, 24}, {19, 36}, {24, 48}, {25, 54}}, -90.0};
}

double select_rate(double snr, double rx_power, const RateTable& table) {
  if (rx_power < table.min_rx_power) return 0.0;
  double rate = 0.0;
  for (const auto& e : table.entries) {
    if (e.min_snr <= snr) rate = e.phy_rate;
  }
  return rate;
}

int data_bits_per_symbol(double phy_rate) {
  struct Entry {
    double rate;
    int ndbps;
  };
  static constexpr Entry kTable[] = {{6, 24},  {9, 36},  {12, 48},  {18, 72},
                                     {24, 96}, {36, 144}, {48, 192}, {54, 216}};
  for (const auto& e : kTable) {
    if (e.rate == phy_rate) return e.ndbps;
  }
  throw DomainError("unknown 802.11a rate " + csv::format(phy_rate) + " Mbit/s");
}

namespace timing {
constexpr double kDifs = 34.0;        // us
constexpr double kMeanBackoff = 67.5;  // 7.5 slots of 9 us
constexpr double kSifs = 16.0;
constexpr double kAck = 28.0;
constexpr double kPreamble = 20.0;     // preamble + SIGNAL
constexpr double kSymbol = 4.0;
constexpr int kServiceBits = 16;
constexpr int kTailBits = 6;
constexpr int kMacOverheadBytes = 36;  // MAC header + LLC/SNAP + FCS
}  // namespace timing

double data_frame_duration_us(double phy_rate, int payload) {
  if (payload <= 0) throw DomainError("payload must be positive");
  const int bits = timing::kServiceBits + timing::kTailBits +
                   8 * (payload + timing::kMacOverheadBytes);
  const int ndbps = data_bits_per_symbol(phy_rate);
  const int symbols = (bits + ndbps - 1) / ndbps;
  return timing::kPreamble + timing::kSymbol * symbols;
}

double goodput_estimate(double phy_rate, int payload) {
  if (phy_rate == 0.0) return 0.0;
  const double frame = timing::kDifs + timing::kMeanBackoff +
                       data_frame_duration_us(phy_rate, payload) + timing::kSifs +
                       timing::kAck;
  return 8.0 * payload / frame;  // bits per us == Mbit/s
}

double LinkRun::delivered_bits() const {
  double bits = 0.0;
  for (const auto& r : rows) bits += r.goodput * 1e6 * tick;
  return bits;
}

LinkRun run(const Trajectory& traj, PropagationEngine& engine, const SimConfig& cfg) {
  if (!(cfg.tick > 0.0)) throw ValidationError("tick must be positive");
  if (cfg.payload <= 0) throw ValidationError("payload must be positive");
  if (!(cfg.duration >= 0.0)) throw ValidationError("duration must be non-negative");
  cfg.rates.validate();

  const double floor_dbm = noise_floor(cfg.bandwidth, cfg.noise);
  const auto ticks = static_cast<std::size_t>(std::floor(cfg.duration / cfg.tick + 1e-9));
  LinkRun out;
  out.tick = cfg.tick;
  out.rows.reserve(ticks + 1);
  for (std::size_t k = 0; k <= ticks; ++k) {
    LinkRow row;
    row.t = static_cast<double>(k) * cfg.tick;
    row.distance = distance(traj.position_at(row.t), traj.fixed_pos());
    row.loss = engine.total_loss(row.distance);
    row.rx_power = rx_power(cfg.budget, row.loss);
    row.snr = row.rx_power - floor_dbm;
    row.phy_rate = select_rate(row.snr, row.rx_power, cfg.rates);
    row.goodput = goodput_estimate(row.phy_rate, cfg.payload);
    out.rows.push_back(row);
  }
  return out;
}

std::string serialize_link_run(const LinkRun& run) {
  std::string out = csv::join(kLinkRunHeader) + "\n";
  for (const auto& r : run.rows) {
    out += csv::format(r.t) + "," + csv::format(r.distance) + "," + csv::format(r.loss) + "," +
           csv::format(r.rx_power) + "," + csv::format(r.snr) + "," + csv::format(r.phy_rate) +
           "," + csv::format(r.goodput) + "\n";
  }
  return out;
}

}  // namespace mlpl
