#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "mlpl/propagation.hpp"
#include "mlpl/traces.hpp"

namespace mlpl {

struct Waypoint {
  double t = 0.0;
  Position pos = Position::Zero();
};

/// Mobile-node waypoints against a fixed node. Positions are held between
/// waypoints (zero-order hold).
class Trajectory {
 public:
  Trajectory(std::vector<Waypoint> waypoints, Position fixed_pos);

  /// Position of the latest waypoint with time <= t. Throws DomainError before
  /// the first waypoint.
  Position position_at(double t) const;

  const std::vector<Waypoint>& waypoints() const { return waypoints_; }
  const Position& fixed_pos() const { return fixed_pos_; }

 private:
  std::vector<Waypoint> waypoints_;
  Position fixed_pos_;
};

inline const std::vector<std::string> kTrajectoryHeader{"t_s", "x", "y", "z"};

Trajectory parse_trajectory(const std::filesystem::path& path, const Position& fixed_pos);
std::string serialize_trajectory(const Trajectory& traj);

struct RateEntry {
  double min_snr = 0.0;    // dB
  double phy_rate = 0.0;   // Mbit/s
};

struct RateTable {
  std::vector<RateEntry> entries;
  double min_rx_power = -90.0;  // dBm, preamble detection threshold

  void validate() const;
};

/// 802.11a OFDM rates with static SNR thresholds.
RateTable default_rate_table();

/// 0 below the preamble threshold, otherwise the highest rate whose threshold
/// the SNR meets (0 if none).
double select_rate(double snr, double rx_power, const RateTable& table);

/// Data bits per OFDM symbol for an 802.11a rate; throws for unknown rates.
int data_bits_per_symbol(double phy_rate);

/// PPDU duration in microseconds for a data frame carrying `payload` bytes.
double data_frame_duration_us(double phy_rate, int payload);

/// Saturated single-sender DCF goodput in Mbit/s: one payload per
///   DIFS + mean backoff + data PPDU + SIFS + ACK.
double goodput_estimate(double phy_rate, int payload);

struct SimConfig {
  LinkBudget budget;
  double bandwidth = 20.0;  // MHz
  RadioConfig noise;
  int payload = 1400;       // bytes
  double duration = 404.0;  // s
  double tick = 1.0;        // s
  std::uint64_t seed = 1;
  RateTable rates = default_rate_table();
};

struct LinkRow {
  double t = 0.0;
  double distance = 0.0;
  double loss = 0.0;
  double rx_power = 0.0;
  double snr = 0.0;
  double phy_rate = 0.0;
  double goodput = 0.0;
};

struct LinkRun {
  std::vector<LinkRow> rows;
  double tick = 1.0;

  /// Sum of goodput * tick, in bits.
  double delivered_bits() const;
};

inline const std::vector<std::string> kLinkRunHeader{
    "t_s", "distance_m", "loss_db", "rx_power_dbm", "snr_db", "phy_rate_mbps", "goodput_mbps"};

/// Replays the trajectory one tick at a time, t = 0, tick, ..., duration.
/// Consumes one fading draw per tick when the engine has fading.
LinkRun run(const Trajectory& traj, PropagationEngine& engine, const SimConfig& cfg);

std::string serialize_link_run(const LinkRun& run);

}  // namespace mlpl
