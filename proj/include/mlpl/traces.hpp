#pragma once

#include <Eigen/Core>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace mlpl {

using Position = Eigen::Vector3d;

/// A raw measurement taken by the receiving node.
struct TraceRecord {
  double t = 0.0;          // s
  double tx_power = 0.0;   // dBm
  double snr = 0.0;        // dB
  Position tx_pos = Position::Zero();
  Position rx_pos = Position::Zero();
  double tx_gain = 0.0;    // dBi
  double rx_gain = 0.0;    // dBi
  double freq = 0.0;       // MHz
  double bandwidth = 0.0;  // MHz
};

/// A (distance, path loss) training pair.
struct PathLossSample {
  double distance = 0.0;   // m
  double path_loss = 0.0;  // dB
};

/// Receiver noise model. The thermal density is fixed at -174 dBm/Hz.
struct RadioConfig {
  double noise_figure = 7.0;  // dB
  static constexpr double kThermalNoiseDensity = -174.0;  // dBm/Hz
};

inline const std::vector<std::string> kSimpleHeader{"distance_m", "path_loss_db"};
inline const std::vector<std::string> kRawHeader{
    "t_s",  "tx_power_dbm", "snr_db",      "tx_x",        "tx_y",
    "tx_z", "rx_x",         "rx_y",        "rx_z",        "tx_gain_dbi",
    "rx_gain_dbi", "freq_mhz", "bw_mhz"};

std::vector<PathLossSample> parse_simple(const std::filesystem::path& path);
std::vector<TraceRecord> parse_raw(const std::filesystem::path& path);

std::string serialize_simple(std::span<const PathLossSample> samples);
std::string serialize_raw(std::span<const TraceRecord> records);

/// Euclidean distance in metres.
inline double distance(const Position& a, const Position& b) { return (a - b).norm(); }

/// Thermal noise floor in dBm over `bandwidth_mhz`, including the noise figure.
double noise_floor(double bandwidth_mhz, const RadioConfig& cfg);

/// Recovers path loss from a recorded SNR through the link budget:
///   rx_power = snr + noise_floor
///   path_loss = tx_power + tx_gain + rx_gain - rx_power
/// Throws ValidationError when the two nodes coincide.
PathLossSample record_to_sample(const TraceRecord& rec, const RadioConfig& cfg);

std::vector<PathLossSample> records_to_samples(std::span<const TraceRecord> records,
                                               const RadioConfig& cfg);

}  // namespace mlpl
