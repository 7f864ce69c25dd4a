#include "mlpl/traces.hpp"

#include <cmath>

#include "mlpl/csv.hpp"
#include "mlpl/error.hpp"

namespace mlpl {
namespace {

std::string where(const std::filesystem::path& path, std::size_t line) {
  return path.string() + ":" + std::to_string(line) + ": ";
}

}  // namespace

std::vector<PathLossSample> parse_simple(const std::filesystem::path& path) {
  const auto table = csv::read(path, kSimpleHeader);
  std::vector<PathLossSample> out;
  out.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    const PathLossSample s{row.values[0], row.values[1]};
    if (!(s.distance > 0.0) || !std::isfinite(s.distance)) {
      throw ValidationError(where(path, row.line) + "distance must be positive, got " +
                            csv::format(s.distance));
    }
    if (!std::isfinite(s.path_loss)) {
      throw ValidationError(where(path, row.line) + "path loss must be finite");
    }
    out.push_back(s);
  }
  return out;
}

std::vector<TraceRecord> parse_raw(const std::filesystem::path& path) {
  const auto table = csv::read(path, kRawHeader);
  std::vector<TraceRecord> out;
  out.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    const auto& v = row.values;
    TraceRecord r;
    r.t = v[0];
    r.tx_power = v[1];
    r.snr = v[2];
    r.tx_pos = Position(v[3], v[4], v[5]);
    r.rx_pos = Position(v[6], v[7], v[8]);
    r.tx_gain = v[9];
    r.rx_gain = v[10];
    r.freq = v[11];
    r.bandwidth = v[12];
    for (double x : v) {
      if (!std::isfinite(x)) throw ValidationError(where(path, row.line) + "non-finite value");
    }
    if (!(r.bandwidth > 0.0)) {
      throw ValidationError(where(path, row.line) + "bandwidth must be positive, got " +
                            csv::format(r.bandwidth));
    }
    if (!(r.freq > 0.0)) {
      throw ValidationError(where(path, row.line) + "frequency must be positive, got " +
                            csv::format(r.freq));
    }
    if (!out.empty() && r.t < out.back().t) {
      throw ValidationError(where(path, row.line) + "time goes backwards (" +
                            csv::format(r.t) + " < " + csv::format(out.back().t) + ")");
    }
    out.push_back(r);
  }
  return out;
}

std::string serialize_simple(std::span<const PathLossSample> samples) {
  std::string out = csv::join(kSimpleHeader) + "\n";
  for (const auto& s : samples) {
    out += csv::format(s.distance) + "," + csv::format(s.path_loss) + "\n";
  }
  return out;
}

std::string serialize_raw(std::span<const TraceRecord> records) {
  std::string out = csv::join(kRawHeader) + "\n";
  for (const auto& r : records) {
    const double fields[] = {r.t,        r.tx_power,  r.snr,       r.tx_pos.x(), r.tx_pos.y(),
                             r.tx_pos.z(), r.rx_pos.x(), r.rx_pos.y(), r.rx_pos.z(), r.tx_gain,
                             r.rx_gain,  r.freq,      r.bandwidth};
    for (std::size_t i = 0; i < std::size(fields); ++i) {
      if (i) out.push_back(',');
      out += csv::format(fields[i]);
    }
    out.push_back('\n');
  }
  return out;
}

double noise_floor(double bandwidth_mhz, const RadioConfig& cfg) {
  if (!(bandwidth_mhz > 0.0)) throw DomainError("bandwidth must be positive");
  return RadioConfig::kThermalNoiseDensity + 10.0 * std::log10(bandwidth_mhz * 1e6) +
         cfg.noise_figure;
}

PathLossSample record_to_sample(const TraceRecord& rec, const RadioConfig& cfg) {
  const double d = distance(rec.tx_pos, rec.rx_pos);
  if (!(d > 0.0)) {
    throw ValidationError("record at t=" + csv::format(rec.t) + " has coincident nodes");
  }
  const double rx_power = rec.snr + noise_floor(rec.bandwidth, cfg);
  return {d, rec.tx_power + rec.tx_gain + rec.rx_gain - rx_power};
}

std::vector<PathLossSample> records_to_samples(std::span<const TraceRecord> records,
                                               const RadioConfig& cfg) {
  std::vector<PathLossSample> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(record_to_sample(r, cfg));
  return out;
}

}  // namespace mlpl
