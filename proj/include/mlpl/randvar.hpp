#pragma once

#include <array>
#include <cstdint>

#include "mlpl/fading.hpp"

namespace mlpl {

/// Philox4x32-10 (Salmon et al., "Parallel random numbers: as easy as 1, 2,
/// 3", SC'11). The 64-bit key is the seed; the 128-bit counter is
/// (draw index: 64 bits, stream id: 64 bits). Draw k of a stream is a pure
/// function of (seed, stream_id, k), so a stream can be resumed from its
/// draw count.
using PhiloxBlock = std::array<std::uint32_t, 4>;
PhiloxBlock philox4x32_10(PhiloxBlock counter, std::array<std::uint32_t, 2> key);

class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id, std::uint64_t draw_count = 0)
      : seed_(seed), stream_id_(stream_id), draws_(draw_count) {}

  /// Next 64 random bits.
  std::uint64_t next_u64();

  /// Uniform double in [0, 1) with 53 random bits.
  double next_uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }
  std::uint64_t draw_count() const { return draws_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t draws_;
};

inline RngStream make_stream(std::uint64_t seed, std::uint64_t stream_id) {
  return RngStream(seed, stream_id);
}

/// Inverse-transform sample from the table with linear interpolation between
/// bracketing points. Consumes exactly one uniform draw.
inline double sample_fading(const CdfTable& table, RngStream& rng) {
  return table.interpolate(rng.next_uniform());
}

}  // namespace mlpl
