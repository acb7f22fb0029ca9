#pragma once

#include <cstdint>
#include <random>

namespace fullow {

/// Stream identifiers. Directions and noise never share an engine, so turning
/// stochastic noise on does not change the sequence of polling directions.
enum class Stream : std::uint64_t { Directions = 0, Noise = 1 };

/// A deterministic random stream keyed by (seed, stream id).
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  double normal() { return normal_(engine_); }
  /// Uniform draw on [lo, hi).
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

inline RngStream seeded_rng(std::uint64_t seed, Stream stream) {
  return RngStream(seed, static_cast<std::uint64_t>(stream));
}

}  // namespace fullow
