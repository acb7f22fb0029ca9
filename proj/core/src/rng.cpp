#include "fullow/rng.hpp"

#include <array>

namespace fullow {

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id) {
  std::array<std::uint32_t, 5> words = {
      static_cast<std::uint32_t>(seed),
      static_cast<std::uint32_t>(seed >> 32),
      static_cast<std::uint32_t>(stream_id),
      static_cast<std::uint32_t>(stream_id >> 32),
      0x9e3779b9u,
  };
  std::seed_seq seq(words.begin(), words.end());
  engine_.seed(seq);
}

}  // namespace fullow
