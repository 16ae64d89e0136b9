#ifndef CLFN_RNG_HPP
#define CLFN_RNG_HPP

#include <cstdint>

namespace clfn {

// SplitMix64 finalizer. Bijective on uint64.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Key for a counter-based random stream. Streams form a tree: child(i)
// derives a key that is distinct for distinct i under the same parent,
// so draws are independent of iteration order and worker count.
struct StreamKey {
  std::uint64_t state;

  static constexpr StreamKey root(std::uint64_t seed) {
    return {mix64(seed ^ 0x5851F42D4C957F2Dull)};
  }
  constexpr StreamKey child(std::uint64_t i) const {
    return {mix64(state ^ (i * 0xD1342543DE82EF95ull + 0x63652362B9137F4Dull))};
  }
};

// Counter-based generator: output k of a stream is a pure function of
// (key, k). No warm-up, O(1) seek, one splitmix round per draw.
class SubstreamRng {
 public:
  explicit SubstreamRng(StreamKey key) : key_(key.state) {}
  SubstreamRng(std::uint64_t seed, std::uint64_t stream)
      : SubstreamRng(StreamKey::root(seed).child(stream)) {}

  std::uint64_t next_u64() {
    return mix64(key_ ^ (++counter_ * 0xA0761D6478BD642Full));
  }

  // Uniform in [0,1), 53-bit mantissa.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Unbiased uniform integer in [0, bound). Lemire's multiply-shift with
  // rejection of the biased low range. bound must be nonzero.
  std::uint64_t next_below(std::uint64_t bound) {
    unsigned __int128 m =
        static_cast<unsigned __int128>(next_u64()) * bound;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < bound) {
      const std::uint64_t cutoff = (0 - bound) % bound;
      while (lo < cutoff) {
        m = static_cast<unsigned __int128>(next_u64()) * bound;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace clfn

#endif  // CLFN_RNG_HPP
