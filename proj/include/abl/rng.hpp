#ifndef ABL_RNG_HPP
#define ABL_RNG_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace abl {

// Deterministic 64-bit generator (splitmix64). All randomness in the library
// goes through this type so that a seed reproduces a run byte-for-byte,
// independent of platform and standard-library version.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n), n > 0. Rejection sampling, no modulo bias.
  uint64_t next_below(uint64_t n) {
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % n;
  }

  // Uniform in [0, 1).
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  uint64_t state_;
};

// Derives an independent stream seed from a parent seed and a stream id.
// Used as: run seed = mix_seed(master, run index); per-sentence selection
// stream = mix_seed(run seed, sentence id).
inline uint64_t mix_seed(uint64_t seed, uint64_t stream) {
  SplitMix64 a(seed);
  uint64_t h = a.next() ^ (stream * 0x9e3779b97f4a7c15ull + 0x632be59bd9b4e019ull);
  SplitMix64 b(h);
  return b.next();
}

// Fisher-Yates shuffle driven by SplitMix64 (std::shuffle is not portable
// across standard libraries).
template <typename T>
void shuffle(std::vector<T>& v, SplitMix64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.next_below(i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace abl

#endif  // ABL_RNG_HPP
