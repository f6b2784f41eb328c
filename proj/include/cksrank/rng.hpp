#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace cksrank {

// Identity string written into run manifests so a result can be tied to the
// exact generators that produced it.
inline constexpr std::string_view kRngIdentity =
    "streams=mt19937_64 seeded via splitmix64; ic-edge-draws=splitmix64 counter hash";

// splitmix64 finalizer: a bijective 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Independent child seed for stream `stream` of `master`. Pure function, so
// any scheduling of streams sees the same seeds.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) noexcept {
  return mix64(mix64(master) ^ (stream * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL));
}

// Top 53 bits mapped to [0, 1). Platform independent, unlike
// std::uniform_real_distribution.
constexpr double to_unit(std::uint64_t bits) noexcept {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Thin wrapper over std::mt19937_64 with portable index and unit draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix64(seed)) {}

  std::uint64_t next_u64() { return engine_(); }
  double next_unit() { return to_unit(engine_()); }
  // Uniform in [0, bound). bound must be > 0.
  std::uint64_t next_index(std::uint64_t bound);

  template <typename It>
  void shuffle(It first, It last) {
    auto count = static_cast<std::uint64_t>(last - first);
    for (std::uint64_t i = count; i > 1; --i) {
      std::uint64_t j = next_index(i);
      std::swap(first[i - 1], first[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cksrank
