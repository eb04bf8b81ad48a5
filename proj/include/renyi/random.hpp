#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace renyi::random {

/// SplitMix64 (Steele, Lea & Flood). Used to expand a 64-bit seed into
/// xoshiro state.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// xoshiro256** 1.0 (Blackman & Vigna), satisfies UniformRandomBitGenerator.
class Xoshiro256StarStar {
 public:
  using result_type = std::uint64_t;

  /// State filled by four SplitMix64 outputs of the seed.
  explicit Xoshiro256StarStar(std::uint64_t seed) noexcept;
  explicit Xoshiro256StarStar(const std::array<std::uint64_t, 4>& state) noexcept
      : s_(state) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept;

  const std::array<std::uint64_t, 4>& state() const noexcept { return s_; }

 private:
  std::array<std::uint64_t, 4> s_;
};

using Generator = Xoshiro256StarStar;

/// Human-readable name of the generator and seeding rule, for report metadata.
inline constexpr const char* kGeneratorName =
    "xoshiro256** seeded by splitmix64; chunk k uses seed xor k";

/// Uniform on the open interval (0, 1), 53-bit resolution.
double uniform_open(Generator& gen) noexcept;

/// Uniform integer in [0, n) by rejection, n > 0.
std::uint64_t uniform_index(Generator& gen, std::uint64_t n) noexcept;

/// Standard normal by the Marsaglia polar method.
double standard_normal(Generator& gen) noexcept;

/// Logarithm of a Gamma(shape, 1) variate, shape > 0.
///
/// Marsaglia–Tsang squeeze for shape ≥ 1; for shape < 1 the boost
/// Gamma(a) = Gamma(a + 1) · U^{1/a} is applied in log space so tiny shapes
/// do not underflow.
double log_gamma_variate(Generator& gen, double shape);

}  // namespace renyi::random
