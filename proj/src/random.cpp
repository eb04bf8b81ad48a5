#include "renyi/random.hpp"

#include <bit>
#include <cmath>

#include "renyi/error.hpp"

namespace renyi::random {

Xoshiro256StarStar::Xoshiro256StarStar(std::uint64_t seed) noexcept {
  SplitMix64 expand(seed);
  for (auto& word : s_) word = expand.next();
}

Xoshiro256StarStar::result_type Xoshiro256StarStar::operator()() noexcept {
  const std::uint64_t result = std::rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = std::rotl(s_[3], 45);
  return result;
}

double uniform_open(Generator& gen) noexcept {
  return (static_cast<double>(gen() >> 11) + 0.5) * 0x1.0p-53;
}

std::uint64_t uniform_index(Generator& gen, std::uint64_t n) noexcept {
  const std::uint64_t threshold = (0 - n) % n;
  while (true) {
    const std::uint64_t x = gen();
    if (x >= threshold) return x % n;
  }
}

double standard_normal(Generator& gen) noexcept {
  while (true) {
    const double u = 2.0 * uniform_open(gen) - 1.0;
    const double v = 2.0 * uniform_open(gen) - 1.0;
    const double s = u * u + v * v;
    if (s > 0.0 && s < 1.0) return u * std::sqrt(-2.0 * std::log(s) / s);
  }
}

double log_gamma_variate(Generator& gen, double shape) {
  if (!(shape > 0.0) || !std::isfinite(shape)) {
    throw DomainError("gamma shape must be positive and finite");
  }
  if (shape < 1.0) {
    const double boosted = log_gamma_variate(gen, shape + 1.0);
    return boosted + std::log(uniform_open(gen)) / shape;
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  while (true) {
    const double x = standard_normal(gen);
    double v = 1.0 + c * x;
    if (v <= 0.0) continue;
    v = v * v * v;
    const double log_u = std::log(uniform_open(gen));
    if (log_u < 0.5 * x * x + d - d * v + d * std::log(v)) return std::log(d) + std::log(v);
  }
}

}  // namespace renyi::random
