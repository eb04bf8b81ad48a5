#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>

#include "renyi/dirichlet.hpp"
#include "renyi/entropy.hpp"
#include "renyi/random.hpp"

namespace renyi {

inline constexpr std::size_t kMaxMcSamples = 10'000'000;

/// Monte Carlo settings. Draws are split into `chunks` contiguous blocks;
/// block k owns a generator seeded with seed xor k, so a result depends only
/// on (seed, samples, chunks) and never on thread scheduling.
struct McConfig {
  std::uint64_t seed;
  std::size_t samples = 10'000;
  std::size_t chunks = 1;
};

/// Throws InvalidArgument unless 2 ≤ samples ≤ kMaxMcSamples and 1 ≤ chunks ≤ samples.
void validate(const McConfig& cfg);

struct McQuantiles {
  double lower;   // 2.5%
  double median;  // 50%
  double upper;   // 97.5%
};

struct McResult {
  double mean = 0.0;
  /// Unbiased sample standard deviation over √samples.
  double std_error = 0.0;
  std::size_t samples = 0;
  std::optional<McQuantiles> quantiles;
};

/// One exact draw p ~ Dir(c) from normalized Gamma(c_i, 1) variates.
Distribution sample_dirichlet(const DirichletPosterior& post, random::Generator& gen);

/// Posterior mean of Σ p_i^γ over cfg.samples draws.
McResult estimate_moment(const DirichletPosterior& post, double gamma, const McConfig& cfg);

/// Posterior distribution of H_order(p) in bits: mean, standard error, quantiles.
McResult estimate_entropy_posterior(const DirichletPosterior& post, RenyiOrder order,
                                    const McConfig& cfg);

/// Monte Carlo counterpart of bayes_entropy. Finite orders go through the
/// sampled moment, (1/(1−γ)) log₂ mean, with a delta-method standard error;
/// Shannon and min-entropy report the posterior mean of H itself.
std::pair<EntropyEstimate, McResult> monte_carlo_entropy(const DirichletPosterior& post,
                                                         RenyiOrder order, const McConfig& cfg);

}  // namespace renyi
