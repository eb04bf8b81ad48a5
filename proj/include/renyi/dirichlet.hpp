#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "renyi/entropy.hpp"
#include "renyi/histogram.hpp"

namespace renyi {

/// Dirichlet prior with concentration α and base measure π; a_i = α·π_i.
class DirichletPrior {
 public:
  /// α must be positive and finite; every π_i must be strictly positive.
  DirichletPrior(double concentration, Distribution base);

  /// a_i = 1 for every symbol (α = s, uniform base).
  static DirichletPrior add_one(std::size_t size);
  /// a_i = 1/2 for every symbol (α = s/2, uniform base).
  static DirichletPrior jeffreys(std::size_t size);
  /// Uniform base with the given concentration.
  static DirichletPrior symmetric(std::size_t size, double concentration);

  std::size_t size() const noexcept { return base_.size(); }
  double concentration() const noexcept { return concentration_; }
  const Distribution& base() const noexcept { return base_; }
  std::span<const double> parameters() const noexcept { return params_; }

 private:
  double concentration_;
  Distribution base_;
  std::vector<double> params_;
};

/// Dirichlet posterior with parameters c_i = a_i + n_i.
///
/// The prior parameters and the integer counts are kept apart, so folding in
/// more counts later is exactly the same as folding them all in at once.
class DirichletPosterior {
 public:
  /// Posterior given directly by its parameters (no observed counts).
  explicit DirichletPosterior(std::vector<double> params);
  DirichletPosterior(std::span<const double> prior_params, std::span<const std::uint64_t> counts);

  std::size_t size() const noexcept { return params_.size(); }
  std::span<const double> params() const noexcept { return params_; }
  /// C = Σ c_i.
  double total() const noexcept { return total_; }
  /// Number of observations folded into the posterior.
  std::uint64_t observations() const noexcept { return observations_; }

  /// Conjugate update with further observations over the same alphabet.
  DirichletPosterior updated(const Histogram& more) const;

 private:
  std::vector<double> prior_params_;
  std::vector<std::uint64_t> counts_;
  std::vector<double> params_;
  double total_ = 0.0;
  std::uint64_t observations_ = 0;
};

/// Posterior mean of Σ_i p_i^γ. log_value is computed first and is the
/// accurate field; value = exp(log_value).
struct MomentEstimate {
  double value = 0.0;
  double log_value = 0.0;
  double gamma = 0.0;
};

DirichletPosterior posterior(const DirichletPrior& prior, const Histogram& h);

/// E[Σ p_i^γ] = Σ_i Γ(C)Γ(c_i + γ) / (Γ(C + γ)Γ(c_i)), in the log-gamma domain.
MomentEstimate moment(const DirichletPosterior& post, double gamma);

/// (1/(1−γ)) log₂ E[Σ p_i^γ] for γ > 0, γ ≠ 1.
EntropyEstimate renyi_bayes(const DirichletPrior& prior, const Histogram& h, double gamma);

/// Posterior mean of the Shannon entropy, ψ(C+1) − Σ (c_i/C) ψ(c_i+1), in bits.
/// This is the γ → 1 limit of renyi_bayes.
EntropyEstimate shannon_bayes(const DirichletPrior& prior, const Histogram& h);

/// renyi_bayes at γ = 2.
EntropyEstimate collision_bayes(const DirichletPrior& prior, const Histogram& h);

/// Dispatches on the order. Min-entropy has no closed form and raises
/// InvalidArgument; use a large finite γ as an approximation.
EntropyEstimate bayes_entropy(const DirichletPrior& prior, const Histogram& h, RenyiOrder order);

}  // namespace renyi
