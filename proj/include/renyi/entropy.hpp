#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "renyi/histogram.hpp"

namespace renyi {

/// Tolerance on Σ p_i = 1 for explicit distributions.
inline constexpr double kSimplexTolerance = 1e-12;

/// An explicit probability vector over s symbols.
class Distribution {
 public:
  /// Validates non-negativity and Σ p_i = 1 within kSimplexTolerance.
  explicit Distribution(std::vector<double> probs);

  /// Divides non-negative weights by their (compensated) sum.
  static Distribution normalized(std::vector<double> weights);
  /// Empirical frequencies n_i / n; EmptyHistogram when n = 0.
  static Distribution empirical(const Histogram& h);
  static Distribution uniform(std::size_t size);

  std::size_t size() const noexcept { return probs_.size(); }
  std::span<const double> probs() const noexcept { return probs_; }
  double operator[](std::size_t i) const { return probs_.at(i); }

 private:
  struct Trusted {};
  Distribution(std::vector<double> probs, Trusted) : probs_(std::move(probs)) {}

  std::vector<double> probs_;
};

/// Order γ of a Rényi entropy: finite γ > 0 (γ ≠ 1), or one of the two limits.
class RenyiOrder {
 public:
  enum class Kind { Finite, Shannon, Min };

  /// γ = 1 becomes Shannon and γ = +inf becomes Min; γ ≤ 0 or NaN raises DomainError.
  static RenyiOrder finite(double gamma);
  static RenyiOrder shannon() noexcept { return RenyiOrder(Kind::Shannon, 1.0); }
  static RenyiOrder min_entropy() noexcept;

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  /// γ for finite orders, 1 for Shannon, +inf for min-entropy.
  double gamma() const noexcept { return gamma_; }
  /// "shannon", "min", or the shortest round-trip decimal form of γ.
  std::string to_string() const;

  friend bool operator==(const RenyiOrder&, const RenyiOrder&) = default;

 private:
  RenyiOrder(Kind kind, double gamma) : kind_(kind), gamma_(gamma) {}

  Kind kind_;
  double gamma_;
};

enum class EstimatorKind { Plugin, BayesClosedForm, BayesMonteCarlo };

const char* to_string(EstimatorKind kind) noexcept;

/// An entropy value in bits together with how it was obtained.
/// stderr_bits is set exactly for Monte Carlo estimates.
struct EntropyEstimate {
  double value_bits = 0.0;
  RenyiOrder order = RenyiOrder::shannon();
  EstimatorKind estimator = EstimatorKind::Plugin;
  std::uint64_t n = 0;
  std::optional<double> stderr_bits;
};

/// Σ p_i²; lies in [1/s, 1].
double collision_probability(const Distribution& p);
/// Σ n_i² / n², exact to one rounding when the counts are small enough for
/// integer arithmetic. EmptyHistogram when n = 0.
double collision_probability(const Histogram& h);

/// H_γ(p) in bits for raw probabilities, no validation. Zero-probability
/// entries contribute nothing at every order; a single-symbol alphabet gives 0.
double renyi_entropy_bits(std::span<const double> probs, RenyiOrder order);

EntropyEstimate renyi_entropy(const Distribution& p, RenyiOrder order);

/// Plug-in estimate from empirical frequencies of h.
EntropyEstimate plugin_entropy(const Histogram& h, RenyiOrder order);

/// Σ_y P̂(y) · H₂(X | Y = y) from plug-in conditionals; empty columns are skipped.
EntropyEstimate conditional_collision_entropy(const JointHistogram& j);

std::vector<EntropyEstimate> order_profile(const Distribution& p,
                                           std::span<const RenyiOrder> orders);

}  // namespace renyi
