#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "renyi/dirichlet.hpp"
#include "renyi/entropy.hpp"
#include "renyi/histogram.hpp"

namespace renyi {

/// Largest L-gram alphabet (s₀^L) a count table may use.
inline constexpr std::uint64_t kMaxGramAlphabet = std::uint64_t{1} << 24;

enum class Windowing { Overlapping, Disjoint };

const char* to_string(Windowing w) noexcept;

/// Block-order model of a symbol source: length-L blocks over an s₀-ary alphabet.
struct SourceConfig {
  std::size_t order = 1;          // L
  std::size_t base_alphabet = 2;  // s₀
  Windowing windowing = Windowing::Overlapping;
};

/// Throws InvalidArgument for L = 0 or s₀ = 0, AlphabetTooLarge when s₀^L > 2^24.
void validate(const SourceConfig& cfg);
/// s₀^L for a validated config.
std::size_t gram_alphabet_size(const SourceConfig& cfg);

enum class RateEstimator { Plugin, Bayes };

struct RateReport {
  std::size_t order = 1;
  std::size_t base_alphabet = 2;
  std::uint64_t grams = 0;
  double entropy_per_gram_bits = 0.0;
  double rate_bits_per_symbol = 0.0;
  EntropyEstimate estimate;
};

struct KeySizeReport {
  std::uint64_t key_length_symbols = 0;
  double rate_bits_per_symbol = 0.0;
  double effective_bits = 0.0;
  double nominal_bits = 0.0;
};

struct CurvePoint {
  std::size_t prefix_length;
  double rate_bits_per_symbol;
};

/// Histogram of L-grams; gram index is the big-endian base-s₀ value of the window.
Histogram lgram_histogram(std::span<const Symbol> stream, const SourceConfig& cfg);

/// Entropy of the L-gram histogram divided by L. A Bayesian estimate without
/// an explicit prior uses the add-one prior over s₀^L grams.
RateReport entropy_rate(std::span<const Symbol> stream, const SourceConfig& cfg,
                        RateEstimator estimator, const std::optional<DirichletPrior>& prior,
                        RenyiOrder order);

/// Rate from an existing L-gram histogram over s₀^L symbols.
RateReport rate_from_grams(const Histogram& grams, const SourceConfig& cfg,
                           RateEstimator estimator, const std::optional<DirichletPrior>& prior,
                           RenyiOrder order);

/// entropy_rate on each prefix; checkpoints must be strictly increasing and
/// each at least L and at most the stream length.
std::vector<CurvePoint> convergence_curve(std::span<const Symbol> stream, const SourceConfig& cfg,
                                          RateEstimator estimator,
                                          const std::optional<DirichletPrior>& prior,
                                          RenyiOrder order,
                                          std::span<const std::size_t> checkpoints);

/// key length × rate, against the nominal key length × log₂ s₀.
KeySizeReport effective_key_size(const RateReport& rate, std::uint64_t key_length_symbols);

}  // namespace renyi
