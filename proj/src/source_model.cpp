#include "renyi/source_model.hpp"

#include <cmath>
#include <string>

#include "renyi/error.hpp"

namespace renyi {

const char* to_string(Windowing w) noexcept {
  return w == Windowing::Overlapping ? "overlapping" : "disjoint";
}

void validate(const SourceConfig& cfg) {
  if (cfg.order < 1) throw InvalidArgument("block order L must be at least 1");
  if (cfg.base_alphabet < 1) throw InvalidArgument("base alphabet must have at least one symbol");
  std::uint64_t size = 1;
  for (std::size_t k = 0; k < cfg.order; ++k) {
    size *= cfg.base_alphabet;
    if (size > kMaxGramAlphabet) {
      throw AlphabetTooLarge("gram alphabet " + std::to_string(cfg.base_alphabet) + "^" +
                             std::to_string(cfg.order) + " exceeds 2^24");
    }
  }
}

std::size_t gram_alphabet_size(const SourceConfig& cfg) {
  validate(cfg);
  std::size_t size = 1;
  for (std::size_t k = 0; k < cfg.order; ++k) size *= cfg.base_alphabet;
  return size;
}

Histogram lgram_histogram(std::span<const Symbol> stream, const SourceConfig& cfg) {
  const auto alphabet = gram_alphabet_size(cfg);
  const auto L = cfg.order;
  if (stream.size() < L) {
    throw StreamTooShort("stream of length " + std::to_string(stream.size()) +
                         " is shorter than block order " + std::to_string(L));
  }
  for (std::size_t k = 0; k < stream.size(); ++k) {
    if (stream[k] >= cfg.base_alphabet) {
      throw IndexOutOfAlphabet("stream symbol " + std::to_string(k) + " has index " +
                               std::to_string(stream[k]) + ", base alphabet size is " +
                               std::to_string(cfg.base_alphabet));
    }
  }

  std::vector<std::uint64_t> counts(alphabet, 0);
  const std::size_t step = cfg.windowing == Windowing::Overlapping ? 1 : L;
  for (std::size_t start = 0; start + L <= stream.size(); start += step) {
    std::size_t index = 0;
    for (std::size_t k = 0; k < L; ++k) index = index * cfg.base_alphabet + stream[start + k];
    ++counts[index];
  }
  return Histogram(std::move(counts));
}

RateReport rate_from_grams(const Histogram& grams, const SourceConfig& cfg,
                           RateEstimator estimator, const std::optional<DirichletPrior>& prior,
                           RenyiOrder order) {
  if (grams.alphabet_size() != gram_alphabet_size(cfg)) {
    throw AlphabetMismatch("gram histogram has " + std::to_string(grams.alphabet_size()) +
                           " symbols, expected " + std::to_string(gram_alphabet_size(cfg)));
  }
  RateReport report;
  report.order = cfg.order;
  report.base_alphabet = cfg.base_alphabet;
  report.grams = grams.total();
  if (estimator == RateEstimator::Plugin) {
    report.estimate = plugin_entropy(grams, order);
  } else {
    if (prior && prior->size() != grams.alphabet_size()) {
      throw AlphabetMismatch("prior has " + std::to_string(prior->size()) +
                             " symbols, gram alphabet has " +
                             std::to_string(grams.alphabet_size()));
    }
    report.estimate = bayes_entropy(prior ? *prior : DirichletPrior::add_one(grams.alphabet_size()),
                                    grams, order);
  }
  report.entropy_per_gram_bits = report.estimate.value_bits;
  report.rate_bits_per_symbol = report.entropy_per_gram_bits / static_cast<double>(cfg.order);
  return report;
}

RateReport entropy_rate(std::span<const Symbol> stream, const SourceConfig& cfg,
                        RateEstimator estimator, const std::optional<DirichletPrior>& prior,
                        RenyiOrder order) {
  return rate_from_grams(lgram_histogram(stream, cfg), cfg, estimator, prior, order);
}

std::vector<CurvePoint> convergence_curve(std::span<const Symbol> stream, const SourceConfig& cfg,
                                          RateEstimator estimator,
                                          const std::optional<DirichletPrior>& prior,
                                          RenyiOrder order,
                                          std::span<const std::size_t> checkpoints) {
  std::vector<CurvePoint> curve;
  curve.reserve(checkpoints.size());
  for (std::size_t k = 0; k < checkpoints.size(); ++k) {
    const auto length = checkpoints[k];
    if (k > 0 && length <= checkpoints[k - 1]) {
      throw InvalidArgument("checkpoints must be strictly increasing");
    }
    if (length < cfg.order || length > stream.size()) {
      throw StreamTooShort("checkpoint " + std::to_string(length) +
                           " is outside [L, stream length] = [" + std::to_string(cfg.order) +
                           ", " + std::to_string(stream.size()) + "]");
    }
    const auto report = entropy_rate(stream.first(length), cfg, estimator, prior, order);
    curve.push_back({length, report.rate_bits_per_symbol});
  }
  return curve;
}

KeySizeReport effective_key_size(const RateReport& rate, std::uint64_t key_length_symbols) {
  if (key_length_symbols < 1) throw InvalidArgument("key length must be at least one symbol");
  const auto b = static_cast<double>(key_length_symbols);
  return {key_length_symbols, rate.rate_bits_per_symbol, b * rate.rate_bits_per_symbol,
          b * std::log2(static_cast<double>(rate.base_alphabet))};
}

}  // namespace renyi
