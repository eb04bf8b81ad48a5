#include "renyi/entropy.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>

#include "renyi/error.hpp"
#include "renyi/numeric.hpp"

namespace renyi {
namespace {

constexpr double kLn2 = std::numbers::ln2;

// Above this total, n² no longer fits the 53-bit mantissa.
constexpr std::uint64_t kExactCollisionLimit = std::uint64_t{1} << 26;

double nonnegative(double bits) { return bits > 0.0 ? bits : 0.0; }

// Σ c_i² / t² over one column (or a whole histogram) of counts.
template <typename CountAt>
double collision_of_counts(std::size_t size, std::uint64_t total, CountAt count_at) {
  if (total < kExactCollisionLimit) {
    std::uint64_t squares = 0;
    for (std::size_t i = 0; i < size; ++i) {
      auto c = count_at(i);
      squares += c * c;
    }
    return static_cast<double>(squares) / static_cast<double>(total * total);
  }
  std::vector<double> terms;
  terms.reserve(size);
  const auto t = static_cast<double>(total);
  for (std::size_t i = 0; i < size; ++i) {
    double q = static_cast<double>(count_at(i)) / t;
    terms.push_back(q * q);
  }
  return numeric::sorted_sum(std::move(terms));
}

}  // namespace

Distribution::Distribution(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw InvalidArgument("distribution must have at least one symbol");
  for (double p : probs_) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw InvalidArgument("probabilities must be finite and non-negative");
    }
  }
  double sum = numeric::sorted_sum(probs_);
  if (std::fabs(sum - 1.0) > kSimplexTolerance) {
    throw InvalidArgument("probabilities sum to " + std::to_string(sum) + ", not 1");
  }
}

Distribution Distribution::normalized(std::vector<double> weights) {
  if (weights.empty()) throw InvalidArgument("distribution must have at least one symbol");
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw InvalidArgument("weights must be finite and non-negative");
    }
  }
  double sum = numeric::sorted_sum(weights);
  if (!(sum > 0.0)) throw InvalidArgument("weights sum to zero");
  for (double& w : weights) w /= sum;
  return Distribution(std::move(weights), Trusted{});
}

Distribution Distribution::empirical(const Histogram& h) {
  if (h.total() == 0) throw EmptyHistogram("empirical frequencies need at least one observation");
  std::vector<double> probs(h.alphabet_size());
  const auto n = static_cast<double>(h.total());
  for (std::size_t i = 0; i < probs.size(); ++i) probs[i] = static_cast<double>(h[i]) / n;
  return Distribution(std::move(probs), Trusted{});
}

Distribution Distribution::uniform(std::size_t size) {
  if (size == 0) throw InvalidArgument("distribution must have at least one symbol");
  return Distribution(std::vector<double>(size, 1.0 / static_cast<double>(size)), Trusted{});
}

RenyiOrder RenyiOrder::finite(double gamma) {
  if (std::isnan(gamma) || gamma <= 0.0) {
    throw DomainError("Renyi order must be positive, got " + std::to_string(gamma));
  }
  if (gamma == 1.0) return shannon();
  if (std::isinf(gamma)) return min_entropy();
  return RenyiOrder(Kind::Finite, gamma);
}

RenyiOrder RenyiOrder::min_entropy() noexcept {
  return RenyiOrder(Kind::Min, std::numeric_limits<double>::infinity());
}

std::string RenyiOrder::to_string() const {
  switch (kind_) {
    case Kind::Shannon:
      return "shannon";
    case Kind::Min:
      return "min";
    case Kind::Finite:
      break;
  }
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, gamma_);
  return std::string(buf, ptr);
}

const char* to_string(EstimatorKind kind) noexcept {
  switch (kind) {
    case EstimatorKind::Plugin:
      return "plugin";
    case EstimatorKind::BayesClosedForm:
      return "bayes_closed_form";
    case EstimatorKind::BayesMonteCarlo:
      return "bayes_monte_carlo";
  }
  return "unknown";
}

double collision_probability(const Distribution& p) {
  std::vector<double> squares;
  squares.reserve(p.size());
  for (double q : p.probs()) squares.push_back(q * q);
  return numeric::sorted_sum(std::move(squares));
}

double collision_probability(const Histogram& h) {
  if (h.total() == 0) throw EmptyHistogram("collision probability needs at least one observation");
  return collision_of_counts(h.alphabet_size(), h.total(), [&](std::size_t i) { return h[i]; });
}

double renyi_entropy_bits(std::span<const double> probs, RenyiOrder order) {
  if (probs.size() <= 1) return 0.0;
  switch (order.kind()) {
    case RenyiOrder::Kind::Shannon: {
      std::vector<double> terms;
      terms.reserve(probs.size());
      for (double p : probs) {
        if (p > 0.0) terms.push_back(-p * std::log(p));
      }
      return nonnegative(numeric::sorted_sum(std::move(terms)) / kLn2);
    }
    case RenyiOrder::Kind::Min: {
      double top = *std::max_element(probs.begin(), probs.end());
      return nonnegative(-std::log2(top));
    }
    case RenyiOrder::Kind::Finite:
      break;
  }
  const double gamma = order.gamma();
  if (gamma == 2.0) {
    std::vector<double> squares;
    squares.reserve(probs.size());
    for (double p : probs) squares.push_back(p * p);
    return nonnegative(-std::log2(numeric::sorted_sum(std::move(squares))));
  }
  std::vector<double> logs;
  logs.reserve(probs.size());
  for (double p : probs) {
    if (p > 0.0) logs.push_back(gamma * std::log(p));
  }
  return nonnegative(numeric::log_sum_exp(std::move(logs)) / ((1.0 - gamma) * kLn2));
}

EntropyEstimate renyi_entropy(const Distribution& p, RenyiOrder order) {
  return {renyi_entropy_bits(p.probs(), order), order, EstimatorKind::Plugin, 0, std::nullopt};
}

EntropyEstimate plugin_entropy(const Histogram& h, RenyiOrder order) {
  if (h.total() == 0) throw EmptyHistogram("plug-in estimate needs at least one observation");
  double bits = 0.0;
  if (h.alphabet_size() > 1) {
    if (order.is_finite() && order.gamma() == 2.0) {
      bits = nonnegative(-std::log2(collision_probability(h)));
    } else {
      bits = renyi_entropy_bits(Distribution::empirical(h).probs(), order);
    }
  }
  return {bits, order, EstimatorKind::Plugin, h.total(), std::nullopt};
}

EntropyEstimate conditional_collision_entropy(const JointHistogram& j) {
  if (j.total() == 0) throw EmptyJoint("conditional entropy needs at least one joint observation");
  const auto [px, py] = marginals(j);
  (void)px;

  // Weighted mean taken as an offset from the first non-empty column, so
  // identical per-column values reproduce that value exactly.
  std::optional<double> reference;
  std::vector<double> offsets;
  const auto n = static_cast<double>(j.total());
  for (std::size_t y = 0; y < j.size_y(); ++y) {
    const auto column_total = py[y];
    if (column_total == 0) continue;
    double h = 0.0;
    if (j.size_x() > 1) {
      double pc = collision_of_counts(j.size_x(), column_total,
                                      [&](std::size_t x) { return j.at(x, y); });
      h = nonnegative(-std::log2(pc));
    }
    if (!reference) reference = h;
    offsets.push_back(static_cast<double>(column_total) / n * (h - *reference));
  }
  double bits = nonnegative(*reference + numeric::compensated_sum(offsets));
  return {bits, RenyiOrder::finite(2.0), EstimatorKind::Plugin, j.total(), std::nullopt};
}

std::vector<EntropyEstimate> order_profile(const Distribution& p,
                                           std::span<const RenyiOrder> orders) {
  if (orders.empty()) throw InvalidArgument("order profile needs at least one order");
  std::vector<EntropyEstimate> out;
  out.reserve(orders.size());
  for (const auto& order : orders) out.push_back(renyi_entropy(p, order));
  return out;
}

}  // namespace renyi
