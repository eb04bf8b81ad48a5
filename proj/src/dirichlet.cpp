#include "renyi/dirichlet.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "renyi/error.hpp"
#include "renyi/numeric.hpp"
#include "renyi/special_functions.hpp"

namespace renyi {
namespace {

constexpr double kLn2 = std::numbers::ln2;

void check_alphabets(const DirichletPrior& prior, const Histogram& h) {
  if (prior.size() != h.alphabet_size()) {
    throw AlphabetMismatch("prior has " + std::to_string(prior.size()) +
                           " symbols, histogram has " + std::to_string(h.alphabet_size()));
  }
}

void check_params(std::span<const double> params) {
  if (params.empty()) throw InvalidArgument("Dirichlet needs at least one parameter");
  for (double c : params) {
    if (!(c > 0.0) || !std::isfinite(c)) {
      throw DomainError("Dirichlet parameters must be positive and finite");
    }
  }
}

}  // namespace

DirichletPrior::DirichletPrior(double concentration, Distribution base)
    : concentration_(concentration), base_(std::move(base)) {
  if (!(concentration_ > 0.0) || !std::isfinite(concentration_)) {
    throw DomainError("prior concentration must be positive and finite, got " +
                      std::to_string(concentration_));
  }
  params_.reserve(base_.size());
  for (double pi : base_.probs()) {
    if (!(pi > 0.0)) throw DomainError("prior base measure must be strictly positive");
    params_.push_back(concentration_ * pi);
  }
}

DirichletPrior DirichletPrior::add_one(std::size_t size) {
  return symmetric(size, static_cast<double>(size));
}

DirichletPrior DirichletPrior::jeffreys(std::size_t size) {
  return symmetric(size, 0.5 * static_cast<double>(size));
}

DirichletPrior DirichletPrior::symmetric(std::size_t size, double concentration) {
  return DirichletPrior(concentration, Distribution::uniform(size));
}

DirichletPosterior::DirichletPosterior(std::vector<double> params)
    : DirichletPosterior(std::span<const double>(params),
                         std::vector<std::uint64_t>(params.size(), 0)) {}

DirichletPosterior::DirichletPosterior(std::span<const double> prior_params,
                                       std::span<const std::uint64_t> counts)
    : prior_params_(prior_params.begin(), prior_params.end()),
      counts_(counts.begin(), counts.end()) {
  if (prior_params_.size() != counts_.size()) {
    throw AlphabetMismatch("prior parameters and counts differ in length");
  }
  check_params(prior_params_);
  params_.resize(prior_params_.size());
  for (std::size_t i = 0; i < params_.size(); ++i) {
    params_[i] = prior_params_[i] + static_cast<double>(counts_[i]);
    if (counts_[i] > kMaxTotalCount - observations_) throw CountOverflow("posterior count overflow");
    observations_ += counts_[i];
  }
  total_ = numeric::sorted_sum(params_);
}

DirichletPosterior DirichletPosterior::updated(const Histogram& more) const {
  if (more.alphabet_size() != counts_.size()) {
    throw AlphabetMismatch("update histogram has a different alphabet size");
  }
  std::vector<std::uint64_t> sum(counts_);
  for (std::size_t i = 0; i < sum.size(); ++i) {
    if (more[i] > kMaxTotalCount - sum[i]) throw CountOverflow("posterior count overflow");
    sum[i] += more[i];
  }
  return DirichletPosterior(prior_params_, sum);
}

DirichletPosterior posterior(const DirichletPrior& prior, const Histogram& h) {
  check_alphabets(prior, h);
  return DirichletPosterior(prior.parameters(), h.counts());
}

MomentEstimate moment(const DirichletPosterior& post, double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw DomainError("moment order must be positive and finite, got " + std::to_string(gamma));
  }
  const double log_norm = special::log_gamma_ratio(post.total(), gamma);
  std::vector<double> logs;
  logs.reserve(post.size());
  for (double c : post.params()) logs.push_back(special::log_gamma_ratio(c, gamma) - log_norm);
  double log_value = numeric::log_sum_exp(std::move(logs));

  // Σ p^γ ≤ 1 on the simplex for γ > 1 and ≥ 1 for γ < 1; clip rounding.
  if (gamma > 1.0 && log_value > 0.0) log_value = 0.0;
  if (gamma < 1.0 && log_value < 0.0) log_value = 0.0;
  return {std::exp(log_value), log_value, gamma};
}

EntropyEstimate renyi_bayes(const DirichletPrior& prior, const Histogram& h, double gamma) {
  check_alphabets(prior, h);
  const auto order = RenyiOrder::finite(gamma);
  if (!order.is_finite()) {
    throw DomainError("renyi_bayes needs a finite order other than 1, got " +
                      std::to_string(gamma));
  }
  EntropyEstimate est{0.0, order, EstimatorKind::BayesClosedForm, h.total(), std::nullopt};
  if (prior.size() == 1) return est;
  const auto m = moment(posterior(prior, h), gamma);
  const double bits = m.log_value / ((1.0 - gamma) * kLn2);
  est.value_bits = bits > 0.0 ? bits : 0.0;
  return est;
}

EntropyEstimate shannon_bayes(const DirichletPrior& prior, const Histogram& h) {
  check_alphabets(prior, h);
  EntropyEstimate est{0.0, RenyiOrder::shannon(), EstimatorKind::BayesClosedForm, h.total(),
                      std::nullopt};
  if (prior.size() == 1) return est;
  const auto post = posterior(prior, h);
  const double total = post.total();
  std::vector<double> terms;
  terms.reserve(post.size());
  for (double c : post.params()) terms.push_back(c / total * special::digamma(c + 1.0));
  const double nats = special::digamma(total + 1.0) - numeric::sorted_sum(std::move(terms));
  est.value_bits = nats > 0.0 ? nats / kLn2 : 0.0;
  return est;
}

EntropyEstimate collision_bayes(const DirichletPrior& prior, const Histogram& h) {
  return renyi_bayes(prior, h, 2.0);
}

EntropyEstimate bayes_entropy(const DirichletPrior& prior, const Histogram& h, RenyiOrder order) {
  switch (order.kind()) {
    case RenyiOrder::Kind::Shannon:
      return shannon_bayes(prior, h);
    case RenyiOrder::Kind::Finite:
      return renyi_bayes(prior, h, order.gamma());
    case RenyiOrder::Kind::Min:
      break;
  }
  throw InvalidArgument(
      "no closed-form Bayesian min-entropy; use a large finite order as an approximation");
}

}  // namespace renyi
