#include "renyi/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "renyi/error.hpp"
#include "renyi/numeric.hpp"

namespace renyi {
namespace {

// Log-probabilities of one Dirichlet draw.
void draw_log_probs(std::span<const double> params, random::Generator& gen,
                    std::vector<double>& logp) {
  logp.resize(params.size());
  double top = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < params.size(); ++i) {
    logp[i] = random::log_gamma_variate(gen, params[i]);
    top = std::max(top, logp[i]);
  }
  double sum = 0.0;
  for (double l : logp) sum += std::exp(l - top);
  const double log_norm = top + std::log(sum);
  for (double& l : logp) l -= log_norm;
}

// Evaluates `stat(gen, scratch)` once per draw. Chunk k covers a fixed
// contiguous range of the output and owns generator(seed ^ k), so the
// output is independent of how chunks are scheduled over threads.
template <typename Statistic>
std::vector<double> run_chunks(const McConfig& cfg, Statistic stat) {
  std::vector<double> values(cfg.samples);
  const std::size_t base = cfg.samples / cfg.chunks;
  const std::size_t extra = cfg.samples % cfg.chunks;
  auto chunk_begin = [&](std::size_t k) { return k * base + std::min(k, extra); };

  auto run_one = [&](std::size_t k) {
    random::Generator gen(cfg.seed ^ static_cast<std::uint64_t>(k));
    std::vector<double> scratch;
    const auto end = chunk_begin(k + 1);
    for (auto i = chunk_begin(k); i < end; ++i) values[i] = stat(gen, scratch);
  };

  const std::size_t workers =
      std::min<std::size_t>(cfg.chunks, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t k = 0; k < cfg.chunks; ++k) run_one(k);
    return values;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      try {
        for (auto k = next.fetch_add(1); k < cfg.chunks; k = next.fetch_add(1)) run_one(k);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return values;
}

double quantile_sorted(const std::vector<double>& sorted, double q) {
  const double h = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  if (lo + 1 >= sorted.size()) return sorted.back();
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[lo + 1] - sorted[lo]);
}

McResult summarize(std::vector<double> values) {
  McResult r;
  r.samples = values.size();
  const auto m = static_cast<double>(values.size());
  r.mean = numeric::compensated_sum(values) / m;
  std::vector<double> squares;
  squares.reserve(values.size());
  for (double v : values) squares.push_back((v - r.mean) * (v - r.mean));
  const double variance = numeric::compensated_sum(squares) / (m - 1.0);
  r.std_error = std::sqrt(variance / m);

  std::sort(values.begin(), values.end());
  r.quantiles = McQuantiles{quantile_sorted(values, 0.025), quantile_sorted(values, 0.5),
                            quantile_sorted(values, 0.975)};
  return r;
}

}  // namespace

void validate(const McConfig& cfg) {
  if (cfg.samples < 2) throw InvalidArgument("Monte Carlo needs at least 2 samples");
  if (cfg.samples > kMaxMcSamples) {
    throw InvalidArgument("Monte Carlo samples capped at " + std::to_string(kMaxMcSamples));
  }
  if (cfg.chunks < 1 || cfg.chunks > cfg.samples) {
    throw InvalidArgument("chunks must be between 1 and the number of samples");
  }
}

Distribution sample_dirichlet(const DirichletPosterior& post, random::Generator& gen) {
  std::vector<double> logp;
  draw_log_probs(post.params(), gen, logp);
  for (double& l : logp) l = std::exp(l);
  return Distribution::normalized(std::move(logp));
}

McResult estimate_moment(const DirichletPosterior& post, double gamma, const McConfig& cfg) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw DomainError("moment order must be positive and finite, got " + std::to_string(gamma));
  }
  validate(cfg);
  if (gamma == 1.0) return summarize(std::vector<double>(cfg.samples, 1.0));
  const auto params = post.params();
  return summarize(run_chunks(cfg, [&](random::Generator& gen, std::vector<double>& logp) {
    draw_log_probs(params, gen, logp);
    double sum = 0.0;
    for (double l : logp) sum += std::exp(gamma * l);
    return sum;
  }));
}

McResult estimate_entropy_posterior(const DirichletPosterior& post, RenyiOrder order,
                                    const McConfig& cfg) {
  validate(cfg);
  if (post.size() == 1) return summarize(std::vector<double>(cfg.samples, 0.0));
  const auto params = post.params();
  return summarize(run_chunks(cfg, [&](random::Generator& gen, std::vector<double>& logp) {
    draw_log_probs(params, gen, logp);
    for (double& l : logp) l = std::exp(l);
    return renyi_entropy_bits(logp, order);
  }));
}

std::pair<EntropyEstimate, McResult> monte_carlo_entropy(const DirichletPosterior& post,
                                                         RenyiOrder order, const McConfig& cfg) {
  EntropyEstimate est{0.0, order, EstimatorKind::BayesMonteCarlo, post.observations(), 0.0};
  if (!order.is_finite()) {
    auto mc = estimate_entropy_posterior(post, order, cfg);
    est.value_bits = std::max(0.0, mc.mean);
    est.stderr_bits = mc.std_error;
    return {est, mc};
  }
  const double gamma = order.gamma();
  auto mc = estimate_moment(post, gamma, cfg);
  if (post.size() > 1) {
    const double scale = 1.0 / ((1.0 - gamma) * std::numbers::ln2);
    est.value_bits = std::max(0.0, scale * std::log(mc.mean));
    est.stderr_bits = std::fabs(scale) * mc.std_error / mc.mean;
  }
  return {est, mc};
}

}  // namespace renyi
