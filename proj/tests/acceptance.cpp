// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "renyi/cli.hpp"
#include "renyi/dirichlet.hpp"
#include "renyi/entropy.hpp"
#include "renyi/histogram.hpp"
#include "renyi/monte_carlo.hpp"
#include "renyi/random.hpp"
#include "renyi/source_model.hpp"

using namespace renyi;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail = what;
      pass = false;
    }
  }
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

double rel_err(double got, double want) { return std::fabs(got - want) / std::fabs(want); }

std::vector<double> random_simplex(std::mt19937_64& gen, std::size_t s) {
  std::exponential_distribution<double> e(1.0);
  std::vector<double> p(s);
  double sum = 0.0;
  for (auto& x : p) sum += (x = e(gen));
  for (auto& x : p) x /= sum;
  return p;
}

Outcome moment_agreement() {
  Outcome o;
  struct Fixture {
    std::vector<double> params;
    double expected;
  };
  const Fixture fixtures[] = {{{1, 1}, 2.0 / 3.0}, {{4, 2}, 13.0 / 21.0}};
  double worst_rel = 0.0;
  double worst_z = 0.0;
  for (const auto& f : fixtures) {
    DirichletPosterior post(f.params);
    const double closed = moment(post, 2.0).value;
    worst_rel = std::max(worst_rel, rel_err(closed, f.expected));
    o.require(rel_err(closed, f.expected) <= 1e-12, "closed-form moment off by " + fmt(rel_err(closed, f.expected)));
    auto mc = estimate_moment(post, 2.0, {20240601, 100000, 1});
    const double z = std::fabs(mc.mean - f.expected) / mc.std_error;
    worst_z = std::max(worst_z, z);
    o.require(z <= 4.0, "Monte Carlo moment " + fmt(z) + " stderr from closed form");
  }
  if (o.pass) o.detail = "max rel err " + fmt(worst_rel) + ", max |z| " + fmt(worst_z);
  return o;
}

Outcome shannon_limit() {
  Outcome o;
  std::mt19937_64 gen(2);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t s = 2 + gen() % 31;
    const double a = 0.25 + std::uniform_real_distribution<double>(0.0, 2.0)(gen);
    auto prior = DirichletPrior::symmetric(s, a * static_cast<double>(s));
    std::vector<std::uint64_t> counts(s);
    for (auto& c : counts) c = gen() % 4 == 0 ? 0 : gen() % 50;
    Histogram h(counts);
    const double sh = shannon_bayes(prior, h).value_bits;
    for (double g : {1.0 - 1e-4, 1.0 + 1e-4}) {
      const double diff = std::fabs(renyi_bayes(prior, h, g).value_bits - sh);
      worst = std::max(worst, diff);
      o.require(diff <= 1e-3, "gap " + fmt(diff) + " bits at trial " + std::to_string(trial));
    }
  }
  if (o.pass) o.detail = "max gap " + fmt(worst) + " bits";
  return o;
}

Outcome shannon_vs_mc() {
  Outcome o;
  std::mt19937_64 gen(3);
  double worst_z = 0.0;
  {
    auto prior = DirichletPrior::add_one(2);
    Histogram h({0, 0});
    const double closed = shannon_bayes(prior, h).value_bits;
    o.require(std::fabs(closed - 0.5 / std::log(2.0)) <= 1e-12,
              "flat 2-simplex posterior gives " + fmt(closed) + " bits");
    auto mc = estimate_entropy_posterior(posterior(prior, h), RenyiOrder::shannon(), {30, 100000, 1});
    worst_z = std::fabs(mc.mean - closed) / mc.std_error;
    o.require(worst_z <= 4.0, "flat fixture Monte Carlo |z| = " + fmt(worst_z));
  }
  for (int trial = 1; trial < 20; ++trial) {
    const std::size_t s = 2 + gen() % 31;
    const double a = std::uniform_real_distribution<double>(0.1, 3.0)(gen);
    auto prior = DirichletPrior::symmetric(s, a * static_cast<double>(s));
    std::vector<std::uint64_t> counts(s);
    for (auto& c : counts) c = gen() % 30;
    Histogram h(counts);
    const double closed = shannon_bayes(prior, h).value_bits;
    auto mc = estimate_entropy_posterior(posterior(prior, h), RenyiOrder::shannon(),
                                         {static_cast<std::uint64_t>(30 + trial), 100000, 4});
    const double z = std::fabs(mc.mean - closed) / mc.std_error;
    worst_z = std::max(worst_z, z);
    o.require(z <= 4.0, "instance " + std::to_string(trial) + " |z| = " + fmt(z));
  }
  if (o.pass) o.detail = "20 instances, max |z| " + fmt(worst_z);
  return o;
}

std::vector<std::vector<double>> distribution_corpus() {
  std::mt19937_64 gen(4);
  std::vector<std::vector<double>> corpus;
  for (int k = 0; k < 1000; ++k) corpus.push_back(random_simplex(gen, 2 + gen() % 63));
  return corpus;
}

Outcome inequality_chain() {
  Outcome o;
  const std::vector<RenyiOrder> orders{
      RenyiOrder::finite(0.25), RenyiOrder::finite(0.5), RenyiOrder::finite(0.9),
      RenyiOrder::shannon(),    RenyiOrder::finite(1.5), RenyiOrder::finite(2.0),
      RenyiOrder::finite(3.0),  RenyiOrder::finite(8.0), RenyiOrder::min_entropy()};
  for (const auto& p : distribution_corpus()) {
    const double logs = std::log2(static_cast<double>(p.size()));
    const double h = renyi_entropy_bits(p, RenyiOrder::shannon());
    const double h2 = renyi_entropy_bits(p, RenyiOrder::finite(2.0));
    const double hmin = renyi_entropy_bits(p, RenyiOrder::min_entropy());
    o.require(logs + 1e-9 >= h && h + 1e-9 >= h2 && h2 + 1e-9 >= hmin, "chain violated");
    o.require(logs - h2 > 1e-9, "non-uniform distribution attains log s");
    double prev = std::numeric_limits<double>::infinity();
    for (const auto& order : orders) {
      const double v = renyi_entropy_bits(p, order);
      o.require(v <= prev + 1e-9, "order monotonicity violated at " + order.to_string());
      prev = v;
    }
  }
  for (std::size_t s = 2; s <= 64; ++s) {
    const std::vector<double> u(s, 1.0 / static_cast<double>(s));
    const double logs = std::log2(static_cast<double>(s));
    for (const auto& order : orders) {
      o.require(std::fabs(renyi_entropy_bits(u, order) - logs) <= 1e-9,
                "uniform fixture s = " + std::to_string(s) + " not at log s");
    }
  }
  if (o.pass) o.detail = "1000 distributions, 9 orders, 63 uniform fixtures";
  return o;
}

Outcome definition_consistency() {
  Outcome o;
  for (const auto& p : distribution_corpus()) {
    const double h2 = renyi_entropy_bits(p, RenyiOrder::finite(2.0));
    const double pc = oracle::power_sum(p, 2.0);
    o.require(std::fabs(h2 + std::log2(pc)) <= 1e-12, "H2 differs from -log2 P_C");
  }
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t sx = 1 + gen() % 8;
    const std::size_t sy = 1 + gen() % 8;
    std::vector<std::uint64_t> col(sx);
    std::vector<std::uint64_t> row(sy);
    for (auto& c : col) c = 1 + gen() % 9;
    for (auto& r : row) r = 1 + gen() % 9;
    std::vector<std::vector<std::uint64_t>> rows(sx, std::vector<std::uint64_t>(sy));
    for (std::size_t x = 0; x < sx; ++x) {
      for (std::size_t y = 0; y < sy; ++y) rows[x][y] = col[x] * row[y];
    }
    const double cond = conditional_collision_entropy(JointHistogram::from_rows(rows)).value_bits;
    const double marginal = plugin_entropy(Histogram(col), RenyiOrder::finite(2.0)).value_bits;
    o.require(cond == marginal, "product joint: " + fmt(cond) + " vs H2(X) " + fmt(marginal));

    std::vector<std::vector<std::uint64_t>> diag(sx, std::vector<std::uint64_t>(sx, 0));
    for (std::size_t x = 0; x < sx; ++x) diag[x][x] = col[x];
    o.require(conditional_collision_entropy(JointHistogram::from_rows(diag)).value_bits == 0.0,
              "diagonal joint is not 0");
  }
  const double fixture =
      conditional_collision_entropy(JointHistogram::from_rows({{2, 1}, {1, 2}})).value_bits;
  o.require(std::fabs(fixture - 0.84800) <= 1e-5, "[[2,1],[1,2]] gives " + fmt(fixture));
  if (o.pass) o.detail = "[[2,1],[1,2]] -> " + fmt(fixture) + " bits";
  return o;
}

Outcome consistency_at_scale() {
  Outcome o;
  const std::vector<double> p{0.5, 0.25, 0.125, 0.125};
  const double h_true = oracle::shannon_bits(p);
  const double h2_true = oracle::renyi_bits(p, 2.0);
  random::Generator gen(6);
  std::vector<Symbol> draws(100000);
  for (auto& d : draws) {
    const double u = random::uniform_open(gen);
    d = u < 0.5 ? 0 : u < 0.75 ? 1 : u < 0.875 ? 2 : 3;
  }
  auto h = from_samples(std::span<const Symbol>(draws), 4);
  auto prior = DirichletPrior::add_one(4);
  const double est[] = {plugin_entropy(h, RenyiOrder::shannon()).value_bits,
                        shannon_bayes(prior, h).value_bits,
                        plugin_entropy(h, RenyiOrder::finite(2.0)).value_bits,
                        collision_bayes(prior, h).value_bits};
  const double truth[] = {h_true, h_true, h2_true, h2_true};
  const char* names[] = {"plug-in H", "Bayes H", "plug-in H2", "Bayes H2"};
  double worst = 0.0;
  for (int k = 0; k < 4; ++k) {
    const double gap = std::fabs(est[k] - truth[k]);
    worst = std::max(worst, gap);
    o.require(gap <= 0.02, std::string(names[k]) + " off by " + fmt(gap));
  }
  o.require(std::fabs(h_true - 1.75) <= 1e-15, "H(p*) oracle is not 1.75");
  if (o.pass) {
    o.detail = "H2(p*) = " + fmt(h2_true) + " by direct summation, max gap " + fmt(worst);
  }
  return o;
}

Outcome source_fixtures() {
  Outcome o;
  std::vector<Symbol> alt(100000);
  for (std::size_t i = 0; i < alt.size(); ++i) alt[i] = static_cast<Symbol>(i % 2);
  const double ra = entropy_rate(alt, {2, 2, Windowing::Overlapping}, RateEstimator::Plugin,
                                 std::nullopt, RenyiOrder::shannon())
                        .rate_bits_per_symbol;
  o.require(std::fabs(ra - 0.5) <= 0.01, "alternating stream rate " + fmt(ra));

  const std::vector<Symbol> constant(100000, 1);
  const double rc = entropy_rate(constant, {2, 2, Windowing::Overlapping}, RateEstimator::Plugin,
                                 std::nullopt, RenyiOrder::shannon())
                        .rate_bits_per_symbol;
  o.require(rc == 0.0, "constant stream rate " + fmt(rc));

  random::Generator gen(7);
  std::vector<Symbol> coin(100000);
  for (auto& c : coin) c = static_cast<Symbol>(random::uniform_index(gen, 2));
  auto report = entropy_rate(coin, {1, 2, Windowing::Overlapping}, RateEstimator::Plugin,
                             std::nullopt, RenyiOrder::shannon());
  o.require(std::fabs(report.rate_bits_per_symbol - 1.0) <= 0.005,
            "fair coin rate " + fmt(report.rate_bits_per_symbol));

  const double unit = effective_key_size(report, 1).effective_bits;
  for (std::uint64_t b = 1; b <= 4096; ++b) {
    const double e = effective_key_size(report, b).effective_bits;
    o.require(e == static_cast<double>(b) * unit, "key size not linear at b = " + std::to_string(b));
  }
  if (o.pass) o.detail = "alternating " + fmt(ra) + ", coin " + fmt(report.rate_bits_per_symbol);
  return o;
}

class Scratch {
 public:
  Scratch() {
    std::random_device rd;
    dir_ = std::filesystem::temp_directory_path() / ("renyi_acceptance_" + std::to_string(rd()));
    std::filesystem::create_directories(dir_);
  }
  ~Scratch() {
    std::error_code ec;
    std::filesystem::remove_all(dir_, ec);
  }
  std::string write(const std::string& name, const std::string& text) const {
    auto p = dir_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
  }

 private:
  std::filesystem::path dir_;
};

std::vector<std::string> cli_suite(const std::vector<std::vector<std::string>>& invocations) {
  std::vector<std::string> outputs;
  for (const auto& args : invocations) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    outputs.push_back(std::to_string(code) + "\n" + out.str());
  }
  return outputs;
}

Outcome reproducibility() {
  Outcome o;
  Scratch dir;
  const auto counts = dir.write("c.csv", "a,40\nb,17\nc,3\nd,0\ne,9\n");
  const auto joint = dir.write("j.csv", "a,x,4\na,y,1\nb,x,2\nb,y,6\n");
  std::string bytes;
  std::mt19937 g(8);
  for (int i = 0; i < 20000; ++i) bytes.push_back(static_cast<char>(g() & 0xff));
  const auto raw = dir.write("r.bin", bytes);
  const std::vector<std::vector<std::string>> suite{
      {"estimate", "--counts", counts},
      {"estimate", "--counts", counts, "--order", "shannon", "--estimator", "plugin"},
      {"estimate", "--counts", counts, "--order", "3", "--estimator", "mc", "--seed", "11",
       "--samples", "20000", "--chunks", "4"},
      {"profile", "--counts", counts, "--estimator", "mc", "--seed", "12", "--samples", "20000",
       "--chunks", "3"},
      {"profile", "--counts", counts, "--estimator", "plugin"},
      {"conditional", "--joint", joint},
      {"rate", "--raw", raw, "--symbol-bits", "2", "--order-l", "3", "--checkpoints", "100,1000"},
      {"keysize", "--raw", raw, "--symbol-bits", "1", "--order-l", "4", "--window", "disjoint",
       "--key-symbols", "256"},
  };
  const auto first = cli_suite(suite);
  const auto second = cli_suite(suite);
  for (std::size_t k = 0; k < suite.size(); ++k) {
    o.require(first[k] == second[k], "CLI invocation " + std::to_string(k) + " differs");
    o.require(first[k].rfind("0\n", 0) == 0, "CLI invocation " + std::to_string(k) + " failed");
  }

  auto same = [](const McResult& a, const McResult& b) {
    return std::memcmp(&a.mean, &b.mean, sizeof(double)) == 0 &&
           std::memcmp(&a.std_error, &b.std_error, sizeof(double)) == 0 &&
           std::memcmp(&a.quantiles->median, &b.quantiles->median, sizeof(double)) == 0;
  };
  DirichletPosterior post({0.5, 3.0, 1.0, 7.0});
  for (std::size_t chunks : {1, 2, 7, 16}) {
    McConfig cfg{13, 30001, chunks};
    o.require(same(estimate_moment(post, 2.5, cfg), estimate_moment(post, 2.5, cfg)),
              "moment not bit-identical at chunks = " + std::to_string(chunks));
    o.require(same(estimate_entropy_posterior(post, RenyiOrder::min_entropy(), cfg),
                   estimate_entropy_posterior(post, RenyiOrder::min_entropy(), cfg)),
              "entropy posterior not bit-identical at chunks = " + std::to_string(chunks));
  }
  if (o.pass) o.detail = std::to_string(suite.size()) + " CLI reports byte-identical";
  return o;
}

Outcome robustness() {
  Outcome o;
  const std::size_t s = std::size_t{1} << 16;
  std::vector<std::uint64_t> counts(s, 1'000'000'000);
  counts[0] = 3'000'000'000;
  counts[1] = 1;
  Histogram h(counts);
  auto prior = DirichletPrior::add_one(s);
  auto post = posterior(prior, h);
  const double m = moment(post, 2.0).value;
  o.require(std::isfinite(m) && m > 0.0 && m <= 1.0, "moment out of (0,1]: " + fmt(m));
  o.require(m >= 1.0 / static_cast<double>(s) * 0.999, "moment below 1/s");
  const double logs = std::log2(static_cast<double>(s));
  for (double g : {0.5, 2.0, 3.0, 20.0}) {
    const double v = renyi_bayes(prior, h, g).value_bits;
    o.require(std::isfinite(v) && v >= 0.0 && v <= logs + 1e-9,
              "renyi_bayes out of range at gamma " + fmt(g) + ": " + fmt(v));
  }
  const double sh = shannon_bayes(prior, h).value_bits;
  o.require(std::isfinite(sh) && sh >= 0.0 && sh <= logs + 1e-9, "shannon_bayes " + fmt(sh));
  if (o.pass) o.detail = "E[sum p^2] = " + fmt(m) + ", H2 = " + fmt(-std::log2(m)) + " bits";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> check;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "closed-form and Monte Carlo moment fixtures", 5, moment_agreement},
      {2, "Renyi Bayes tends to Shannon Bayes at order 1", 5, shannon_limit},
      {3, "digamma Shannon form vs Monte Carlo", 30, shannon_vs_mc},
      {4, "inequality chain and order monotonicity", 5, inequality_chain},
      {5, "collision and conditional definitions", 1, definition_consistency},
      {6, "estimator consistency at n = 1e5", 10, consistency_at_scale},
      {7, "source-model fixtures", 10, source_fixtures},
      {8, "reproducibility", 60, reproducibility},
      {9, "numerical robustness at s = 2^16, n_i = 1e9", 5, robustness},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) {
      o.require(false, "runtime " + fmt(secs) + " s over budget " + fmt(c.budget_seconds) + " s");
    }
    std::printf("%s criterion %d: %s (%.2f s) %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs,
                o.detail.c_str());
    if (!o.pass) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
