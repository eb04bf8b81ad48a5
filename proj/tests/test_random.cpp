#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "renyi/error.hpp"
#include "renyi/random.hpp"

using namespace renyi::random;

TEST_SUITE("random") {
  TEST_CASE("splitmix64 published reference output") {
    SplitMix64 sm(1234567);
    const std::uint64_t expected[] = {6457827717110365317ULL, 3203168211198807973ULL,
                                      9817491932198370423ULL, 4593380528125082431ULL,
                                      16408922859458223821ULL};
    for (auto e : expected) CHECK(sm.next() == e);
  }

  TEST_CASE("xoshiro256** reference output from state {1, 2, 3, 4}") {
    Xoshiro256StarStar gen(std::array<std::uint64_t, 4>{1, 2, 3, 4});
    const std::uint64_t expected[] = {11520ULL, 0ULL, 1509978240ULL, 1215971899390074240ULL};
    for (auto e : expected) CHECK(gen() == e);
  }

  TEST_CASE("seeding expands through splitmix64") {
    Xoshiro256StarStar gen(1234567);
    CHECK(gen.state()[0] == 6457827717110365317ULL);
    CHECK(gen.state()[3] == 4593380528125082431ULL);
  }

  TEST_CASE("uniform_open stays strictly inside (0, 1)") {
    Generator gen(1);
    double lo = 1.0;
    double hi = 0.0;
    auto stats = oracle::mean_and_se(200000, [&] {
      double u = uniform_open(gen);
      lo = std::min(lo, u);
      hi = std::max(hi, u);
      return u;
    });
    CHECK(lo > 0.0);
    CHECK(hi < 1.0);
    CHECK(std::fabs(stats.mean - 0.5) <= 4.0 * stats.se);
    CHECK(uniform_open(gen) != 0.0);
  }

  TEST_CASE("uniform_index is unbiased") {
    Generator gen(2);
    const std::uint64_t n = 7;
    std::vector<double> counts(n, 0.0);
    const int draws = 700000;
    for (int i = 0; i < draws; ++i) ++counts[uniform_index(gen, n)];
    double chi2 = 0.0;
    for (double c : counts) chi2 += (c - draws / 7.0) * (c - draws / 7.0) / (draws / 7.0);
    // 6 degrees of freedom; 99.99th percentile is about 27.9.
    CHECK(chi2 < 27.9);
  }

  TEST_CASE("standard normal moments") {
    Generator gen(3);
    std::vector<double> xs(200000);
    for (auto& x : xs) x = standard_normal(gen);
    double m = 0.0;
    for (double x : xs) m += x;
    m /= xs.size();
    double v = 0.0;
    for (double x : xs) v += (x - m) * (x - m);
    v /= xs.size() - 1;
    CHECK(std::fabs(m) <= 4.0 / std::sqrt(200000.0));
    // Var of the sample variance is 2/n for a normal.
    CHECK(std::fabs(v - 1.0) <= 4.0 * std::sqrt(2.0 / 200000.0));
  }

  TEST_CASE("gamma variates have mean and variance equal to the shape") {
    for (double shape : {0.05, 0.3, 0.999, 1.0, 2.5, 40.0, 1e6}) {
      CAPTURE(shape);
      Generator gen(static_cast<std::uint64_t>(shape * 1000) + 17);
      const std::size_t m = 200000;
      std::vector<double> xs(m);
      for (auto& x : xs) x = std::exp(log_gamma_variate(gen, shape));
      auto stats = oracle::mean_and_se(m, [&, i = std::size_t{0}]() mutable { return xs[i++]; });
      CHECK(std::fabs(stats.mean - shape) <= 4.0 * std::sqrt(shape / m));
      double v = 0.0;
      for (double x : xs) v += (x - stats.mean) * (x - stats.mean);
      v /= m - 1;
      // Generous band: sample variance of a gamma has relative sd sqrt((2 + 6/shape)/m).
      CHECK(std::fabs(v / shape - 1.0) <= 5.0 * std::sqrt((2.0 + 6.0 / shape) / m));
    }
  }

  TEST_CASE("tiny shapes stay finite in log space") {
    Generator gen(4);
    for (int i = 0; i < 10000; ++i) {
      double l = log_gamma_variate(gen, 1e-3);
      CHECK(std::isfinite(l));
    }
    CHECK_THROWS_AS(log_gamma_variate(gen, 0.0), renyi::DomainError);
  }
}
