#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "centrality/ranks.hpp"
#include "centrality/rng.hpp"
#include "oracles.hpp"

using namespace centrality;

TEST_CASE("rank transform") {
  SUBCASE("tie averaging") {
    CHECK(rank_transform(std::vector<double>{5, 3, 3, 1}) ==
          std::vector<double>{1, 2.5, 2.5, 4});
    CHECK(rank_transform(std::vector<double>{7, 7, 7}) ==
          std::vector<double>{2, 2, 2});
  }
  SUBCASE("strictly decreasing input is the identity ranking") {
    std::vector<double> v{9, 7, 5, 3, 1};
    CHECK(rank_transform(v) == std::vector<double>{1, 2, 3, 4, 5});
  }
  SUBCASE("rank sum is n(n+1)/2 and NaN is rejected") {
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<double> v(50);
      for (double& x : v) x = std::floor(rng.uniform(0, 10));
      const auto r = rank_transform(v);
      const double sum = std::accumulate(r.begin(), r.end(), 0.0);
      CHECK(sum == doctest::Approx(50.0 * 51.0 / 2.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS(
        rank_transform(std::vector<double>{1.0, std::numeric_limits<double>::quiet_NaN()}),
        std::invalid_argument);
  }
  SUBCASE("invariant under strictly decreasing transforms") {
    Rng rng(4);
    std::vector<double> v(80);
    for (double& x : v) x = rng.uniform(-5, 5);
    std::vector<double> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = -std::exp(-v[i]);
    // x -> -exp(-x) is strictly increasing, so the order is unchanged
    CHECK(rank_transform(v) == rank_transform(w));
  }
}

TEST_CASE("normalization chain") {
  SUBCASE("steps 1-2 endpoints") {
    CHECK(rank_scale(1.0, 100) == doctest::Approx(-0.98).epsilon(1e-12));
    CHECK(rank_scale(100.0, 100) == 1.0);
    CHECK(rank_scale(7.0, 7) == 1.0);
  }
  SUBCASE("round trip") {
    for (std::size_t n : {3u, 10u, 997u}) {
      for (double r = 1; r <= static_cast<double>(n); r += 1) {
        CHECK(rank_unscale(rank_scale(r, n), n) == doctest::Approx(r).epsilon(1e-9));
      }
    }
  }
  SUBCASE("z-score stats and inverse") {
    const std::vector<double> v{1, 2, 3, 4, 5};
    const auto s = compute_stats(v);
    CHECK(s.mean == 3.0);
    CHECK(s.stddev == doctest::Approx(std::sqrt(2.5)).epsilon(1e-12));
    CHECK(apply_stats(3.0, s) == 0.0);
    CHECK(invert_stats(apply_stats(1.7, s), s) == doctest::Approx(1.7).epsilon(1e-12));
  }
  SUBCASE("degenerate feature") {
    CHECK_THROWS_WITH_AS(compute_stats(std::vector<double>{2, 2, 2}),
                         "degenerate feature", std::invalid_argument);
    CHECK_THROWS_AS(compute_stats(std::vector<double>{1}), std::invalid_argument);
  }
}

TEST_CASE("kendall tau-b") {
  SUBCASE("perfect agreement and reversal") {
    const std::vector<double> x{1, 2, 3, 4, 5};
    std::vector<double> rev(x.rbegin(), x.rend());
    CHECK(kendall_tau_b(x, x) == 1.0);
    CHECK(kendall_tau_b(x, rev) == -1.0);
  }
  SUBCASE("worked example C=5 D=1") {
    const std::vector<double> x{1, 2, 3, 4}, y{1, 3, 2, 4};
    CHECK(kendall_tau_b(x, y) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  }
  SUBCASE("symmetry") {
    Rng rng(9);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<double> x(30), y(30);
      for (double& v : x) v = std::floor(rng.uniform(0, 8));
      for (double& v : y) v = std::floor(rng.uniform(0, 8));
      if (std::equal(x.begin() + 1, x.end(), x.begin())) continue;
      if (std::equal(y.begin() + 1, y.end(), y.begin())) continue;
      CHECK(kendall_tau_b(x, y) == kendall_tau_b(y, x));
    }
  }
  SUBCASE("invariant under strictly increasing transforms") {
    Rng rng(10);
    std::vector<double> x(60), y(60);
    for (double& v : x) v = std::floor(rng.uniform(0, 10));
    for (double& v : y) v = rng.uniform(-1, 1);
    std::vector<double> x2(60);
    for (std::size_t i = 0; i < x.size(); ++i) x2[i] = std::exp(x[i] * 0.1);
    CHECK(kendall_tau_b(x, y) == kendall_tau_b(x2, y));
  }
  SUBCASE("merge count equals brute force exactly on 1000 tied vectors") {
    Rng rng(11);
    for (int trial = 0; trial < 1000; ++trial) {
      const std::size_t n = 2 + static_cast<std::size_t>(rng.below(60));
      std::vector<double> x(n), y(n);
      for (double& v : x) v = std::floor(rng.uniform(0, 6));
      for (double& v : y) v = std::floor(rng.uniform(0, 6));
      const bool xconst = std::equal(x.begin() + 1, x.end(), x.begin());
      const bool yconst = std::equal(y.begin() + 1, y.end(), y.begin());
      if (xconst || yconst) {
        CHECK_THROWS_WITH_AS(kendall_tau_b(x, y), "tau undefined", std::invalid_argument);
        continue;
      }
      // same float, not approximately equal
      CHECK(kendall_tau_b(x, y) == oracle::tau_b_brute(x, y));
    }
  }
  SUBCASE("all-tied input is an error") {
    CHECK_THROWS_WITH_AS(kendall_tau_b(std::vector<double>{1, 1, 1},
                                       std::vector<double>{1, 2, 3}),
                         "tau undefined", std::invalid_argument);
  }
}

TEST_CASE("r squared and mse") {
  const std::vector<double> target{0, 1, 2};
  SUBCASE("exact fit") { CHECK(r_squared(target, target) == 1.0); }
  SUBCASE("mean predictor") {
    const std::vector<double> mean_pred{1, 1, 1};
    CHECK(r_squared(mean_pred, target) == 0.0);
  }
  SUBCASE("constant offset of 1 gives -0.5") {
    const std::vector<double> off{1, 2, 3};
    CHECK(r_squared(off, target) == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(mean_squared_error(off, target) == 1.0);
  }
  SUBCASE("constant target is an error") {
    CHECK_THROWS_AS(r_squared(target, std::vector<double>{2, 2, 2}),
                    std::invalid_argument);
  }
}

TEST_CASE("confidence interval helper") {
  const std::vector<double> v{1, 2, 3, 4, 5};
  const MeanCi ci = mean_ci99(v);
  CHECK(ci.mean == 3.0);
  CHECK(ci.count == 5);
  const double sd = std::sqrt(2.5);
  CHECK(ci.half_width == doctest::Approx(2.576 * sd / std::sqrt(5.0)).epsilon(1e-12));
}

TEST_CASE("eval report CSV round trip") {
  std::vector<EvalReport> rows;
  rows.push_back({"net0", "exact", "betweenness", 1.0, 1.0, 0.0, 0.125});
  rows.push_back({"net0", "sample(0.05)", "closeness", 0.875, 0.75, 0.01, 2.5});
  const std::string csv = eval_reports_to_csv(rows);
  CHECK(csv.substr(0, csv.find('\n')) == "network,method,metric,tau_b,r2,mse,seconds");
  const auto parsed = eval_reports_from_csv(csv);
  REQUIRE(parsed.size() == 2);
  CHECK(parsed[1].method == "sample(0.05)");
  CHECK(parsed[1].tau_b == 0.875);
  CHECK(parsed[0].seconds == 0.125);
  // a second serialization is byte-identical
  CHECK(eval_reports_to_csv(parsed) == csv);
}
