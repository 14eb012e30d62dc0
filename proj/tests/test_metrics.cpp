#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "indist/error.hpp"
#include "indist/metrics.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace indist;
using testutil::code_of;
using testutil::scored;

TEST_CASE("empirical CDF uses strict inequality") {
  const auto ds = testutil::t1();
  CHECK(empirical_cdf(ds, ScoreClass::Positive, 3.0) == 0.5);
  CHECK(empirical_cdf(ds, ScoreClass::Positive, 2.0) == 0.0);
  CHECK(empirical_cdf(ds, ScoreClass::Negative, 3.0) == 0.5);
  CHECK(empirical_cdf(ds, ScoreClass::Negative, 3.5) == 1.0);
}

TEST_CASE("rates at a threshold, with and without half ties") {
  const auto r = rates_at(testutil::t1(), 2.0);
  CHECK(r.v == 0.5);
  CHECK(r.v_tie == 0.75);
  CHECK(r.u == 0.5);
  CHECK(r.u_tie == 0.5);
  const auto top = rates_at(testutil::t1(), 4.0);
  CHECK(top.v == 0.0);
  CHECK(top.v_tie == 0.25);
}

TEST_CASE("rank AUC on the worked examples") {
  CHECK(auc_rank(testutil::t1()).value == 0.75);
  CHECK(auc_rank(testutil::t2()).value == 1.0);
  CHECK(auc_rank(testutil::anti()).value == 0.0);
  CHECK(auc_rank(scored({1}, {1})).value == 0.5);
  CHECK(auc_rank(scored({1, 1, 2}, {1, 0})).value == doctest::Approx(5.0 / 6.0));
}

TEST_CASE("rank AUC equals brute-force pair enumeration") {
  std::mt19937_64 gen(1);
  for (int trial = 0; trial < 300; ++trial) {
    const auto rs = oracle::random_scores(gen, 25, trial % 3 * 0.5);
    CHECK(auc_rank(scored(rs.pos, rs.neg)).value == oracle::auc(rs.pos, rs.neg));
  }
}

TEST_CASE("pairwise Monte Carlo AUC") {
  const auto perfect = auc_pairwise_mc(testutil::t2(), 1000, 5);
  CHECK(perfect.value == 1.0);
  CHECK(perfect.std_error == 0.0);
  CHECK(perfect.n_pairs == 1000);

  const auto est = auc_pairwise_mc(testutil::t1(), 100000, 17);
  CHECK(std::fabs(est.value - 0.75) < 3.0 * est.std_error);

  const auto again = auc_pairwise_mc(testutil::t1(), 100000, 17);
  CHECK(again.value == est.value);
  CHECK(code_of([] { auc_pairwise_mc(testutil::t1(), 0, 1); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("Monte Carlo AUC is unbiased within four standard errors across seeds") {
  std::mt19937_64 gen(3);
  const auto rs = oracle::random_scores(gen, 30, 1.0);
  const auto ds = scored(rs.pos, rs.neg);
  const double truth = oracle::auc(rs.pos, rs.neg);
  int inside = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto est = auc_pairwise_mc(ds, 20000, seed);
    inside += std::fabs(est.value - truth) <= 4.0 * est.std_error;
  }
  CHECK(inside >= 99);
}

TEST_CASE("threshold grid brackets every score") {
  const auto grid = threshold_grid(testutil::t1());
  CHECK(grid == std::vector<double>{-2.0, 1.5, 2.5, 3.5, 7.0});

  const auto single = threshold_grid(scored({5}, {5}));
  CHECK(single == std::vector<double>{4.0, 6.0});

  // Adjacent doubles have no midpoint between them.
  const double a = 1.0, b = std::nextafter(1.0, 2.0);
  const auto tight = threshold_grid(scored({b}, {a}));
  REQUIRE(tight.size() == 3);
  CHECK(tight[1] == a);
  CHECK(count_above(std::vector<double>{a, b}, tight[1]) == 1);
}

TEST_CASE("ROC curve on T1") {
  const auto roc = roc_curve(testutil::t1());
  REQUIRE(roc.points.size() == 5);
  const double u[] = {1, 0.5, 0.5, 0, 0};
  const double v[] = {1, 1, 0.5, 0.5, 0};
  for (int k = 0; k < 5; ++k) {
    CHECK(roc.points[k].u == u[k]);
    CHECK(roc.points[k].v == v[k]);
  }
  CHECK(std::isnan(roc.points.back().precision));
  CHECK(auc_trapezoid(roc).value == 0.75);

  const auto csv = format_curve_csv(roc);
  CHECK(csv.rfind("r,u,v,precision,f1\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
}

TEST_CASE("trapezoid area under ROC equals rank AUC") {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto rs = oracle::random_scores(gen, 40, trial % 4 * 0.5);
    const auto ds = scored(rs.pos, rs.neg);
    CHECK(std::fabs(auc_trapezoid(roc_curve(ds)).value - auc_rank(ds).value) < 1e-12);
  }
}

TEST_CASE("precision and F1 on the worked examples") {
  const auto ds = testutil::t1();
  CHECK(precision_at(ds, 1.5) == doctest::Approx(2.0 / 3.0));
  CHECK(precision_at(ds, 3.5) == 1.0);
  CHECK(f1_at(ds, 1.5) == doctest::Approx(0.8));
  CHECK(f1_at(ds, 3.5) == doctest::Approx(2.0 / 3.0));
  CHECK(code_of([&] { precision_at(ds, 4.0); }) == ErrorCode::EmptyLabelSet);
  CHECK(code_of([&] { f1_at(ds, 4.0); }) == ErrorCode::EmptyLabelSet);
  CHECK(code_of([] { f1_at(scored({1}, {2}), 1.5); }) == ErrorCode::UndefinedValue);

  for (double r : {0.0, 1.5, 2.5, 3.5}) CHECK(precision_at(ds, r) == oracle::precision({2, 4}, {1, 3}, r));
}

TEST_CASE("PR curve keeps thresholds with a non-empty labelled set") {
  const auto pr = pr_curve(testutil::t1());
  REQUIRE(pr.points.size() == 4);
  bool found = false;
  for (const auto& p : pr.points) {
    CHECK_FALSE(std::isnan(p.precision));
    if (p.r > 1.0 && p.r < 2.0) {
      found = true;
      CHECK(p.v == 1.0);
      CHECK(p.precision == doctest::Approx(2.0 / 3.0));
    }
  }
  CHECK(found);
  CHECK(auprc(pr_curve(testutil::t2())) == 1.0);
  CHECK(auprc(pr) == doctest::Approx(0.5 + 0.25 * (0.5 + 2.0 / 3.0)));
}

TEST_CASE("rates are monotone non-increasing in r") {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto rs = oracle::random_scores(gen, 30);
    const auto ds = scored(rs.pos, rs.neg);
    Rates prev{2, 2, 2, 2};
    for (double r : oracle::probe_points(rs.pos, rs.neg)) {
      const auto cur = rates_at(ds, r);
      CHECK(cur.v <= prev.v);
      CHECK(cur.u <= prev.u);
      CHECK(cur.v_tie <= prev.v_tie);
      CHECK(cur.u_tie <= prev.u_tie);
      prev = cur;
    }
  }
}

TEST_CASE("rank metrics are invariant under strictly increasing transforms") {
  std::mt19937_64 gen(8);
  for (int trial = 0; trial < 100; ++trial) {
    auto rs = oracle::random_scores(gen, 30, 0.5);
    const auto ds = scored(rs.pos, rs.neg);
    auto map = [](std::vector<double> xs) {
      for (auto& x : xs) x = 3.0 * x + 7.0;
      return xs;
    };
    const auto mapped = scored(map(rs.pos), map(rs.neg));
    CHECK(auc_rank(ds).value == auc_rank(mapped).value);
    CHECK(std::fabs(auprc(pr_curve(ds)) - auprc(pr_curve(mapped))) < 1e-12);
  }
}
