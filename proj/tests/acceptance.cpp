// Acceptance gate. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. Tolerances are fixed below.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "indist/balance.hpp"
#include "indist/error.hpp"
#include "indist/metrics.hpp"
#include "indist/pipeline.hpp"
#include "indist/rng.hpp"
#include "oracles.hpp"

using namespace indist;

namespace {

constexpr std::uint64_t kFirstSeed = 1;
constexpr std::uint64_t kSeedCount = 10;
constexpr double kIdentityTol = 1e-12;
constexpr double kInvarianceTol = 1e-12;
constexpr double kGradientTol = 1e-8;
constexpr std::uint64_t kMcSamples = 100000;
constexpr int kMcTrials = 100;
constexpr int kMcRequired = 99;
constexpr double kMcSigmas = 4.0;
constexpr double kSpreadTol = 0.05;

struct Band {
  double centre;
  double half_width;
  bool contains(double x) const { return std::fabs(x - centre) <= half_width; }
};

std::vector<double> to_vec(std::span<const double> s) { return {s.begin(), s.end()}; }

ScoredDataset transform(const ScoredDataset& ds, const std::function<double(double)>& f) {
  std::vector<double> p = to_vec(ds.positives()), n = to_vec(ds.negatives());
  for (auto& x : p) x = f(x);
  for (auto& x : n) x = f(x);
  return ScoredDataset(std::move(p), std::move(n));
}

// Grid replication over kSeedCount master seeds, shared by criteria 1-3.
struct GridRuns {
  std::vector<ReplicationTable> tables;
  double mean(char d, const std::function<std::optional<double>(const IndistReport&)>& get,
              std::size_t* missing = nullptr) const {
    double sum = 0;
    std::size_t count = 0;
    for (const auto& t : tables) {
      const auto v = get(t.rows[grid_index(d)].report);
      if (v) {
        sum += *v;
        ++count;
      } else if (missing != nullptr) {
        ++*missing;
      }
    }
    return count == 0 ? std::nan("") : sum / static_cast<double>(count);
  }
};

std::optional<double> c_rb(const IndistReport& r) { return r.rb.precision.value; }
std::optional<double> c_r60(const IndistReport& r) { return r.r60.precision.value; }
std::optional<double> auc_of(const IndistReport& r) { return r.A; }

// Scored versions of the nine grid datasets for one master seed.
std::vector<std::pair<char, DatasetRun>> scored_grid(std::uint64_t seed) {
  std::vector<std::pair<char, DatasetRun>> out;
  for (const auto& named : benchmark_grid(seed)) out.emplace_back(named.name, run_dataset(named));
  return out;
}

bool criterion1(const GridRuns& g) {
  const std::map<char, Band> bands{{'a', {0.85, 0.03}}, {'d', {0.85, 0.03}}, {'g', {0.85, 0.03}},
                                   {'b', {0.69, 0.04}}, {'e', {0.69, 0.04}}, {'h', {0.69, 0.04}},
                                   {'c', {0.50, 0.03}}, {'f', {0.50, 0.03}}, {'i', {0.50, 0.03}}};
  bool ok = true;
  for (const auto& [d, band] : bands) {
    std::size_t missing = 0;
    const double m = g.mean(d, c_rb, &missing);
    const bool in = missing == 0 && band.contains(m);
    ok = ok && in;
    std::printf("    %c  mean C(r_b) = %.4f  band %.2f +/- %.2f  %s\n", d, m, band.centre, band.half_width,
                in ? "in" : "OUT");
  }
  return ok;
}

bool criterion2(const GridRuns& g) {
  std::size_t missing = 0;
  const double c60 = g.mean('e', c_r60, &missing);
  const double cb = g.mean('e', c_rb, &missing);
  std::printf("    e  mean C(r_60) = %.4f (0.59 +/- 0.04)  mean C(r_b) = %.4f (0.72 +/- 0.04)\n", c60, cb);
  return missing == 0 && Band{0.59, 0.04}.contains(c60) && Band{0.72, 0.04}.contains(cb);
}

bool criterion3(const GridRuns& g) {
  // Columns share the difficult-negative mean; rows run 10000, 1000, 100 easy negatives.
  const std::array<std::array<char, 3>, 3> columns{{{'a', 'd', 'g'}, {'b', 'e', 'h'}, {'c', 'f', 'i'}}};
  bool ok = true;
  for (const auto& col : columns) {
    bool ordered = true;
    for (const auto& t : g.tables) {
      const double a0 = t.rows[grid_index(col[0])].report.A;
      const double a1 = t.rows[grid_index(col[1])].report.A;
      const double a2 = t.rows[grid_index(col[2])].report.A;
      ordered = ordered && a0 > a1 && a1 > a2;
    }
    double lo = 1, hi = 0;
    for (char d : col) {
      const double c = g.mean(d, c_rb);
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    const bool flat = hi - lo <= kSpreadTol;
    std::printf("    %c%c%c  mean A = %.4f > %.4f > %.4f (every seed: %s)  C(r_b) spread = %.4f\n", col[0], col[1],
                col[2], g.mean(col[0], auc_of), g.mean(col[1], auc_of), g.mean(col[2], auc_of),
                ordered ? "yes" : "no", hi - lo);
    ok = ok && ordered && flat;
  }
  return ok;
}

bool criterion4() {
  std::mt19937_64 gen(4004);
  std::size_t mismatches = 0, points = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const auto rs = oracle::random_scores(gen, 20, (trial % 5 - 1) * 0.5);
    const ScoredDataset ds(rs.pos, rs.neg);
    mismatches += auc_rank(ds).value != oracle::auc(rs.pos, rs.neg);
    for (double r : threshold_grid(ds)) {
      if (r > ds.max_score()) continue;
      ++points;
      mismatches += b_exact(ds, r).B != oracle::balance(rs.pos, rs.neg, r);
    }
  }
  const ScoredDataset t1({2, 4}, {1, 3});
  const bool worked = b_exact(t1, 0.5).B == 0.625 && b_exact(t1, 1.5).B == 0.5 && b_exact(t1, 2.5).B == 0.375;
  std::printf("    500 datasets, %zu grid thresholds, %zu mismatches; T1 0.625/0.5/0.375: %s\n", points, mismatches,
              worked ? "yes" : "no");
  return mismatches == 0 && worked;
}

bool criterion5(const std::vector<std::pair<char, DatasetRun>>& grid) {
  double worst_sum = 0, worst_plus = 0, worst_limit = 0, worst_trap = 0;
  for (const auto& [d, run] : grid) {
    const auto& ds = run.scored;
    const double A = auc_rank(ds).value;
    for (const auto& b : balance_curve(ds)) {
      if (b.r > ds.max_score()) continue;
      worst_sum = std::max(worst_sum, std::fabs(b.B - (b.B_plus + b.B_minus)));
      worst_plus = std::max(worst_plus, std::fabs(b.B_plus - 0.5 * rates_at(ds, b.r).v * precision_at(ds, b.r)));
    }
    const double P = static_cast<double>(ds.P()), N = static_cast<double>(ds.N());
    const double below = b_exact(ds, ds.min_score() - 1.0).B;
    worst_limit = std::max(worst_limit, std::fabs(below - (P / 2 + N * A) / (N + P)));
    worst_trap = std::max(worst_trap, std::fabs(auc_trapezoid(roc_curve(ds)).value - A));
  }
  std::printf("    max |B - B+ - B-| = %.3g  max |B+ - vC/2| = %.3g  max |B(-inf) - limit| = %.3g  "
              "max |trapezoid - A| = %.3g\n",
              worst_sum, worst_plus, worst_limit, worst_trap);
  return worst_sum < kIdentityTol && worst_plus < kIdentityTol && worst_limit < kIdentityTol &&
         worst_trap < kIdentityTol;
}

bool criterion6() {
  std::mt19937_64 gen(6006);
  std::size_t wrong = 0, ordered = 0, disordered = 0, solved = 0;
  auto attempt = [](const ScoredDataset& ds, double t) -> std::optional<double> {
    try {
      return solve_balance_threshold(ds, BalanceTarget(t)).r;
    } catch (const NoBalancedThresholdError&) {
      return std::nullopt;
    }
  };
  for (int trial = 0; trial < 200; ++trial) {
    const auto rs = oracle::random_scores(gen, 20, (trial % 5 - 2) * 0.5);
    const ScoredDataset ds(rs.pos, rs.neg);
    const auto r40 = attempt(ds, 0.4), rb = attempt(ds, 0.5), r60 = attempt(ds, 0.6);
    wrong += rb.has_value() != (auc_rank(ds).value > 0.5);
    solved += rb.has_value();
    if (r40 && rb && r60) {
      (*r60 < *rb && *rb < *r40 ? ordered : disordered) += 1;
    }
  }
  std::printf("    200 datasets: %zu solved, %zu existence mismatches; ordering held %zu/%zu\n", solved, wrong,
              ordered, ordered + disordered);
  return wrong == 0 && disordered == 0;
}

struct RankMetrics {
  double A, C, F1, auprc;
};

RankMetrics rank_metrics(const ScoredDataset& ds) {
  const auto s = solve_balance_threshold(ds);
  return {auc_rank(ds).value, precision_at(ds, s.operating_r), f1_at(ds, s.operating_r), auprc(pr_curve(ds))};
}

bool criterion7(const std::vector<std::pair<char, DatasetRun>>& grid) {
  double worst = 0;
  for (const auto& [d, run] : grid) {
    const auto base = rank_metrics(run.scored);
    for (const auto& f : {std::function<double(double)>([](double x) { return std::exp(x); }),
                          std::function<double(double)>([](double x) { return 3.0 * x + 7.0; })}) {
      const auto m = rank_metrics(transform(run.scored, f));
      worst = std::max({worst, std::fabs(m.A - base.A), std::fabs(m.C - base.C), std::fabs(m.F1 - base.F1),
                        std::fabs(m.auprc - base.auprc)});
    }
  }
  std::printf("    max change in A, C(r_b), F1(r_b), AUPRC under exp and 3x+7: %.3g\n", worst);
  return worst < kInvarianceTol;
}

bool criterion8(const std::vector<std::pair<char, DatasetRun>>& grid) {
  bool ok = true;
  for (const auto& [d, run] : grid) {
    const auto& ds = run.scored;
    const double A = auc_rank(ds).value;
    const double r = solve_balance_threshold(ds).operating_r;
    // b_mc's estimand excludes drawing the same item twice.
    const double b_true = oracle::balance_excluding_self(to_vec(ds.positives()), to_vec(ds.negatives()), r);
    int auc_in = 0, b_in = 0;
    for (int t = 0; t < kMcTrials; ++t) {
      const auto a = auc_pairwise_mc(ds, kMcSamples, derive_seed(8008, 2 * t));
      const auto b = b_mc(ds, r, kMcSamples, derive_seed(8008, 2 * t + 1));
      auc_in += std::fabs(a.value - A) <= kMcSigmas * a.std_error;
      b_in += std::fabs(b.value - b_true) <= kMcSigmas * b.std_error;
    }
    const bool pass = auc_in >= kMcRequired && b_in >= kMcRequired;
    ok = ok && pass;
    std::printf("    %c  auc_mc within 4 SE %d/%d  b_mc within 4 SE %d/%d  (labelled at r_b: %zu)\n", d, auc_in,
                kMcTrials, b_in, kMcTrials, count_above(ds.positives(), r) + count_above(ds.negatives(), r));
  }
  return ok;
}

bool criterion9(const std::vector<std::pair<char, DatasetRun>>& grid) {
  double worst = 0;
  for (const auto& [d, run] : grid) {
    const auto g = oracle::fd_gradient(run.raw, run.model.beta0, run.model.beta1);
    worst = std::max({worst, std::fabs(g[0]), std::fabs(g[1])});
  }
  const RawDataset sym(std::vector<Record>{{0, Label::Negative}, {0, Label::Positive}, {1, Label::Negative}, {1, Label::Positive}});
  const auto m = fit_logistic_1d(sym);
  const bool zero = std::fabs(m.beta0) < 1e-10 && std::fabs(m.beta1) < 1e-10;
  bool separation = false;
  try {
    fit_logistic_1d(RawDataset(std::vector<Record>{{-1, Label::Negative}, {1, Label::Positive}}));
  } catch (const Error& e) {
    separation = e.code() == ErrorCode::SeparationDetected;
  }
  std::printf("    max |finite-difference gradient| = %.3g  symmetric -> (%.3g, %.3g)  separable raises: %s\n", worst,
              m.beta0, m.beta1, separation ? "yes" : "no");
  return worst < kGradientTol && zero && separation;
}

}  // namespace

int main() {
  GridRuns runs;
  for (std::uint64_t s = kFirstSeed; s < kFirstSeed + kSeedCount; ++s) runs.tables.push_back(replicate(s));
  const auto grid = scored_grid(kFirstSeed);

  struct Criterion {
    const char* name;
    std::function<bool()> check;
  };
  const std::vector<Criterion> criteria{
      {"grid replication: mean C(r_b) over 10 master seeds", [&] { return criterion1(runs); }},
      {"dataset e: C(r_60) and C(r_b)", [&] { return criterion2(runs); }},
      {"A rises with easy negatives while C(r_b) stays flat", [&] { return criterion3(runs); }},
      {"oracle equivalence of auc_rank and b_exact", criterion4},
      {"identities at 1e-12 on the nine datasets", [&] { return criterion5(grid); }},
      {"existence iff A > 1/2, and r_60 < r_b < r_40", criterion6},
      {"rank invariance under exp and 3x+7", [&] { return criterion7(grid); }},
      {"Monte Carlo within 4 SE in >= 99/100 trials", [&] { return criterion8(grid); }},
      {"logistic fit optimality and fixtures", [&] { return criterion9(grid); }},
  };

  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    std::printf("criterion %zu: %s\n", k + 1, criteria[k].name);
    std::fflush(stdout);
    bool pass = false;
    try {
      pass = criteria[k].check();
    } catch (const std::exception& e) {
      std::printf("    error: %s\n", e.what());
    }
    std::printf("%s %zu %s\n", pass ? "PASS" : "FAIL", k + 1, criteria[k].name);
    failed += !pass;
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
