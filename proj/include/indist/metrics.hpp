#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "indist/data.hpp"

namespace indist {

enum class ScoreClass { Positive, Negative };

/// Strict-inequality rates at a threshold, plus their half-tie variants.
struct Rates {
  double v = 0.0;      // |{p > r}| / P
  double u = 0.0;      // |{n > r}| / N
  double v_tie = 0.0;  // (|{p > r}| + |{p = r}| / 2) / P
  double u_tie = 0.0;  // (|{n > r}| + |{n = r}| / 2) / N
};

struct AucEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t n_pairs = 0;
};

/// Count of sorted values strictly greater than r.
std::size_t count_above(std::span<const double> sorted, double r) noexcept;
/// Count of sorted values equal to r.
std::size_t count_equal(std::span<const double> sorted, double r) noexcept;

/// F(r) = |{s < r}| / size for the chosen class.
double empirical_cdf(const ScoredDataset& ds, ScoreClass cls, double r);

Rates rates_at(const ScoredDataset& ds, double r);

/// Mann-Whitney form of P(S_P > S_N) with ties counted 1/2; O((P+N) log(P+N))
/// through a merge of the two sorted score lists.
AucEstimate auc_rank(const ScoredDataset& ds);

/// Mean of n_samples uniform positive/negative pair comparisons.
AucEstimate auc_pairwise_mc(const ScoredDataset& ds, std::uint64_t n_samples, std::uint64_t seed);

/// Threshold grid shared by every curve and by the balance solver: a sentinel
/// below the minimum score, the midpoints between consecutive distinct
/// scores, and a sentinel above the maximum. Strictly increasing.
std::vector<double> threshold_grid(const ScoredDataset& ds);

struct CurvePoint {
  double r;
  double u;
  double v;
  double precision;  // NaN when nothing scores above r
  double f1;         // NaN when undefined
};

enum class CurveKind { Roc, PrecisionRecall };

struct Curve {
  CurveKind kind = CurveKind::Roc;
  std::vector<CurvePoint> points;  // increasing r
};

/// Every grid threshold, so the curve runs from (u, v) = (1, 1) to (0, 0).
Curve roc_curve(const ScoredDataset& ds);
/// Grid thresholds with a non-empty labelled-positive set.
Curve pr_curve(const ScoredDataset& ds);

/// Trapezoid area over (u, v). Equals auc_rank exactly with the midpoint grid.
AucEstimate auc_trapezoid(const Curve& curve);

/// Area under the PR curve: trapezoids in recall between achieved points,
/// with the stretch from recall 0 held at the first achieved precision.
double auprc(const Curve& curve);

/// C(r) = P v / (P v + N u). Throws EmptyLabelSet when no score exceeds r.
double precision_at(const ScoredDataset& ds, double r);

/// F1 = 2 C v / (C + v). Throws UndefinedValue when C + v = 0.
double f1_at(const ScoredDataset& ds, double r);

/// CSV with header "r,u,v,precision,f1".
std::string format_curve_csv(const Curve& curve);

}  // namespace indist
