#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "indist/data.hpp"
#include "indist/metrics.hpp"

namespace indist {

/// B(r) = P(S_P > S_R | S_R > r) split by the true class of the labelled item:
/// B = B_plus + B_minus, with B_plus = v C / 2.
struct BalanceValue {
  double r = 0.0;
  double B = 0.0;
  double B_plus = 0.0;
  double B_minus = 0.0;
};

/// A balance target strictly inside (0, 1).
class BalanceTarget {
 public:
  constexpr BalanceTarget() = default;
  explicit BalanceTarget(double target);

  constexpr double value() const noexcept { return target_; }

 private:
  double target_ = 0.5;
};

/// Pairwise balance for independent draws (ties 1/2) of a positive and an item
/// scoring above r:
///
///     B(r) = [P v(r)^2 / 2 + N J(r)] / [P v(r) + N u(r)],
///     J(r) = (1/N) sum_{n_j > r} v_tie(n_j).
///
/// The numerator's positive part is exact with ties because every ordered pair
/// of labelled positives (self pairs included) contributes 1/2 on average.
/// Throws EmptyLabelSet when nothing scores above r.
BalanceValue b_exact(const ScoredDataset& ds, double r);

struct MonteCarloEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t n_samples = 0;
  std::uint64_t redraws = 0;
};

/// Sampled B(r): draw a positive and a labelled-positive item uniformly; if
/// both draws are the same item, redraw the pair. Ties count 1/2.
/// Throws EmptyLabelSet, or NoValidPairs when the only possible pair is an
/// item with itself.
MonteCarloEstimate b_mc(const ScoredDataset& ds, double r, std::uint64_t n_samples, std::uint64_t seed);

/// B at r below every score: (P/2 + N A) / (N + P).
double b_limit_neg_inf(const ScoredDataset& ds);

/// B on every threshold_grid point; the above-max sentinel gets its limit 0.
std::vector<BalanceValue> balance_curve(const ScoredDataset& ds);

struct ThresholdSolution {
  double target = 0.5;
  double r = 0.0;              // interpolated crossing
  double bracket_lo_r = 0.0;   // grid point with B > target
  double bracket_hi_r = 0.0;   // next grid point, B <= target
  double bracket_lo_B = 0.0;
  double bracket_hi_B = 0.0;
  double operating_r = 0.0;    // bracket endpoint whose B is nearest target
  bool multi_crossing = false; // more than one down-crossing on the grid
};

/// First down-crossing of target on the grid, linearly interpolated between
/// the bracketing grid points. Throws NoBalancedThresholdError if
/// B(-inf) <= target.
ThresholdSolution solve_balance_threshold(const ScoredDataset& ds, BalanceTarget target = {});
ThresholdSolution solve_balance_threshold(const std::vector<BalanceValue>& curve, double limit,
                                          BalanceTarget target);

/// Score at which the model's predicted positive probability is 1/2; with
/// scores log p this is log(1/2) for every converged model.
double naive_threshold(const LogisticModel& model);

/// "r,B,B_plus,B_minus"
std::string format_balance_csv(const std::vector<BalanceValue>& curve);
/// "r,B,C,v,u": B against precision and both rates, parameterised by r.
std::string format_tradeoff_csv(const ScoredDataset& ds, const std::vector<BalanceValue>& curve);

}  // namespace indist
