#include "indist/balance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "indist/error.hpp"
#include "indist/rng.hpp"
#include "rank_counts.hpp"

namespace indist {

namespace {

// B in units of 1/(2 P L): plus part kp^2, minus part 2*wins + ties of the
// labelled negatives against all positives.
BalanceValue from_counts(double r, std::size_t P, std::size_t labelled, std::uint64_t doubled_plus,
                         std::uint64_t doubled_minus) {
  if (labelled == 0) return {r, 0.0, 0.0, 0.0};
  const double denom = 2.0 * static_cast<double>(P) * static_cast<double>(labelled);
  return {r, static_cast<double>(doubled_plus + doubled_minus) / denom, static_cast<double>(doubled_plus) / denom,
          static_cast<double>(doubled_minus) / denom};
}

}  // namespace

BalanceTarget::BalanceTarget(double target) : target_(target) {
  if (!(target > 0.0 && target < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "balance target must lie strictly between 0 and 1");
  }
}

BalanceValue b_exact(const ScoredDataset& ds, double r) {
  const auto pos = ds.positives();
  const auto neg = ds.negatives();
  const std::size_t kp = count_above(pos, r);
  const std::size_t kn = count_above(neg, r);
  if (kp + kn == 0) throw Error(ErrorCode::EmptyLabelSet, "no score exceeds threshold " + format_double(r));
  const auto kp64 = static_cast<std::uint64_t>(kp);
  return from_counts(r, ds.P(), kp + kn, kp64 * kp64, detail::doubled_wins(pos, neg.last(kn)));
}

MonteCarloEstimate b_mc(const ScoredDataset& ds, double r, std::uint64_t n_samples, std::uint64_t seed) {
  if (n_samples == 0) throw Error(ErrorCode::InvalidArgument, "n_samples must be at least 1");
  const auto pos = ds.positives();
  const auto neg = ds.negatives();
  const std::size_t P = pos.size();
  const std::size_t kp = count_above(pos, r);
  const std::size_t kn = count_above(neg, r);
  const std::size_t labelled = kp + kn;
  if (labelled == 0) throw Error(ErrorCode::EmptyLabelSet, "no score exceeds threshold " + format_double(r));
  if (P == 1 && labelled == 1 && kp == 1) {
    throw Error(ErrorCode::NoValidPairs, "the only labelled item is the only positive");
  }

  // Labelled index j < kp is the positive at P - kp + j; the rest index the
  // negative tail.
  Rng rng(seed);
  MonteCarloEstimate est;
  std::uint64_t wins2 = 0;
  for (std::uint64_t k = 0; k < n_samples; ++k) {
    std::size_t i, j;
    for (;;) {
      i = rng.index(P);
      j = rng.index(labelled);
      if (j >= kp || P - kp + j != i) break;
      ++est.redraws;
    }
    const double sp = pos[i];
    const double sr = j < kp ? pos[P - kp + j] : neg[neg.size() - kn + (j - kp)];
    wins2 += sp > sr ? 2 : (sp == sr ? 1 : 0);
  }
  est.n_samples = n_samples;
  est.value = static_cast<double>(wins2) / (2.0 * static_cast<double>(n_samples));
  est.std_error = std::sqrt(est.value * (1.0 - est.value) / static_cast<double>(n_samples));
  return est;
}

double b_limit_neg_inf(const ScoredDataset& ds) {
  // (P/2 + N A) / (N + P) with N A = U2 / (2P); same integers as b_exact
  // below the minimum score.
  const auto P = static_cast<std::uint64_t>(ds.P());
  const std::uint64_t u2 = detail::doubled_wins(ds.positives(), ds.negatives());
  return from_counts(0.0, ds.P(), ds.P() + ds.N(), P * P, u2).B;
}

std::vector<BalanceValue> balance_curve(const ScoredDataset& ds) {
  const auto pos = ds.positives();
  const auto neg = ds.negatives();
  // suffix[j] = doubled wins of negatives j.. against all positives.
  const auto each = detail::doubled_wins_each(pos, neg);
  std::vector<std::uint64_t> suffix(neg.size() + 1, 0);
  for (std::size_t j = neg.size(); j-- > 0;) suffix[j] = suffix[j + 1] + each[j];
  std::vector<BalanceValue> curve;
  for (double r : threshold_grid(ds)) {
    const std::size_t kp = count_above(pos, r);
    const std::size_t kn = count_above(neg, r);
    const auto kp64 = static_cast<std::uint64_t>(kp);
    curve.push_back(from_counts(r, ds.P(), kp + kn, kp64 * kp64, suffix[neg.size() - kn]));
  }
  return curve;
}

ThresholdSolution solve_balance_threshold(const std::vector<BalanceValue>& curve, double limit,
                                          BalanceTarget target) {
  const double t = target.value();
  if (!(limit > t) || curve.size() < 2) throw NoBalancedThresholdError(t, limit);

  ThresholdSolution sol;
  sol.target = t;
  bool found = false;
  for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
    const auto& lo = curve[i];
    const auto& hi = curve[i + 1];
    if (!(lo.B > t && hi.B <= t)) continue;
    if (found) {
      sol.multi_crossing = true;
      break;
    }
    found = true;
    const double alpha = (lo.B - t) / (lo.B - hi.B);
    sol.r = lo.r + alpha * (hi.r - lo.r);
    sol.bracket_lo_r = lo.r;
    sol.bracket_hi_r = hi.r;
    sol.bracket_lo_B = lo.B;
    sol.bracket_hi_B = hi.B;
    sol.operating_r = alpha < 0.5 ? lo.r : hi.r;
  }
  if (!found) throw NoBalancedThresholdError(t, limit);
  return sol;
}

ThresholdSolution solve_balance_threshold(const ScoredDataset& ds, BalanceTarget target) {
  return solve_balance_threshold(balance_curve(ds), b_limit_neg_inf(ds), target);
}

double naive_threshold(const LogisticModel& model) {
  if (!model.converged) throw Error(ErrorCode::InvalidArgument, "model has not converged");
  return std::log(0.5);
}

std::string format_balance_csv(const std::vector<BalanceValue>& curve) {
  std::string out = "r,B,B_plus,B_minus\n";
  for (const auto& b : curve) {
    out += format_double(b.r) + ',' + format_double(b.B) + ',' + format_double(b.B_plus) + ',' +
           format_double(b.B_minus) + '\n';
  }
  return out;
}

std::string format_tradeoff_csv(const ScoredDataset& ds, const std::vector<BalanceValue>& curve) {
  std::string out = "r,B,C,v,u\n";
  for (const auto& b : curve) {
    const auto rates = rates_at(ds, b.r);
    const std::size_t labelled = count_above(ds.positives(), b.r) + count_above(ds.negatives(), b.r);
    const double c = labelled > 0 ? precision_at(ds, b.r) : std::numeric_limits<double>::quiet_NaN();
    out += format_double(b.r) + ',' + format_double(b.B) + ',' + format_double(c) + ',' + format_double(rates.v) +
           ',' + format_double(rates.u) + '\n';
  }
  return out;
}

}  // namespace indist
