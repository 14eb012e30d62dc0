#include "indist/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "indist/error.hpp"
#include "indist/rng.hpp"
#include "rank_counts.hpp"

namespace indist {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::span<const double> scores_of(const ScoredDataset& ds, ScoreClass cls) {
  return cls == ScoreClass::Positive ? ds.positives() : ds.negatives();
}

}  // namespace

namespace detail {

std::vector<std::uint64_t> doubled_wins_each(std::span<const double> pos, std::span<const double> neg) {
  std::vector<std::uint64_t> out;
  out.reserve(neg.size());
  std::size_t below = 0;  // positives < current negative
  std::size_t upto = 0;   // positives <= current negative
  for (double n : neg) {
    while (below < pos.size() && pos[below] < n) ++below;
    if (upto < below) upto = below;
    while (upto < pos.size() && pos[upto] <= n) ++upto;
    const std::size_t greater = pos.size() - upto;
    const std::size_t equal = upto - below;
    out.push_back(2 * greater + equal);
  }
  return out;
}

std::uint64_t doubled_wins(std::span<const double> pos, std::span<const double> neg) {
  std::uint64_t total = 0;
  for (auto w : doubled_wins_each(pos, neg)) total += w;
  return total;
}

}  // namespace detail

namespace {

int doubled_compare(double p, double s) { return p > s ? 2 : (p == s ? 1 : 0); }

CurvePoint point_at(const ScoredDataset& ds, double r) {
  const auto kp = count_above(ds.positives(), r);
  const auto kn = count_above(ds.negatives(), r);
  CurvePoint pt{r, static_cast<double>(kn) / static_cast<double>(ds.N()),
                static_cast<double>(kp) / static_cast<double>(ds.P()), kNaN, kNaN};
  if (kp + kn > 0) {
    pt.precision = static_cast<double>(kp) / static_cast<double>(kp + kn);
    if (pt.precision + pt.v > 0) pt.f1 = 2.0 * pt.precision * pt.v / (pt.precision + pt.v);
  }
  return pt;
}

}  // namespace

std::size_t count_above(std::span<const double> sorted, double r) noexcept {
  return static_cast<std::size_t>(sorted.end() - std::upper_bound(sorted.begin(), sorted.end(), r));
}

std::size_t count_equal(std::span<const double> sorted, double r) noexcept {
  const auto [lo, hi] = std::equal_range(sorted.begin(), sorted.end(), r);
  return static_cast<std::size_t>(hi - lo);
}

double empirical_cdf(const ScoredDataset& ds, ScoreClass cls, double r) {
  const auto s = scores_of(ds, cls);
  const auto below = std::lower_bound(s.begin(), s.end(), r) - s.begin();
  return static_cast<double>(below) / static_cast<double>(s.size());
}

Rates rates_at(const ScoredDataset& ds, double r) {
  const double P = static_cast<double>(ds.P());
  const double N = static_cast<double>(ds.N());
  const auto gp = static_cast<double>(count_above(ds.positives(), r));
  const auto gn = static_cast<double>(count_above(ds.negatives(), r));
  const auto ep = static_cast<double>(count_equal(ds.positives(), r));
  const auto en = static_cast<double>(count_equal(ds.negatives(), r));
  return {gp / P, gn / N, (gp + 0.5 * ep) / P, (gn + 0.5 * en) / N};
}

AucEstimate auc_rank(const ScoredDataset& ds) {
  const std::uint64_t pairs = static_cast<std::uint64_t>(ds.P()) * ds.N();
  const double value =
      static_cast<double>(detail::doubled_wins(ds.positives(), ds.negatives())) / (2.0 * static_cast<double>(pairs));
  return {value, 0.0, pairs};
}

AucEstimate auc_pairwise_mc(const ScoredDataset& ds, std::uint64_t n_samples, std::uint64_t seed) {
  if (n_samples == 0) throw Error(ErrorCode::InvalidArgument, "n_samples must be at least 1");
  Rng rng(seed);
  const auto pos = ds.positives();
  const auto neg = ds.negatives();
  std::uint64_t wins2 = 0;
  for (std::uint64_t k = 0; k < n_samples; ++k) {
    const double p = pos[rng.index(pos.size())];
    const double n = neg[rng.index(neg.size())];
    wins2 += static_cast<std::uint64_t>(doubled_compare(p, n));
  }
  const double value = static_cast<double>(wins2) / (2.0 * static_cast<double>(n_samples));
  return {value, std::sqrt(value * (1.0 - value) / static_cast<double>(n_samples)), n_samples};
}

std::vector<double> threshold_grid(const ScoredDataset& ds) {
  std::vector<double> distinct;
  distinct.reserve(ds.P() + ds.N());
  std::merge(ds.positives().begin(), ds.positives().end(), ds.negatives().begin(), ds.negatives().end(),
             std::back_inserter(distinct));
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  const double lo_score = distinct.front();
  const double hi_score = distinct.back();
  const double pad = std::max(1.0, hi_score - lo_score);
  double lo = lo_score - pad;
  double hi = hi_score + pad;
  if (!(lo < lo_score)) lo = std::nextafter(lo_score, -std::numeric_limits<double>::infinity());
  if (!(hi > hi_score)) hi = std::nextafter(hi_score, std::numeric_limits<double>::infinity());

  std::vector<double> grid;
  grid.reserve(distinct.size() + 1);
  grid.push_back(lo);
  for (std::size_t i = 0; i + 1 < distinct.size(); ++i) {
    const double a = distinct[i];
    const double b = distinct[i + 1];
    double mid = a + (b - a) / 2.0;
    // Adjacent doubles: the strict "> r" labelled set must still start at b.
    if (!(mid < b)) mid = a;
    grid.push_back(mid);
  }
  grid.push_back(hi);
  return grid;
}

Curve roc_curve(const ScoredDataset& ds) {
  Curve curve{CurveKind::Roc, {}};
  for (double r : threshold_grid(ds)) curve.points.push_back(point_at(ds, r));
  return curve;
}

Curve pr_curve(const ScoredDataset& ds) {
  Curve curve{CurveKind::PrecisionRecall, {}};
  for (double r : threshold_grid(ds)) {
    auto pt = point_at(ds, r);
    if (!std::isnan(pt.precision)) curve.points.push_back(pt);
  }
  return curve;
}

AucEstimate auc_trapezoid(const Curve& curve) {
  double area = 0.0;
  for (std::size_t k = 0; k + 1 < curve.points.size(); ++k) {
    const auto& a = curve.points[k];
    const auto& b = curve.points[k + 1];
    area += (a.u - b.u) * (a.v + b.v) / 2.0;
  }
  return {area, 0.0, 0};
}

double auprc(const Curve& curve) {
  // Walk thresholds from high to low so recall is non-decreasing and, at a
  // repeated recall, precision is visited in threshold order.
  std::vector<std::pair<double, double>> pts;  // (recall, precision)
  for (auto it = curve.points.rbegin(); it != curve.points.rend(); ++it)
    if (!std::isnan(it->precision)) pts.emplace_back(it->v, it->precision);
  if (pts.empty()) throw Error(ErrorCode::UndefinedValue, "curve has no point with defined precision");
  double area = pts.front().first * pts.front().second;
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    area += (pts[k + 1].first - pts[k].first) * (pts[k].second + pts[k + 1].second) / 2.0;
  }
  return area;
}

double precision_at(const ScoredDataset& ds, double r) {
  const auto kp = count_above(ds.positives(), r);
  const auto kn = count_above(ds.negatives(), r);
  if (kp + kn == 0) throw Error(ErrorCode::EmptyLabelSet, "no score exceeds threshold " + format_double(r));
  return static_cast<double>(kp) / static_cast<double>(kp + kn);
}

double f1_at(const ScoredDataset& ds, double r) {
  const double c = precision_at(ds, r);
  const double v = static_cast<double>(count_above(ds.positives(), r)) / static_cast<double>(ds.P());
  if (c + v == 0.0) throw Error(ErrorCode::UndefinedValue, "F1 undefined: precision and recall are both zero");
  return 2.0 * c * v / (c + v);
}

std::string format_curve_csv(const Curve& curve) {
  std::string out = "r,u,v,precision,f1\n";
  for (const auto& p : curve.points) {
    out += format_double(p.r) + ',' + format_double(p.u) + ',' + format_double(p.v) + ',' +
           format_double(p.precision) + ',' + format_double(p.f1) + '\n';
  }
  return out;
}

}  // namespace indist
