#include "indist/report.hpp"

#include <cmath>
#include <string>

#include <json.hpp>

#include "indist/error.hpp"
#include "indist/metrics.hpp"
#include "indist/rng.hpp"

namespace indist {

namespace {

using Json = nlohmann::ordered_json;

bool same_target(double a, double b) { return std::fabs(a - b) < 1e-12; }

std::string unsolved_reason(double target, double limit) {
  const std::string tail = "B(-inf) = " + format_double(limit) + " does not exceed target " + format_double(target);
  return same_target(target, 0.5) ? "A ≤ 1/2: " + tail : tail;
}

TargetResult solve_target(const ScoredDataset& ds, const std::vector<BalanceValue>& curve, double limit,
                          double target) {
  TargetResult out;
  out.target = target;
  try {
    out.solution = solve_balance_threshold(curve, limit, BalanceTarget(target));
  } catch (const NoBalancedThresholdError&) {
    const auto why = unsolved_reason(target, limit);
    out.r = Quantity::absent(why);
    out.precision = Quantity::absent("threshold absent: " + why);
    return out;
  }
  out.r = Quantity::of(out.solution->r);
  out.precision = Quantity::of(precision_at(ds, out.solution->operating_r));
  return out;
}

template <class F>
Quantity guarded(F&& f) {
  try {
    return Quantity::of(f());
  } catch (const Error& e) {
    return Quantity::absent(e.what());
  }
}

void put(Json& j, const std::string& key, const Quantity& q) {
  if (q.present()) {
    j[key] = *q.value;
  } else {
    j[key] = nullptr;
    j[key + "_reason"] = q.reason;
  }
}

std::string pct_suffix(double target) { return format_double(std::round(target * 1000.0) / 10.0); }

void put_target(Json& j, const TargetResult& t, const std::string& r_key, const std::string& c_key) {
  put(j, r_key, t.r);
  if (t.solution) {
    const auto& s = *t.solution;
    j[r_key + "_operating"] = s.operating_r;
    j[r_key + "_bracket_lo"] = s.bracket_lo_r;
    j[r_key + "_bracket_hi"] = s.bracket_hi_r;
    j[r_key + "_b_lo"] = s.bracket_lo_B;
    j[r_key + "_b_hi"] = s.bracket_hi_B;
    j[r_key + "_multi_crossing"] = s.multi_crossing;
  } else {
    for (const char* suffix : {"_operating", "_bracket_lo", "_bracket_hi", "_b_lo", "_b_hi", "_multi_crossing"}) {
      j[r_key + suffix] = nullptr;
    }
  }
  put(j, c_key, t.precision);
}

}  // namespace

IndistReport indist_report(const ScoredDataset& ds, const LogisticModel* model, const ReportOptions& options) {
  for (double t : options.targets) (void)BalanceTarget{t};

  IndistReport rep;
  rep.P = ds.P();
  rep.N = ds.N();
  rep.A = auc_rank(ds).value;
  rep.B_neg_inf = b_limit_neg_inf(ds);

  const auto curve = balance_curve(ds);
  rep.rb = solve_target(ds, curve, rep.B_neg_inf, 0.5);
  rep.r40 = solve_target(ds, curve, rep.B_neg_inf, 0.4);
  rep.r60 = solve_target(ds, curve, rep.B_neg_inf, 0.6);
  for (double t : options.targets) {
    if (same_target(t, 0.4) || same_target(t, 0.5) || same_target(t, 0.6)) continue;
    rep.extra_targets.push_back(solve_target(ds, curve, rep.B_neg_inf, t));
  }

  if (rep.rb.solution) {
    const double op = rep.rb.solution->operating_r;
    const auto rates = rates_at(ds, op);
    rep.F1_at_rb = guarded([&] { return f1_at(ds, op); });
    rep.v_at_rb = Quantity::of(rates.v);
    rep.u_at_rb = Quantity::of(rates.u);
  } else {
    const auto why = "threshold absent: " + rep.rb.r.reason;
    rep.F1_at_rb = rep.v_at_rb = rep.u_at_rb = Quantity::absent(why);
  }

  if (model != nullptr && model->converged) {
    const double naive = naive_threshold(*model);
    rep.naive_r = Quantity::of(naive);
    rep.C_at_naive = guarded([&] { return precision_at(ds, naive); });
  } else {
    const std::string why = model == nullptr ? "no model supplied" : "model has not converged";
    rep.naive_r = rep.C_at_naive = Quantity::absent(why);
  }

  if (options.threshold) {
    const double r = *options.threshold;
    if (!std::isfinite(r)) throw Error(ErrorCode::InvalidArgument, "threshold must be finite");
    ThresholdMetrics m;
    m.r = r;
    const auto rates = rates_at(ds, r);
    m.v = rates.v;
    m.u = rates.u;
    m.B = guarded([&] { return b_exact(ds, r).B; });
    m.precision = guarded([&] { return precision_at(ds, r); });
    m.f1 = guarded([&] { return f1_at(ds, r); });
    rep.at_threshold = m;
  }

  rep.mc_samples = options.mc_samples;
  if (options.mc_samples > 0) {
    rep.auc_mc = auc_pairwise_mc(ds, options.mc_samples, derive_seed(options.seed, 0));
    if (rep.rb.solution) {
      try {
        const auto est = b_mc(ds, rep.rb.solution->operating_r, options.mc_samples, derive_seed(options.seed, 1));
        rep.b_mc_at_rb = Quantity::of(est.value);
        rep.b_mc_at_rb_se = Quantity::of(est.std_error);
      } catch (const Error& e) {
        rep.b_mc_at_rb = rep.b_mc_at_rb_se = Quantity::absent(e.what());
      }
    } else {
      rep.b_mc_at_rb = rep.b_mc_at_rb_se = Quantity::absent("threshold absent: " + rep.rb.r.reason);
    }
  }
  return rep;
}

std::string report_to_json(const IndistReport& rep) {
  Json j;
  j["p"] = rep.P;
  j["n"] = rep.N;
  j["auc"] = rep.A;
  j["b_neg_inf"] = rep.B_neg_inf;
  put_target(j, rep.rb, "r_b", "c_at_rb");
  put(j, "f1_at_rb", rep.F1_at_rb);
  put(j, "v_at_rb", rep.v_at_rb);
  put(j, "u_at_rb", rep.u_at_rb);
  put_target(j, rep.r40, "r_40", "c_at_r40");
  put_target(j, rep.r60, "r_60", "c_at_r60");
  for (const auto& t : rep.extra_targets) {
    const auto s = pct_suffix(t.target);
    put_target(j, t, "r_t" + s, "c_at_t" + s);
  }
  put(j, "naive_r", rep.naive_r);
  put(j, "c_at_naive", rep.C_at_naive);
  if (rep.at_threshold) {
    const auto& m = *rep.at_threshold;
    j["threshold"] = m.r;
    put(j, "b_at_threshold", m.B);
    put(j, "c_at_threshold", m.precision);
    put(j, "f1_at_threshold", m.f1);
    j["v_at_threshold"] = m.v;
    j["u_at_threshold"] = m.u;
  }
  if (rep.mc_samples > 0) {
    j["mc_samples"] = rep.mc_samples;
    j["auc_mc"] = rep.auc_mc->value;
    j["auc_mc_se"] = rep.auc_mc->std_error;
    put(j, "b_mc_at_rb", rep.b_mc_at_rb);
    put(j, "b_mc_at_rb_se", rep.b_mc_at_rb_se);
  }
  return j.dump(2) + "\n";
}

}  // namespace indist
