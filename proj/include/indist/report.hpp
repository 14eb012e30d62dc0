#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "indist/balance.hpp"
#include "indist/data.hpp"

namespace indist {

/// A report value that may be absent; absent values always carry a reason.
struct Quantity {
  std::optional<double> value;
  std::string reason;

  static Quantity of(double v) { return {v, {}}; }
  static Quantity absent(std::string why) { return {std::nullopt, std::move(why)}; }
  bool present() const noexcept { return value.has_value(); }
};

struct TargetResult {
  double target = 0.5;
  std::optional<ThresholdSolution> solution;
  Quantity r;
  Quantity precision;
};

struct ThresholdMetrics {
  double r = 0.0;
  Quantity B;
  Quantity precision;
  Quantity f1;
  double v = 0.0;
  double u = 0.0;
};

struct ReportOptions {
  std::vector<double> targets{0.4, 0.5, 0.6};
  std::optional<double> threshold;
  std::uint64_t mc_samples = 0;
  std::uint64_t seed = 0;
};

struct IndistReport {
  std::size_t P = 0;
  std::size_t N = 0;
  double A = 0.0;
  double B_neg_inf = 0.0;

  TargetResult rb;   // B = 0.5
  TargetResult r40;  // B = 0.4
  TargetResult r60;  // B = 0.6
  std::vector<TargetResult> extra_targets;

  // Evaluated at rb's operating grid point.
  Quantity F1_at_rb;
  Quantity v_at_rb;
  Quantity u_at_rb;

  Quantity naive_r;
  Quantity C_at_naive;

  std::optional<ThresholdMetrics> at_threshold;

  std::uint64_t mc_samples = 0;
  std::optional<AucEstimate> auc_mc;
  Quantity b_mc_at_rb;
  Quantity b_mc_at_rb_se;
};

/// Assembles the headline report. Thresholds that cannot be solved are marked
/// absent with a reason instead of failing the whole report. model may be
/// null, in which case the naive-threshold fields are absent.
IndistReport indist_report(const ScoredDataset& ds, const LogisticModel* model = nullptr,
                           const ReportOptions& options = {});

/// Flat JSON object with snake_case keys; absent values are null with a
/// "<key>_reason" companion.
std::string report_to_json(const IndistReport& report);

}  // namespace indist
