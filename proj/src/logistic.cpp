#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "indist/data.hpp"
#include "indist/error.hpp"

namespace indist {

namespace {

struct Moments {
  long double ll = 0;
  long double g0 = 0, g1 = 0;        // gradient
  long double h00 = 0, h01 = 0, h11 = 0;  // Fisher information
};

// Works on centred features so the 2x2 system stays well conditioned.
Moments evaluate(const RawDataset& data, double centre, double b0, double b1) {
  Moments m;
  for (const auto& rec : data.records()) {
    const double x = rec.x - centre;
    const double eta = b0 + b1 * x;
    const double t = rec.y == Label::Positive ? 1.0 : 0.0;
    const double p = 1.0 / (1.0 + std::exp(-eta));
    const double w = p * (1.0 - p);
    m.ll += t > 0 ? log_sigmoid(eta) : log_sigmoid(-eta);
    m.g0 += t - p;
    m.g1 += (t - p) * x;
    m.h00 += w;
    m.h01 += w * x;
    m.h11 += w * x * x;
  }
  return m;
}

}  // namespace

std::array<double, 2> log_likelihood_gradient(const RawDataset& data, double beta0, double beta1) {
  long double g0 = 0, g1 = 0;
  for (const auto& rec : data.records()) {
    const double t = rec.y == Label::Positive ? 1.0 : 0.0;
    const double p = 1.0 / (1.0 + std::exp(-(beta0 + beta1 * rec.x)));
    g0 += t - p;
    g1 += (t - p) * rec.x;
  }
  return {static_cast<double>(g0), static_cast<double>(g1)};
}

LogisticModel fit_logistic_1d(const RawDataset& data, const FitOptions& options) {
  if (options.max_iter < 1 || !(options.tol > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "max_iter must be >= 1 and tol > 0");
  }
  const auto n_pos = data.count(Label::Positive);
  const auto n_neg = data.count(Label::Negative);
  if (n_pos == 0 || n_neg == 0) {
    throw Error(ErrorCode::Validation, "both classes must be present to fit");
  }

  double min_pos = std::numeric_limits<double>::infinity(), max_pos = -min_pos;
  double min_neg = min_pos, max_neg = -min_pos;
  long double sum = 0;
  for (const auto& rec : data.records()) {
    sum += rec.x;
    if (rec.y == Label::Positive) {
      min_pos = std::min(min_pos, rec.x);
      max_pos = std::max(max_pos, rec.x);
    } else {
      min_neg = std::min(min_neg, rec.x);
      max_neg = std::max(max_neg, rec.x);
    }
  }
  if (std::min(min_pos, min_neg) == std::max(max_pos, max_neg)) {
    throw Error(ErrorCode::Validation, "feature is constant; slope is not identifiable");
  }
  // In one dimension the likelihood is unbounded exactly when one class lies
  // entirely on one side of the other (ties at the boundary included).
  if (max_neg <= min_pos || max_pos <= min_neg) {
    throw Error(ErrorCode::SeparationDetected, "classes are separable along x; likelihood has no maximum");
  }

  const double centre = static_cast<double>(sum / data.size());
  double b0 = 0.0, b1 = 0.0;  // centred parametrisation
  Moments m = evaluate(data, centre, b0, b1);

  for (int iter = 1; iter <= options.max_iter; ++iter) {
    const long double det = m.h00 * m.h11 - m.h01 * m.h01;
    if (!(det > 0)) {
      throw Error(ErrorCode::SeparationDetected, "information matrix became singular");
    }
    const double step0 = static_cast<double>((m.h11 * m.g0 - m.h01 * m.g1) / det);
    const double step1 = static_cast<double>((m.h00 * m.g1 - m.h01 * m.g0) / det);

    double scale = 1.0;
    Moments next;
    for (int halving = 0; halving < 40; ++halving, scale *= 0.5) {
      next = evaluate(data, centre, b0 + scale * step0, b1 + scale * step1);
      if (next.ll >= m.ll - 1e-12L * std::fabs(m.ll)) break;
    }
    const double d0 = scale * step0;
    const double d1 = scale * step1;
    b0 += d0;
    b1 += d1;
    m = next;

    const double beta0 = b0 - b1 * centre;
    if (!std::isfinite(beta0) || !std::isfinite(b1) || std::fabs(beta0) > options.separation_cap ||
        std::fabs(b1) > options.separation_cap) {
      throw Error(ErrorCode::SeparationDetected, "coefficients exceeded the separation cap");
    }
    // Change in the original (uncentred) coordinates.
    const double change = std::max(std::fabs(d0 - d1 * centre), std::fabs(d1));
    if (change < options.tol) {
      return {beta0, b1, true, iter};
    }
  }
  throw Error(ErrorCode::NotConverged,
              "IRLS did not converge in " + std::to_string(options.max_iter) + " iterations");
}

}  // namespace indist
