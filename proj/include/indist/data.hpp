#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace indist {

enum class Label : int { Negative = -1, Positive = 1 };

struct Record {
  double x;
  Label y;

  friend bool operator==(const Record&, const Record&) = default;
};

/// Unscored feature/label records. Every x finite.
class RawDataset {
 public:
  RawDataset() = default;
  explicit RawDataset(std::vector<Record> records);

  std::span<const Record> records() const noexcept { return records_; }
  std::size_t size() const noexcept { return records_.size(); }
  std::size_t count(Label label) const noexcept;

  friend bool operator==(const RawDataset&, const RawDataset&) = default;

 private:
  std::vector<Record> records_;
};

/// Parameters of one synthetic dataset: one Gaussian positive class and a
/// negative class mixing "difficult" and "easy" Gaussian components.
struct DatasetSpec {
  std::size_t n_pos = 1000;
  double m_p = 10.0;
  double sigma_p = 2.0;
  std::size_t n_diff = 1000;
  double m_n = 5.0;
  double sigma_n = 2.0;
  std::size_t n_easy = 10000;
  double m_easy = 2.0;
  double sigma_easy = 2.0;
  std::uint64_t seed = 0;

  void validate() const;
};

struct NamedSpec {
  char name;
  DatasetSpec spec;
};

/// Draws positives, then difficult negatives, then easy negatives, in that
/// order, from a single generator seeded with spec.seed.
RawDataset generate_synthetic(const DatasetSpec& spec);

/// The nine-dataset grid a..i. Columns (a,d,g)/(b,e,h)/(c,f,i) use difficult
/// negative means 5/7/9; rows (a,b,c)/(d,e,f)/(g,h,i) use 10000/1000/100 easy
/// negatives. Dataset k (0-based) gets seed derive_seed(master_seed, k).
std::array<NamedSpec, 9> benchmark_grid(std::uint64_t master_seed);

/// Index 0..8 for 'a'..'i'; throws InvalidArgument otherwise.
std::size_t grid_index(char name);

struct LogisticModel {
  double beta0 = 0.0;
  double beta1 = 0.0;
  bool converged = false;
  int iterations = 0;

  /// Linear predictor beta0 + beta1 * x.
  double eta(double x) const noexcept { return beta0 + beta1 * x; }
};

struct FitOptions {
  int max_iter = 100;
  double tol = 1e-10;
  double separation_cap = 1e8;
};

/// Maximum-likelihood fit of P(y = +1 | x) = 1 / (1 + exp(-(beta0 + beta1 x)))
/// by Newton-Raphson / IRLS with step halving.
///
/// Throws SeparationDetected when the classes are separable along x (the
/// likelihood has no finite maximiser) or the coefficients exceed
/// options.separation_cap, NotConverged when max_iter is exhausted, and
/// Validation for single-class or constant-feature input.
LogisticModel fit_logistic_1d(const RawDataset& data, const FitOptions& options = {});

/// Gradient of the Bernoulli log-likelihood (summed over records) at (beta0, beta1).
std::array<double, 2> log_likelihood_gradient(const RawDataset& data, double beta0, double beta1);

/// log sigma(eta), evaluated without overflow for either sign of eta.
double log_sigmoid(double eta) noexcept;

/// Scores of the two classes, each sorted ascending. P >= 1, N >= 1, all finite.
class ScoredDataset {
 public:
  ScoredDataset(std::vector<double> positives, std::vector<double> negatives);

  std::span<const double> positives() const noexcept { return pos_; }
  std::span<const double> negatives() const noexcept { return neg_; }
  std::size_t P() const noexcept { return pos_.size(); }
  std::size_t N() const noexcept { return neg_.size(); }
  double min_score() const noexcept;
  double max_score() const noexcept;

  friend bool operator==(const ScoredDataset&, const ScoredDataset&) = default;

 private:
  std::vector<double> pos_;
  std::vector<double> neg_;
};

/// score_i = log p(+1 | x_i). Requires model.converged.
ScoredDataset score_dataset(const LogisticModel& model, const RawDataset& data);

// CSV formats. Raw: header "x,y"; scored: header "score,label". Labels are
// -1 or 1; reals are written as the shortest decimal that round-trips.
RawDataset load_raw_csv(const std::filesystem::path& path);
void save_raw_csv(const RawDataset& data, const std::filesystem::path& path);
ScoredDataset load_scored_csv(const std::filesystem::path& path);
void save_scored_csv(const ScoredDataset& data, const std::filesystem::path& path);

RawDataset parse_raw_csv(const std::string& text);
ScoredDataset parse_scored_csv(const std::string& text);
std::string format_raw_csv(const RawDataset& data);
std::string format_scored_csv(const ScoredDataset& data);

/// Shortest round-trip decimal for a double ("nan", "inf", "-inf" for non-finite).
std::string format_double(double value);

}  // namespace indist
