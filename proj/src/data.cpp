#include "indist/data.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "indist/error.hpp"
#include "indist/rng.hpp"

namespace indist {

namespace {

void require(bool ok, ErrorCode code, const std::string& what) {
  if (!ok) throw Error(code, what);
}

}  // namespace

RawDataset::RawDataset(std::vector<Record> records) : records_(std::move(records)) {
  for (std::size_t i = 0; i < records_.size(); ++i) {
    const auto& rec = records_[i];
    require(std::isfinite(rec.x), ErrorCode::Validation, "record " + std::to_string(i) + ": non-finite x");
    require(rec.y == Label::Positive || rec.y == Label::Negative, ErrorCode::Validation,
            "record " + std::to_string(i) + ": label must be -1 or 1");
  }
}

std::size_t RawDataset::count(Label label) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(records_.begin(), records_.end(), [label](const Record& r) { return r.y == label; }));
}

void DatasetSpec::validate() const {
  require(n_pos >= 1, ErrorCode::Validation, "n_pos must be at least 1");
  require(n_diff + n_easy >= 1, ErrorCode::Validation, "n_diff + n_easy must be at least 1");
  for (double sd : {sigma_p, sigma_n, sigma_easy}) {
    require(std::isfinite(sd) && sd > 0.0, ErrorCode::Validation, "standard deviations must be positive");
  }
  for (double m : {m_p, m_n, m_easy}) {
    require(std::isfinite(m), ErrorCode::Validation, "means must be finite");
  }
}

RawDataset generate_synthetic(const DatasetSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  std::vector<Record> records;
  records.reserve(spec.n_pos + spec.n_diff + spec.n_easy);
  for (std::size_t i = 0; i < spec.n_pos; ++i) records.push_back({rng.normal(spec.m_p, spec.sigma_p), Label::Positive});
  for (std::size_t i = 0; i < spec.n_diff; ++i) records.push_back({rng.normal(spec.m_n, spec.sigma_n), Label::Negative});
  for (std::size_t i = 0; i < spec.n_easy; ++i)
    records.push_back({rng.normal(spec.m_easy, spec.sigma_easy), Label::Negative});
  return RawDataset(std::move(records));
}

std::array<NamedSpec, 9> benchmark_grid(std::uint64_t master_seed) {
  constexpr std::array<double, 3> column_mean{5.0, 7.0, 9.0};
  constexpr std::array<std::size_t, 3> row_easy{10000, 1000, 100};
  std::array<NamedSpec, 9> grid{};
  for (std::size_t k = 0; k < 9; ++k) {
    DatasetSpec spec;
    spec.m_n = column_mean[k % 3];
    spec.n_easy = row_easy[k / 3];
    spec.seed = derive_seed(master_seed, k);
    grid[k] = {static_cast<char>('a' + k), spec};
  }
  return grid;
}

std::size_t grid_index(char name) {
  require(name >= 'a' && name <= 'i', ErrorCode::InvalidArgument,
          std::string("unknown dataset '") + name + "' (expected a..i)");
  return static_cast<std::size_t>(name - 'a');
}

double log_sigmoid(double eta) noexcept {
  return eta >= 0.0 ? -std::log1p(std::exp(-eta)) : eta - std::log1p(std::exp(eta));
}

ScoredDataset::ScoredDataset(std::vector<double> positives, std::vector<double> negatives)
    : pos_(std::move(positives)), neg_(std::move(negatives)) {
  require(!pos_.empty(), ErrorCode::Validation, "positive class is empty");
  require(!neg_.empty(), ErrorCode::Validation, "negative class is empty");
  auto finite = [](double s) { return std::isfinite(s); };
  require(std::all_of(pos_.begin(), pos_.end(), finite) && std::all_of(neg_.begin(), neg_.end(), finite),
          ErrorCode::Validation, "scores must be finite");
  std::sort(pos_.begin(), pos_.end());
  std::sort(neg_.begin(), neg_.end());
}

double ScoredDataset::min_score() const noexcept { return std::min(pos_.front(), neg_.front()); }
double ScoredDataset::max_score() const noexcept { return std::max(pos_.back(), neg_.back()); }

ScoredDataset score_dataset(const LogisticModel& model, const RawDataset& data) {
  require(model.converged, ErrorCode::InvalidArgument, "model has not converged");
  std::vector<double> pos, neg;
  for (const auto& rec : data.records()) {
    const double s = log_sigmoid(model.eta(rec.x));
    (rec.y == Label::Positive ? pos : neg).push_back(s);
  }
  return ScoredDataset(std::move(pos), std::move(neg));
}

}  // namespace indist
