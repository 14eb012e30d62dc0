#include "indist/indist.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "indist/balance.hpp"
#include "indist/data.hpp"
#include "indist/error.hpp"
#include "indist/metrics.hpp"
#include "indist/pipeline.hpp"
#include "indist/report.hpp"

struct indist_raw {
  indist::RawDataset data;
};

struct indist_scored {
  indist::ScoredDataset data;
};

namespace {

thread_local std::string last_error;

indist_status to_status(indist::ErrorCode code) {
  using indist::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return INDIST_ERR_INVALID_ARGUMENT;
    case ErrorCode::Validation: return INDIST_ERR_VALIDATION;
    case ErrorCode::Parse: return INDIST_ERR_PARSE;
    case ErrorCode::Io: return INDIST_ERR_IO;
    case ErrorCode::EmptyLabelSet: return INDIST_ERR_EMPTY_LABEL_SET;
    case ErrorCode::NoValidPairs: return INDIST_ERR_NO_VALID_PAIRS;
    case ErrorCode::NoBalancedThreshold: return INDIST_ERR_NO_BALANCED_THRESHOLD;
    case ErrorCode::SeparationDetected: return INDIST_ERR_SEPARATION;
    case ErrorCode::NotConverged: return INDIST_ERR_NOT_CONVERGED;
    case ErrorCode::UndefinedValue: return INDIST_ERR_UNDEFINED_VALUE;
  }
  return INDIST_ERR_UNKNOWN;
}

template <class F>
indist_status guard(F&& f) noexcept {
  try {
    last_error.clear();
    return f();
  } catch (const indist::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown exception";
  }
  return INDIST_ERR_UNKNOWN;
}

indist_status invalid_handle(const char* what) {
  last_error = std::string("null argument: ") + what;
  return INDIST_ERR_INVALID_HANDLE;
}

char* copy_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

indist::LogisticModel to_model(const indist_model& m) {
  return {m.beta0, m.beta1, m.converged != 0, m.iterations};
}

indist::ReportOptions to_options(const indist_eval_options* opts) {
  indist::ReportOptions out;
  if (opts == nullptr) return out;
  if (opts->targets != nullptr && opts->n_targets > 0) out.targets.assign(opts->targets, opts->targets + opts->n_targets);
  if (opts->has_threshold) out.threshold = opts->threshold;
  out.mc_samples = opts->mc_samples;
  out.seed = opts->seed;
  return out;
}

indist_threshold to_c(const indist::ThresholdSolution& s) {
  return {s.target, s.r, s.bracket_lo_r, s.bracket_hi_r, s.bracket_lo_B, s.bracket_hi_B, s.operating_r,
          s.multi_crossing ? 1 : 0};
}

}  // namespace

extern "C" {

INDIST_API const char* indist_status_string(indist_status status) {
  switch (status) {
    case INDIST_OK: return "ok";
    case INDIST_ERR_INVALID_ARGUMENT: return "invalid argument";
    case INDIST_ERR_VALIDATION: return "validation";
    case INDIST_ERR_PARSE: return "parse";
    case INDIST_ERR_IO: return "io";
    case INDIST_ERR_EMPTY_LABEL_SET: return "empty label set";
    case INDIST_ERR_NO_VALID_PAIRS: return "no valid pairs";
    case INDIST_ERR_NO_BALANCED_THRESHOLD: return "no balanced threshold";
    case INDIST_ERR_SEPARATION: return "separation";
    case INDIST_ERR_NOT_CONVERGED: return "not converged";
    case INDIST_ERR_UNDEFINED_VALUE: return "undefined value";
    case INDIST_ERR_INVALID_HANDLE: return "invalid handle";
    case INDIST_ERR_UNKNOWN: break;
  }
  return "unknown error";
}

INDIST_API const char* indist_last_error(void) { return last_error.c_str(); }

INDIST_API void indist_string_free(char* s) { std::free(s); }

INDIST_API indist_status indist_grid_spec(char dataset, uint64_t master_seed, indist_dataset_spec* out) {
  if (out == nullptr) return invalid_handle("out");
  return guard([&] {
    const auto s = indist::benchmark_grid(master_seed)[indist::grid_index(dataset)].spec;
    *out = {s.n_pos, s.m_p, s.sigma_p, s.n_diff, s.m_n, s.sigma_n, s.n_easy, s.m_easy, s.sigma_easy, s.seed};
    return INDIST_OK;
  });
}

INDIST_API indist_status indist_raw_generate(const indist_dataset_spec* spec, indist_raw** out) {
  if (spec == nullptr || out == nullptr) return invalid_handle("spec/out");
  return guard([&] {
    indist::DatasetSpec s{spec->n_pos, spec->m_p,    spec->sigma_p, spec->n_diff,     spec->m_n,
                          spec->sigma_n, spec->n_easy, spec->m_easy, spec->sigma_easy, spec->seed};
    *out = new indist_raw{indist::generate_synthetic(s)};
    return INDIST_OK;
  });
}

INDIST_API indist_status indist_raw_load_csv(const char* path, indist_raw** out) {
  if (path == nullptr || out == nullptr) return invalid_handle("path/out");
  return guard([&] {
    *out = new indist_raw{indist::load_raw_csv(path)};
    return INDIST_OK;
  });
}

INDIST_API indist_status indist_raw_save_csv(const indist_raw* raw, const char* path) {
  if (raw == nullptr || path == nullptr) return invalid_handle("raw/path");
  return guard([&] {
    indist::save_raw_csv(raw->data, path);
    return INDIST_OK;
  });
}

INDIST_API indist_status indist_raw_size(const indist_raw* raw, size_t* n_records) {
  if (raw == nullptr || n_records == nullptr) return invalid_handle("raw/n_records");
  *n_records = raw->data.size();
  return INDIST_OK;
}

INDIST_API void indist_raw_destroy(indist_raw* raw) { delete raw; }

INDIST_API indist_status indist_fit_logistic(const indist_raw* raw, int max_iter, double tol, indist_model* out) {
  if (raw == nullptr || out == nullptr) return invalid_handle("raw/out");
  return guard([&] {
    indist::FitOptions opts;
    if (max_iter > 0) opts.max_iter = max_iter;
    if (tol > 0) opts.tol = tol;
    const auto m = indist::fit_logistic_1d(raw->data, opts);
    *out = {m.beta0, m.beta1, m.converged ? 1 : 0, m.iterations};
    return INDIST_OK;
  });
}

INDIST_API indist_status indist_score(const indist_raw* raw, const indist_model* model, indist_scored** out) {
  if (raw == nullptr || model == nullptr || out == nullptr) return invalid_handle("raw/model/out");
  return guard([&] {
    *out = new indist_scored{indist::score_dataset(to_model(*model), raw->data)};
    return INDIST_OK;
  });
}

INDIST_API indist_status indist_scored_create(const double* pos, size_t n_pos, const double* neg, size_t n_neg,
                                              indist_scored** out) {
  if ((pos == nullptr && n_pos > 0) || (neg == nullptr && n_neg > 0) || out == nullptr) {
    return invalid_handle("pos/neg/out");
  }
  return guard([&] {
    std::vector<double> p(pos, pos + n_pos), n(neg, neg + n_neg);
    *out = new indist_scored{indist::ScoredDataset(std::move(p), std::move(n))};
    return INDIST_OK;
  });
}

INDIST_API indist_status indist_scored_load_csv(const char* path, indist_scored** out) {
  if (path == nullptr || out == nullptr) return invalid_handle("path/out");
  return guard([&] {
    *out = new indist_scored{indist::load_scored_csv(path)};
    return INDIST_OK;
  });
}

INDIST_API indist_status indist_scored_save_csv(const indist_scored* ds, const char* path) {
  if (ds == nullptr || path == nullptr) return invalid_handle("ds/path");
  return guard([&] {
    indist::save_scored_csv(ds->data, path);
    return INDIST_OK;
  });
}

INDIST_API indist_status indist_scored_counts(const indist_scored* ds, size_t* n_pos, size_t* n_neg) {
  if (ds == nullptr || n_pos == nullptr || n_neg == nullptr) return invalid_handle("ds/n_pos/n_neg");
  *n_pos = ds->data.P();
  *n_neg = ds->data.N();
  return INDIST_OK;
}

INDIST_API void indist_scored_destroy(indist_scored* ds) { delete ds; }

INDIST_API indist_status indist_auc_rank(const indist_scored* ds, double* out) {
  if (ds == nullptr || out == nullptr) return invalid_handle("ds/out");
  return guard([&] {
    *out = indist::auc_rank(ds->data).value;
    return INDIST_OK;
  });
}

INDIST_API indist_status indist_auc_mc(const indist_scored* ds, uint64_t n_samples, uint64_t seed,
                                       indist_estimate* out) {
  if (ds == nullptr || out == nullptr) return invalid_handle("ds/out");
  return guard([&] {
    const auto e = indist::auc_pairwise_mc(ds->data, n_samples, seed);
    *out = {e.value, e.std_error, e.n_pairs};
    return INDIST_OK;
  });
}

INDIST_API indist_status indist_precision_at(const indist_scored* ds, double r, double* out) {
  if (ds == nullptr || out == nullptr) return invalid_handle("ds/out");
  return guard([&] {
    *out = indist::precision_at(ds->data, r);
    return INDIST_OK;
  });
}

INDIST_API indist_status indist_f1_at(const indist_scored* ds, double r, double* out) {
  if (ds == nullptr || out == nullptr) return invalid_handle("ds/out");
  return guard([&] {
    *out = indist::f1_at(ds->data, r);
    return INDIST_OK;
  });
}

INDIST_API indist_status indist_b_exact(const indist_scored* ds, double r, indist_balance* out) {
  if (ds == nullptr || out == nullptr) return invalid_handle("ds/out");
  return guard([&] {
    const auto b = indist::b_exact(ds->data, r);
    *out = {b.r, b.B, b.B_plus, b.B_minus};
    return INDIST_OK;
  });
}

INDIST_API indist_status indist_b_mc(const indist_scored* ds, double r, uint64_t n_samples, uint64_t seed,
                                     indist_estimate* out) {
  if (ds == nullptr || out == nullptr) return invalid_handle("ds/out");
  return guard([&] {
    const auto e = indist::b_mc(ds->data, r, n_samples, seed);
    *out = {e.value, e.std_error, e.n_samples};
    return INDIST_OK;
  });
}

INDIST_API indist_status indist_b_limit(const indist_scored* ds, double* out) {
  if (ds == nullptr || out == nullptr) return invalid_handle("ds/out");
  return guard([&] {
    *out = indist::b_limit_neg_inf(ds->data);
    return INDIST_OK;
  });
}

INDIST_API indist_status indist_solve_threshold(const indist_scored* ds, double target, indist_threshold* out) {
  if (ds == nullptr || out == nullptr) return invalid_handle("ds/out");
  return guard([&] {
    *out = to_c(indist::solve_balance_threshold(ds->data, indist::BalanceTarget(target)));
    return INDIST_OK;
  });
}

INDIST_API double indist_naive_threshold(const indist_model* model) {
  (void)model;  // the score definition fixes the naive threshold for every model
  return std::log(0.5);
}

INDIST_API indist_status indist_report_json(const indist_scored* ds, const indist_model* model,
                                            const indist_eval_options* opts, char** json_out) {
  if (ds == nullptr || json_out == nullptr) return invalid_handle("ds/json_out");
  return guard([&] {
    const auto options = to_options(opts);
    indist::LogisticModel m;
    if (model != nullptr) m = to_model(*model);
    const auto rep = indist::indist_report(ds->data, model != nullptr ? &m : nullptr, options);
    *json_out = copy_string(indist::report_to_json(rep));
    return INDIST_OK;
  });
}

INDIST_API indist_status indist_write_curves(const indist_scored* ds, const char* out_dir) {
  if (ds == nullptr || out_dir == nullptr) return invalid_handle("ds/out_dir");
  return guard([&] {
    indist::write_curves(ds->data, out_dir);
    return INDIST_OK;
  });
}

INDIST_API indist_status indist_replicate(uint64_t master_seed, const char* out_dir, const indist_eval_options* opts,
                                          char** table_json_out) {
  return guard([&] {
    std::optional<std::filesystem::path> dir;
    if (out_dir != nullptr) dir = out_dir;
    const auto table = indist::replicate(master_seed, dir, to_options(opts));
    if (table_json_out != nullptr) *table_json_out = copy_string(indist::replication_json(table));
    return INDIST_OK;
  });
}

}  // extern "C"
