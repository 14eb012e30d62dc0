/*
 * C interface to the indist classifier-evaluation library.
 *
 * Objects are opaque handles created by indist_*_create/load/generate calls
 * and released with the matching *_destroy. Every call returns an
 * indist_status; on failure a message for the calling thread is available
 * from indist_last_error(). Strings returned through char** out-parameters
 * are heap-allocated and must be released with indist_string_free().
 */
#ifndef INDIST_INDIST_H
#define INDIST_INDIST_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define INDIST_API __declspec(dllexport)
#elif defined(__GNUC__)
#define INDIST_API __attribute__((visibility("default")))
#else
#define INDIST_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum indist_status {
  INDIST_OK = 0,
  INDIST_ERR_INVALID_ARGUMENT = 1,
  INDIST_ERR_VALIDATION = 2,
  INDIST_ERR_PARSE = 3,
  INDIST_ERR_IO = 4,
  INDIST_ERR_EMPTY_LABEL_SET = 5,
  INDIST_ERR_NO_VALID_PAIRS = 6,
  INDIST_ERR_NO_BALANCED_THRESHOLD = 7,
  INDIST_ERR_SEPARATION = 8,
  INDIST_ERR_NOT_CONVERGED = 9,
  INDIST_ERR_UNDEFINED_VALUE = 10,
  INDIST_ERR_INVALID_HANDLE = 11,
  INDIST_ERR_UNKNOWN = 99
} indist_status;

typedef struct indist_raw indist_raw;
typedef struct indist_scored indist_scored;

typedef struct indist_dataset_spec {
  uint64_t n_pos;
  double m_p;
  double sigma_p;
  uint64_t n_diff;
  double m_n;
  double sigma_n;
  uint64_t n_easy;
  double m_easy;
  double sigma_easy;
  uint64_t seed;
} indist_dataset_spec;

typedef struct indist_model {
  double beta0;
  double beta1;
  int converged;
  int iterations;
} indist_model;

typedef struct indist_balance {
  double r;
  double b;
  double b_plus;
  double b_minus;
} indist_balance;

typedef struct indist_estimate {
  double value;
  double std_error;
  uint64_t n;
} indist_estimate;

typedef struct indist_threshold {
  double target;
  double r;
  double bracket_lo_r;
  double bracket_hi_r;
  double bracket_lo_b;
  double bracket_hi_b;
  double operating_r;
  int multi_crossing;
} indist_threshold;

typedef struct indist_eval_options {
  const double* targets; /* NULL: 0.4, 0.5, 0.6 */
  size_t n_targets;
  int has_threshold;
  double threshold;
  uint64_t mc_samples; /* 0 disables Monte Carlo fields */
  uint64_t seed;
} indist_eval_options;

INDIST_API const char* indist_status_string(indist_status status);
INDIST_API const char* indist_last_error(void);
INDIST_API void indist_string_free(char* s);

/* Synthetic data and raw datasets */
INDIST_API indist_status indist_grid_spec(char dataset, uint64_t master_seed, indist_dataset_spec* out);
INDIST_API indist_status indist_raw_generate(const indist_dataset_spec* spec, indist_raw** out);
INDIST_API indist_status indist_raw_load_csv(const char* path, indist_raw** out);
INDIST_API indist_status indist_raw_save_csv(const indist_raw* raw, const char* path);
INDIST_API indist_status indist_raw_size(const indist_raw* raw, size_t* n_records);
INDIST_API void indist_raw_destroy(indist_raw* raw);

/* Logistic scorer. max_iter <= 0 or tol <= 0 select the defaults (100, 1e-10). */
INDIST_API indist_status indist_fit_logistic(const indist_raw* raw, int max_iter, double tol, indist_model* out);
INDIST_API indist_status indist_score(const indist_raw* raw, const indist_model* model, indist_scored** out);

/* Scored datasets */
INDIST_API indist_status indist_scored_create(const double* pos, size_t n_pos, const double* neg, size_t n_neg,
                                              indist_scored** out);
INDIST_API indist_status indist_scored_load_csv(const char* path, indist_scored** out);
INDIST_API indist_status indist_scored_save_csv(const indist_scored* ds, const char* path);
INDIST_API indist_status indist_scored_counts(const indist_scored* ds, size_t* n_pos, size_t* n_neg);
INDIST_API void indist_scored_destroy(indist_scored* ds);

/* Metrics */
INDIST_API indist_status indist_auc_rank(const indist_scored* ds, double* out);
INDIST_API indist_status indist_auc_mc(const indist_scored* ds, uint64_t n_samples, uint64_t seed,
                                       indist_estimate* out);
INDIST_API indist_status indist_precision_at(const indist_scored* ds, double r, double* out);
INDIST_API indist_status indist_f1_at(const indist_scored* ds, double r, double* out);
INDIST_API indist_status indist_b_exact(const indist_scored* ds, double r, indist_balance* out);
INDIST_API indist_status indist_b_mc(const indist_scored* ds, double r, uint64_t n_samples, uint64_t seed,
                                     indist_estimate* out);
INDIST_API indist_status indist_b_limit(const indist_scored* ds, double* out);
INDIST_API indist_status indist_solve_threshold(const indist_scored* ds, double target, indist_threshold* out);
INDIST_API double indist_naive_threshold(const indist_model* model);

/* Reports and artifacts. opts may be NULL; model may be NULL. */
INDIST_API indist_status indist_report_json(const indist_scored* ds, const indist_model* model,
                                            const indist_eval_options* opts, char** json_out);
INDIST_API indist_status indist_write_curves(const indist_scored* ds, const char* out_dir);
INDIST_API indist_status indist_replicate(uint64_t master_seed, const char* out_dir,
                                          const indist_eval_options* opts, char** table_json_out);

#ifdef __cplusplus
}
#endif

#endif /* INDIST_INDIST_H */
