// Command-line front end. Talks to the library only through indist.h.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "indist/indist.h"

namespace {

enum Exit { kOk = 0, kInternal = 1, kUsage = 2, kModel = 3 };

int exit_code(indist_status s) {
  switch (s) {
    case INDIST_OK: return kOk;
    case INDIST_ERR_INVALID_ARGUMENT:
    case INDIST_ERR_VALIDATION:
    case INDIST_ERR_PARSE: return kUsage;
    case INDIST_ERR_SEPARATION:
    case INDIST_ERR_NOT_CONVERGED: return kModel;
    default: return kInternal;
  }
}

// Thrown out of a subcommand to end the run with a given exit code.
struct Failure {
  int code;
};

void check(indist_status s, const std::string& context) {
  if (s == INDIST_OK) return;
  std::cerr << "indist: " << context << ": " << indist_status_string(s) << ": " << indist_last_error() << '\n';
  throw Failure{exit_code(s)};
}

struct RawDeleter {
  void operator()(indist_raw* p) const { indist_raw_destroy(p); }
};
struct ScoredDeleter {
  void operator()(indist_scored* p) const { indist_scored_destroy(p); }
};
struct StringDeleter {
  void operator()(char* p) const { indist_string_free(p); }
};
using RawPtr = std::unique_ptr<indist_raw, RawDeleter>;
using ScoredPtr = std::unique_ptr<indist_scored, ScoredDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

ScoredPtr load_scored(const std::string& path) {
  indist_scored* ds = nullptr;
  check(indist_scored_load_csv(path.c_str(), &ds), "reading " + path);
  return ScoredPtr(ds);
}

void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    std::cerr << "indist: cannot create " << dir << ": " << ec.message() << '\n';
    throw Failure{kInternal};
  }
}

struct Config {
  std::string dataset;
  std::optional<std::uint64_t> seed;
  std::string in;
  std::string out;
  std::optional<double> threshold;
  std::vector<double> targets{0.4, 0.5, 0.6};
  std::uint64_t mc_samples = 0;
  bool json = false;
};

indist_eval_options eval_options(const Config& cfg) {
  indist_eval_options o{};
  o.targets = cfg.targets.data();
  o.n_targets = cfg.targets.size();
  o.has_threshold = cfg.threshold.has_value() ? 1 : 0;
  o.threshold = cfg.threshold.value_or(0.0);
  o.mc_samples = cfg.mc_samples;
  o.seed = cfg.seed.value_or(0);
  return o;
}

void require_seed(const Config& cfg, const char* why) {
  if (!cfg.seed) {
    std::cerr << "indist: --seed is required " << why << '\n';
    throw Failure{kUsage};
  }
}

void validate_targets(const Config& cfg) {
  for (double t : cfg.targets) {
    if (!(t > 0.0 && t < 1.0)) {
      std::cerr << "indist: --targets values must lie strictly between 0 and 1\n";
      throw Failure{kUsage};
    }
  }
}

int cmd_generate(const Config& cfg) {
  require_seed(cfg, "for generate");
  std::string letters = cfg.dataset == "all" ? "abcdefghi" : cfg.dataset;
  if (letters.empty() || (cfg.dataset != "all" && (letters.size() != 1 || letters[0] < 'a' || letters[0] > 'i'))) {
    std::cerr << "indist: --dataset must be one of a..i or all\n";
    return kUsage;
  }
  ensure_dir(cfg.out);
  nlohmann::ordered_json files = nlohmann::ordered_json::array();
  for (char d : letters) {
    indist_dataset_spec spec;
    check(indist_grid_spec(d, *cfg.seed, &spec), std::string("dataset ") + d);
    indist_raw* raw = nullptr;
    check(indist_raw_generate(&spec, &raw), std::string("generating ") + d);
    RawPtr owned(raw);
    const auto path = (std::filesystem::path(cfg.out) / (std::string(1, d) + ".csv")).string();
    check(indist_raw_save_csv(raw, path.c_str()), "writing " + path);
    size_t n = 0;
    indist_raw_size(raw, &n);
    files.push_back({{"dataset", std::string(1, d)}, {"path", path}, {"records", n}});
  }
  if (cfg.json) std::cout << files.dump(2) << '\n';
  return kOk;
}

int cmd_score(const Config& cfg) {
  indist_raw* raw = nullptr;
  check(indist_raw_load_csv(cfg.in.c_str(), &raw), "reading " + cfg.in);
  RawPtr owned(raw);

  indist_model model{};
  const indist_status fit = indist_fit_logistic(raw, 0, 0.0, &model);
  if (fit != INDIST_OK) {
    nlohmann::ordered_json j;
    j["converged"] = false;
    j["reason"] = indist_status_string(fit);
    j["message"] = indist_last_error();
    std::cout << j.dump(2) << '\n';
    check(fit, "fitting " + cfg.in);
  }
  indist_scored* ds = nullptr;
  check(indist_score(raw, &model, &ds), "scoring");
  ScoredPtr scored(ds);
  if (!cfg.out.empty()) check(indist_scored_save_csv(ds, cfg.out.c_str()), "writing " + cfg.out);

  size_t p = 0, n = 0;
  indist_scored_counts(ds, &p, &n);
  nlohmann::ordered_json j;
  j["beta0"] = model.beta0;
  j["beta1"] = model.beta1;
  j["converged"] = model.converged != 0;
  j["iterations"] = model.iterations;
  j["p"] = p;
  j["n"] = n;
  std::cout << j.dump(2) << '\n';
  return kOk;
}

int cmd_eval(const Config& cfg) {
  validate_targets(cfg);
  if (cfg.mc_samples > 0) require_seed(cfg, "when --mc-samples is set");
  auto ds = load_scored(cfg.in);
  const auto opts = eval_options(cfg);
  char* json = nullptr;
  check(indist_report_json(ds.get(), nullptr, &opts, &json), "evaluating " + cfg.in);
  StringPtr owned(json);
  std::cout << json;
  if (!cfg.out.empty()) {
    std::FILE* f = std::fopen(cfg.out.c_str(), "wb");
    if (f == nullptr || std::fputs(json, f) < 0 || std::fclose(f) != 0) {
      std::cerr << "indist: cannot write " << cfg.out << '\n';
      return kInternal;
    }
  }
  return kOk;
}

int cmd_curves(const Config& cfg) {
  auto ds = load_scored(cfg.in);
  check(indist_write_curves(ds.get(), cfg.out.c_str()), "writing curves to " + cfg.out);
  if (cfg.json) {
    nlohmann::ordered_json j;
    for (const char* f : {"roc.csv", "pr.csv", "balance.csv", "tradeoff.csv"}) {
      j[f] = (std::filesystem::path(cfg.out) / f).string();
    }
    std::cout << j.dump(2) << '\n';
  }
  return kOk;
}

std::string cell(const nlohmann::ordered_json& v) {
  if (v.is_null()) return "-";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v.get<double>());
  return buf;
}

int cmd_replicate(const Config& cfg) {
  require_seed(cfg, "for replicate");
  validate_targets(cfg);
  ensure_dir(cfg.out);
  const auto opts = eval_options(cfg);
  char* json = nullptr;
  check(indist_replicate(*cfg.seed, cfg.out.c_str(), &opts, &json), "replicate");
  StringPtr owned(json);
  if (cfg.json) {
    std::cout << json;
    return kOk;
  }
  const auto table = nlohmann::ordered_json::parse(json);
  std::printf("%-7s %8s %8s %8s %8s %8s %8s %8s\n", "dataset", "A", "r_b", "C(r_b)", "C(r_40)", "C(r_60)",
              "F1(r_b)", "B(-inf)");
  for (const auto& row : table["datasets"]) {
    std::printf("%-7s %8s %8s %8s %8s %8s %8s %8s\n", row["dataset"].get<std::string>().c_str(),
                cell(row["auc"]).c_str(), cell(row["r_b"]).c_str(), cell(row["c_at_rb"]).c_str(),
                cell(row["c_at_r40"]).c_str(), cell(row["c_at_r60"]).c_str(), cell(row["f1_at_rb"]).c_str(),
                cell(row["b_neg_inf"]).c_str());
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classifier evaluation at the indistinguishability threshold"};
  app.require_subcommand(1);
  Config cfg;

  auto* gen = app.add_subcommand("generate", "Write synthetic raw datasets (x,y CSV)");
  gen->add_option("--dataset", cfg.dataset, "Dataset letter a..i, or all")->required();
  gen->add_option("--seed", cfg.seed, "Master seed")->required();
  gen->add_option("--out", cfg.out, "Output directory")->required();
  gen->add_flag("--json", cfg.json, "Print written files as JSON");

  auto* score = app.add_subcommand("score", "Fit the logistic scorer and write a scored CSV");
  score->add_option("--in", cfg.in, "Raw CSV (x,y)")->required();
  score->add_option("--out", cfg.out, "Scored CSV (score,label)");
  score->add_flag("--json", cfg.json, "Accepted for symmetry; output is always JSON");

  auto* eval = app.add_subcommand("eval", "Print the indistinguishability report as JSON");
  eval->add_option("--in", cfg.in, "Scored CSV (score,label)")->required();
  eval->add_option("--out", cfg.out, "Also write the report to this file");
  eval->add_option("--threshold", cfg.threshold, "Extra metrics at this score threshold");
  eval->add_option("--targets", cfg.targets, "Balance targets, comma separated")->delimiter(',');
  eval->add_option("--mc-samples", cfg.mc_samples, "Monte Carlo samples (0 = off)");
  eval->add_option("--seed", cfg.seed, "Seed for Monte Carlo estimates");
  eval->add_flag("--json", cfg.json, "Accepted for symmetry; output is always JSON");

  auto* curves = app.add_subcommand("curves", "Write roc/pr/balance/tradeoff CSVs");
  curves->add_option("--in", cfg.in, "Scored CSV (score,label)")->required();
  curves->add_option("--out", cfg.out, "Output directory")->required();
  curves->add_flag("--json", cfg.json, "Print written files as JSON");

  auto* rep = app.add_subcommand("replicate", "Run the nine-dataset grid end to end");
  rep->add_option("--seed", cfg.seed, "Master seed")->required();
  rep->add_option("--out", cfg.out, "Output directory")->required();
  rep->add_option("--targets", cfg.targets, "Balance targets, comma separated")->delimiter(',');
  rep->add_option("--mc-samples", cfg.mc_samples, "Monte Carlo samples per report (0 = off)");
  rep->add_flag("--json", cfg.json, "Print the table as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen) return cmd_generate(cfg);
    if (*score) return cmd_score(cfg);
    if (*eval) return cmd_eval(cfg);
    if (*curves) return cmd_curves(cfg);
    if (*rep) return cmd_replicate(cfg);
  } catch (const Failure& f) {
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "indist: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
