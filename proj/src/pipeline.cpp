#include "indist/pipeline.hpp"

#include <string>
#include <system_error>

#include <json.hpp>

#include "indist/balance.hpp"
#include "indist/error.hpp"
#include "indist/metrics.hpp"

namespace indist {

namespace {

using Json = nlohmann::ordered_json;

template <class F>
auto stage(char dataset, const char* name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.code(), std::string("dataset ") + dataset + ": stage " + name + ": " + e.what());
  }
}

void make_dirs(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot create directory '" + dir.string() + "': " + ec.message());
}

void put(Json& j, const std::string& key, const Quantity& q) {
  if (q.present()) {
    j[key] = *q.value;
  } else {
    j[key] = nullptr;
    j[key + "_reason"] = q.reason;
  }
}

std::string csv_field(const Quantity& q) { return q.present() ? format_double(*q.value) : std::string(); }

}  // namespace

DatasetRun run_dataset(const NamedSpec& named, const ReportOptions& options) {
  const char d = named.name;
  auto raw = stage(d, "generate", [&] { return generate_synthetic(named.spec); });
  const auto model = stage(d, "score", [&] { return fit_logistic_1d(raw); });
  auto scored = stage(d, "score", [&] { return score_dataset(model, raw); });
  auto report = stage(d, "eval", [&] { return indist_report(scored, &model, options); });
  return {d, named.spec, std::move(raw), model, std::move(scored), std::move(report)};
}

void write_curves(const ScoredDataset& ds, const std::filesystem::path& dir) {
  make_dirs(dir);
  const auto balance = balance_curve(ds);
  write_text_file(dir / "roc.csv", format_curve_csv(roc_curve(ds)));
  write_text_file(dir / "pr.csv", format_curve_csv(pr_curve(ds)));
  write_text_file(dir / "balance.csv", format_balance_csv(balance));
  write_text_file(dir / "tradeoff.csv", format_tradeoff_csv(ds, balance));
}

ReplicationTable replicate(std::uint64_t master_seed, const std::optional<std::filesystem::path>& out_dir,
                           const ReportOptions& options) {
  ReplicationTable table;
  table.master_seed = master_seed;
  if (out_dir) {
    for (const char* sub : {"raw", "scored", "reports", "curves"}) make_dirs(*out_dir / sub);
  }
  for (const auto& named : benchmark_grid(master_seed)) {
    auto run = run_dataset(named, options);
    if (out_dir) {
      const std::string file = std::string(1, named.name);
      stage(named.name, "generate", [&] { save_raw_csv(run.raw, *out_dir / "raw" / (file + ".csv")); });
      stage(named.name, "score", [&] { save_scored_csv(run.scored, *out_dir / "scored" / (file + ".csv")); });
      stage(named.name, "eval",
            [&] { write_text_file(*out_dir / "reports" / (file + ".json"), report_to_json(run.report)); });
      stage(named.name, "curves", [&] { write_curves(run.scored, *out_dir / "curves" / file); });
    }
    table.rows.push_back({named.name, named.spec, run.model, std::move(run.report)});
  }
  if (out_dir) {
    write_text_file(*out_dir / "replication.json", replication_json(table));
    write_text_file(*out_dir / "replication.csv", replication_csv(table));
  }
  return table;
}

std::string replication_json(const ReplicationTable& table) {
  Json rows = Json::array();
  for (const auto& row : table.rows) {
    const auto& rep = row.report;
    Json j;
    j["dataset"] = std::string(1, row.name);
    j["m_n"] = row.spec.m_n;
    j["n_easy"] = row.spec.n_easy;
    j["seed"] = row.spec.seed;
    j["beta0"] = row.model.beta0;
    j["beta1"] = row.model.beta1;
    j["auc"] = rep.A;
    put(j, "r_b", rep.rb.r);
    put(j, "c_at_rb", rep.rb.precision);
    put(j, "c_at_r40", rep.r40.precision);
    put(j, "c_at_r60", rep.r60.precision);
    put(j, "f1_at_rb", rep.F1_at_rb);
    j["b_neg_inf"] = rep.B_neg_inf;
    rows.push_back(std::move(j));
  }
  Json out;
  out["master_seed"] = table.master_seed;
  out["datasets"] = std::move(rows);
  return out.dump(2) + "\n";
}

std::string replication_csv(const ReplicationTable& table) {
  std::string out = "dataset,auc,r_b,c_at_rb,c_at_r40,c_at_r60,f1_at_rb,b_neg_inf\n";
  for (const auto& row : table.rows) {
    const auto& rep = row.report;
    out += std::string(1, row.name) + ',' + format_double(rep.A) + ',' + csv_field(rep.rb.r) + ',' +
           csv_field(rep.rb.precision) + ',' + csv_field(rep.r40.precision) + ',' + csv_field(rep.r60.precision) +
           ',' + csv_field(rep.F1_at_rb) + ',' + format_double(rep.B_neg_inf) + '\n';
  }
  return out;
}

}  // namespace indist
