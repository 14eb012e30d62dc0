#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "indist/data.hpp"
#include "indist/report.hpp"

namespace indist {

struct DatasetRun {
  char name = 'a';
  DatasetSpec spec;
  RawDataset raw;
  LogisticModel model;
  ScoredDataset scored;
  IndistReport report;
};

/// generate -> fit -> score -> report for one grid dataset.
DatasetRun run_dataset(const NamedSpec& named, const ReportOptions& options = {});

/// Writes roc.csv, pr.csv, balance.csv and tradeoff.csv into dir.
void write_curves(const ScoredDataset& ds, const std::filesystem::path& dir);

struct ReplicationRow {
  char name = 'a';
  DatasetSpec spec;
  LogisticModel model;
  IndistReport report;
};

struct ReplicationTable {
  std::uint64_t master_seed = 0;
  std::vector<ReplicationRow> rows;  // a..i
};

/// Runs all nine grid datasets from one master seed. When out_dir is given
/// the intermediate artifacts are written under it:
///   raw/<d>.csv, scored/<d>.csv, reports/<d>.json, curves/<d>/*.csv,
///   replication.json, replication.csv.
/// A failing stage throws an Error whose message names the dataset and stage.
ReplicationTable replicate(std::uint64_t master_seed,
                           const std::optional<std::filesystem::path>& out_dir = std::nullopt,
                           const ReportOptions& options = {});

std::string replication_json(const ReplicationTable& table);
/// "dataset,auc,r_b,c_at_rb,c_at_r40,c_at_r60,f1_at_rb,b_neg_inf"; absent values empty.
std::string replication_csv(const ReplicationTable& table);

void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace indist
