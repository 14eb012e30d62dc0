#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "indist/data.hpp"
#include "indist/error.hpp"
#include "indist/pipeline.hpp"

namespace indist {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ',') {
      out.push_back(trim(line.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

std::string at_line(std::size_t line) { return "line " + std::to_string(line) + ": "; }

double parse_real(std::string_view field, std::size_t line, std::string_view column) {
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
    throw Error(ErrorCode::Parse,
                at_line(line) + "column '" + std::string(column) + "' is not a number: '" + std::string(field) + "'");
  }
  return value;
}

Label parse_label(std::string_view field, std::size_t line, std::string_view column) {
  const double v = parse_real(field, line, column);
  if (v == 1.0) return Label::Positive;
  if (v == -1.0) return Label::Negative;
  throw Error(ErrorCode::Validation,
              at_line(line) + "label must be -1 or 1, got '" + std::string(field) + "'");
}

// Calls on_row(line_no, value_field, label_field) for every data row.
template <class OnRow>
void read_two_column(const std::string& text, std::string_view value_col, std::string_view label_col,
                     OnRow&& on_row) {
  std::istringstream in(text);
  std::string raw_line;
  std::size_t line_no = 0;
  std::size_t value_idx = 0, label_idx = 0, n_cols = 0;
  bool have_header = false;
  while (std::getline(in, raw_line)) {
    ++line_no;
    std::string_view line = trim(raw_line);
    if (line_no == 1 && line.size() >= 3 && line.substr(0, 3) == "\xEF\xBB\xBF") line.remove_prefix(3);
    if (line.empty()) continue;
    const auto fields = split(line);
    if (!have_header) {
      bool found_value = false, found_label = false;
      for (std::size_t i = 0; i < fields.size(); ++i) {
        if (fields[i] == value_col) value_idx = i, found_value = true;
        if (fields[i] == label_col) label_idx = i, found_label = true;
      }
      if (!found_value || !found_label) {
        throw Error(ErrorCode::Parse, "missing columns: header must contain '" + std::string(value_col) +
                                          "' and '" + std::string(label_col) + "'");
      }
      n_cols = fields.size();
      have_header = true;
      continue;
    }
    if (fields.size() != n_cols) {
      throw Error(ErrorCode::Parse, at_line(line_no) + "expected " + std::to_string(n_cols) + " fields, got " +
                                        std::to_string(fields.size()));
    }
    on_row(line_no, fields[value_idx], fields[label_idx]);
  }
  if (!have_header) throw Error(ErrorCode::Parse, "missing columns: file is empty");
}

}  // namespace

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

RawDataset parse_raw_csv(const std::string& text) {
  std::vector<Record> records;
  read_two_column(text, "x", "y", [&](std::size_t line, std::string_view xf, std::string_view yf) {
    const double x = parse_real(xf, line, "x");
    if (!std::isfinite(x)) throw Error(ErrorCode::Validation, at_line(line) + "x is not finite");
    records.push_back({x, parse_label(yf, line, "y")});
  });
  return RawDataset(std::move(records));
}

ScoredDataset parse_scored_csv(const std::string& text) {
  std::vector<double> pos, neg;
  read_two_column(text, "score", "label", [&](std::size_t line, std::string_view sf, std::string_view lf) {
    const double s = parse_real(sf, line, "score");
    if (!std::isfinite(s)) throw Error(ErrorCode::Validation, at_line(line) + "score is not finite");
    (parse_label(lf, line, "label") == Label::Positive ? pos : neg).push_back(s);
  });
  if (pos.empty() || neg.empty()) {
    throw Error(ErrorCode::Validation, std::string(pos.empty() ? "positive" : "negative") + " class is empty");
  }
  return ScoredDataset(std::move(pos), std::move(neg));
}

std::string format_raw_csv(const RawDataset& data) {
  std::string out = "x,y\n";
  for (const auto& rec : data.records()) {
    out += format_double(rec.x);
    out += rec.y == Label::Positive ? ",1\n" : ",-1\n";
  }
  return out;
}

std::string format_scored_csv(const ScoredDataset& data) {
  std::string out = "score,label\n";
  for (double s : data.positives()) out += format_double(s) + ",1\n";
  for (double s : data.negatives()) out += format_double(s) + ",-1\n";
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot open '" + path.string() + "' for writing");
  out << text;
  if (!out.flush()) throw Error(ErrorCode::Io, "write to '" + path.string() + "' failed");
}

RawDataset load_raw_csv(const std::filesystem::path& path) { return parse_raw_csv(read_text_file(path)); }
void save_raw_csv(const RawDataset& data, const std::filesystem::path& path) {
  write_text_file(path, format_raw_csv(data));
}
ScoredDataset load_scored_csv(const std::filesystem::path& path) { return parse_scored_csv(read_text_file(path)); }
void save_scored_csv(const ScoredDataset& data, const std::filesystem::path& path) {
  write_text_file(path, format_scored_csv(data));
}

}  // namespace indist
