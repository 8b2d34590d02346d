#pragma once
// Column-oriented numeric result tables with an ordered metadata block.
// Both output formats round-trip doubles losslessly; re-running a command
// with the parameters echoed in the metadata reproduces the bytes.

#include <cstddef>
#include <string>
#include <vector>

namespace qtherm {

// Shortest fixed policy that round-trips any finite double (%.17g).
// Infinities print as "inf"/"-inf"; JSON output maps them to null.
std::string format_sig17(double x);

class ResultTable {
 public:
  struct MetaEntry {
    std::string key;
    std::string text;  // set for string entries
    bool numeric = false;
    double number = 0.0;
  };

  void set_meta(const std::string& key, const std::string& value);
  void set_meta(const std::string& key, double value);
  void set_columns(std::vector<std::string> names);
  void add_row(std::vector<double> row);

  const std::vector<MetaEntry>& meta() const { return meta_; }
  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<double>>& rows() const { return rows_; }
  std::size_t num_rows() const { return rows_.size(); }

  // '#'-prefixed key=value metadata lines, a header row, then data rows.
  std::string to_csv() const;
  // {"meta": {...}, "columns": {"name": [values...]}} preserving order.
  std::string to_json() const;

 private:
  std::vector<MetaEntry> meta_;
  std::vector<std::string> columns_;
  std::vector<std::vector<double>> rows_;
};

}  // namespace qtherm
