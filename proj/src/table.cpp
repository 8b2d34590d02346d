#include "qtherm/table.hpp"

#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace qtherm {

std::string format_sig17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void ResultTable::set_meta(const std::string& key, const std::string& value) {
  meta_.push_back(MetaEntry{key, value, false, 0.0});
}

void ResultTable::set_meta(const std::string& key, double value) {
  meta_.push_back(MetaEntry{key, {}, true, value});
}

void ResultTable::set_columns(std::vector<std::string> names) {
  if (!rows_.empty()) throw std::logic_error("ResultTable: columns fixed after first row");
  columns_ = std::move(names);
}

void ResultTable::add_row(std::vector<double> row) {
  if (row.size() != columns_.size())
    throw std::logic_error("ResultTable: row width does not match columns");
  rows_.push_back(std::move(row));
}

std::string ResultTable::to_csv() const {
  std::string out;
  for (const MetaEntry& e : meta_) {
    out += "# ";
    out += e.key;
    out += '=';
    out += e.numeric ? format_sig17(e.number) : e.text;
    out += '\n';
  }
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (i) out += ',';
    out += columns_[i];
  }
  out += '\n';
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_sig17(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string ResultTable::to_json() const {
  nlohmann::ordered_json j;
  j["meta"] = nlohmann::ordered_json::object();
  for (const MetaEntry& e : meta_) {
    if (e.numeric)
      j["meta"][e.key] = e.number;
    else
      j["meta"][e.key] = e.text;
  }
  j["columns"] = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& row : rows_) arr.push_back(row[i]);
    j["columns"][columns_[i]] = std::move(arr);
  }
  return j.dump(2) + "\n";
}

}  // namespace qtherm
