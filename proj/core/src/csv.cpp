#include "resex/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace resex {

void Table::add_row(std::initializer_list<double> values) {
  add_row(std::vector<double>(values));
}

void Table::add_row(const std::vector<double>& values) {
  if (values.size() != columns.size())
    throw std::invalid_argument("Table: row width " + std::to_string(values.size()) +
                                " does not match " + std::to_string(columns.size()) + " columns");
  rows.push_back(values);
}

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string to_csv(const Table& t) {
  std::string out;
  for (size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out += ',';
    out += t.columns[i];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_g17(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_csv(const RecordTable& t) {
  std::string out;
  for (size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out += ',';
    out += t.columns[i];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += row[i];
    }
    out += '\n';
  }
  return out;
}

namespace {
void write_file(const std::string& content, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << content;
  if (!f) throw std::runtime_error("write to '" + path + "' failed");
}
}  // namespace

void write_csv(const Table& t, const std::string& path) { write_file(to_csv(t), path); }
void write_csv(const RecordTable& t, const std::string& path) { write_file(to_csv(t), path); }

}  // namespace resex
