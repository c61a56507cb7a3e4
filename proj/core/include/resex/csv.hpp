#pragma once

#include <string>
#include <vector>

// Column-oriented tables written as CSV: header row with unit-carrying
// column names, 17 significant digits, '.' decimal separator, ',' field
// separator, LF line endings. Byte-identical across reruns.

namespace resex {

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add_row(std::initializer_list<double> values);
  void add_row(const std::vector<double>& values);
};

std::string format_g17(double v);
std::string to_csv(const Table& t);
void write_csv(const Table& t, const std::string& path);

// Flat records with string fields (gate reports, marker files).
struct RecordTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};
std::string to_csv(const RecordTable& t);
void write_csv(const RecordTable& t, const std::string& path);

}  // namespace resex
