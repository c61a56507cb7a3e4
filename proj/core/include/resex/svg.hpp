#pragma once

#include <string>
#include <vector>

#include "resex/csv.hpp"

// Minimal SVG emitters: line plots (linear/log axes, vertical markers) and
// signed bar-matrix plots. Rendering consumes only tabulated values; no
// computation happens here.

namespace resex {
namespace svg {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct LinePlot {
  std::string title, xlabel, ylabel;
  bool xlog = false, ylog = false;
  int width = 720, height = 480;
  std::vector<Series> series;
  std::vector<std::pair<double, std::string>> vlines;

  // convenience: pull series from table columns (x column index, y indexes)
  void from_table(const Table& t, size_t x_col, const std::vector<size_t>& y_cols);
  std::string render() const;
};

struct MatrixPlot {
  std::string title;
  std::vector<std::string> labels;       // row/column labels (square matrix)
  std::vector<std::vector<double>> values;
  int cell = 14;
  std::string render() const;
};

void write_svg(const std::string& content, const std::string& path);

}  // namespace svg
}  // namespace resex
