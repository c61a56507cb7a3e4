#include "resex/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace resex {
namespace svg {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                          "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

struct Axis {
  double lo = 0.0, hi = 1.0;
  bool log = false;
  double map(double v, double px_lo, double px_hi) const {
    double a = lo, b = hi, x = v;
    if (log) {
      a = std::log10(a);
      b = std::log10(b);
      x = std::log10(x);
    }
    if (b == a) return 0.5 * (px_lo + px_hi);
    return px_lo + (x - a) / (b - a) * (px_hi - px_lo);
  }
};

Axis fit_axis(const std::vector<double>& vals, bool log) {
  Axis ax;
  ax.log = log;
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (double v : vals) {
    if (log && v <= 0.0) continue;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (!std::isfinite(lo)) {
    lo = log ? 1e-12 : 0.0;
    hi = 1.0;
  }
  if (lo == hi) {
    lo = log ? lo / 2 : lo - 1;
    hi = log ? hi * 2 : hi + 1;
  }
  if (!log) {
    const double pad = 0.05 * (hi - lo);
    lo -= pad;
    hi += pad;
  }
  ax.lo = lo;
  ax.hi = hi;
  return ax;
}

std::vector<double> ticks(const Axis& ax, int want = 6) {
  std::vector<double> out;
  if (ax.log) {
    const int e0 = static_cast<int>(std::ceil(std::log10(ax.lo) - 1e-9));
    const int e1 = static_cast<int>(std::floor(std::log10(ax.hi) + 1e-9));
    for (int e = e0; e <= e1; ++e) out.push_back(std::pow(10.0, e));
    return out;
  }
  const double span = ax.hi - ax.lo;
  const double raw = span / want;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0})
    if (raw <= m * mag) {
      step = m * mag;
      break;
    }
  const double first = std::ceil(ax.lo / step) * step;
  for (double v = first; v <= ax.hi + 1e-9 * span; v += step) out.push_back(v);
  return out;
}

}  // namespace

void LinePlot::from_table(const Table& t, size_t x_col, const std::vector<size_t>& y_cols) {
  for (size_t yc : y_cols) {
    Series s;
    s.label = t.columns.at(yc);
    for (const auto& row : t.rows) {
      s.x.push_back(row.at(x_col));
      s.y.push_back(row.at(yc));
    }
    series.push_back(std::move(s));
  }
  if (xlabel.empty() && !t.columns.empty()) xlabel = t.columns.at(x_col);
}

std::string LinePlot::render() const {
  const double ml = 70, mr = 20, mt = 34, mb = 48;
  const double px0 = ml, px1 = width - mr, py0 = height - mb, py1 = mt;
  std::vector<double> xs, ys;
  for (const auto& s : series) {
    xs.insert(xs.end(), s.x.begin(), s.x.end());
    ys.insert(ys.end(), s.y.begin(), s.y.end());
  }
  for (const auto& [x, lbl] : vlines) xs.push_back(x);
  const Axis ax = fit_axis(xs, xlog), ay = fit_axis(ys, ylog);

  std::string o;
  o += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
       "\" height=\"" + std::to_string(height) + "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  o += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!title.empty())
    o += "<text x=\"" + num(width / 2.0) + "\" y=\"18\" text-anchor=\"middle\" font-size=\"13\">" +
         title + "</text>\n";
  // frame
  o += "<rect x=\"" + num(px0) + "\" y=\"" + num(py1) + "\" width=\"" + num(px1 - px0) +
       "\" height=\"" + num(py0 - py1) + "\" fill=\"none\" stroke=\"black\"/>\n";
  for (double tx : ticks(ax)) {
    const double px = ax.map(tx, px0, px1);
    o += "<line x1=\"" + num(px) + "\" y1=\"" + num(py0) + "\" x2=\"" + num(px) + "\" y2=\"" +
         num(py0 + 4) + "\" stroke=\"black\"/>\n";
    o += "<text x=\"" + num(px) + "\" y=\"" + num(py0 + 16) + "\" text-anchor=\"middle\">" +
         num(tx) + "</text>\n";
  }
  for (double ty : ticks(ay)) {
    const double py = ay.map(ty, py0, py1);
    o += "<line x1=\"" + num(px0 - 4) + "\" y1=\"" + num(py) + "\" x2=\"" + num(px0) + "\" y2=\"" +
         num(py) + "\" stroke=\"black\"/>\n";
    o += "<text x=\"" + num(px0 - 6) + "\" y=\"" + num(py + 4) + "\" text-anchor=\"end\">" +
         num(ty) + "</text>\n";
  }
  if (!xlabel.empty())
    o += "<text x=\"" + num((px0 + px1) / 2) + "\" y=\"" + num(height - 10.0) +
         "\" text-anchor=\"middle\">" + xlabel + "</text>\n";
  if (!ylabel.empty())
    o += "<text x=\"16\" y=\"" + num((py0 + py1) / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
         num((py0 + py1) / 2) + ")\">" + ylabel + "</text>\n";
  for (const auto& [x, lbl] : vlines) {
    if (xlog && x <= 0) continue;
    const double px = ax.map(x, px0, px1);
    o += "<line x1=\"" + num(px) + "\" y1=\"" + num(py0) + "\" x2=\"" + num(px) + "\" y2=\"" +
         num(py1) + "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
    if (!lbl.empty())
      o += "<text x=\"" + num(px + 3) + "\" y=\"" + num(py1 + 12) + "\" fill=\"gray\">" + lbl +
           "</text>\n";
  }
  int ci = 0;
  for (const auto& s : series) {
    const char* color = kPalette[ci % 8];
    std::string pts;
    for (size_t i = 0; i < s.x.size(); ++i) {
      const double y = s.y[i];
      if (ylog && y <= 0) continue;
      if (xlog && s.x[i] <= 0) continue;
      pts += num(ax.map(s.x[i], px0, px1)) + "," + num(ay.map(y, py0, py1)) + " ";
    }
    o += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"1.5\"/>\n";
    o += "<text x=\"" + num(px1 - 8) + "\" y=\"" + num(py1 + 14 + 13 * ci) +
         "\" text-anchor=\"end\" fill=\"" + color + "\">" + s.label + "</text>\n";
    ++ci;
  }
  o += "</svg>\n";
  return o;
}

std::string MatrixPlot::render() const {
  const int n = static_cast<int>(values.size());
  const int ml = 46, mt = 46;
  const int w = ml + n * cell + 10, h = mt + n * cell + 10;
  double vmax = 0.0;
  for (const auto& row : values)
    for (double v : row) vmax = std::max(vmax, std::abs(v));
  if (vmax == 0.0) vmax = 1.0;
  std::string o;
  o += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(w) + "\" height=\"" +
       std::to_string(h) + "\" font-family=\"sans-serif\" font-size=\"8\">\n";
  o += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!title.empty()) o += "<text x=\"6\" y=\"14\" font-size=\"12\">" + title + "</text>\n";
  for (int i = 0; i < n; ++i) {
    const std::string lab = i < static_cast<int>(labels.size()) ? labels[i] : std::to_string(i);
    o += "<text x=\"" + num(ml - 4) + "\" y=\"" + num(mt + i * cell + cell * 0.75) +
         "\" text-anchor=\"end\">" + lab + "</text>\n";
    o += "<text x=\"" + num(ml + i * cell + cell / 2.0) + "\" y=\"" + num(mt - 4) +
         "\" text-anchor=\"middle\" transform=\"rotate(-60 " + num(ml + i * cell + cell / 2.0) +
         " " + num(mt - 4) + ")\">" + lab + "</text>\n";
  }
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < static_cast<int>(values[r].size()); ++c) {
      const double v = values[r][c];
      const double a = std::abs(v) / vmax;
      const char* color = v >= 0 ? "#d62728" : "#1f77b4";
      o += "<rect x=\"" + num(ml + c * cell) + "\" y=\"" + num(mt + r * cell) + "\" width=\"" +
           std::to_string(cell - 1) + "\" height=\"" + std::to_string(cell - 1) +
           "\" fill=\"" + color + "\" fill-opacity=\"" + num(a) + "\" stroke=\"#ddd\" stroke-width=\"0.4\"/>\n";
    }
  o += "</svg>\n";
  return o;
}

void write_svg(const std::string& content, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << content;
}

}  // namespace svg
}  // namespace resex
