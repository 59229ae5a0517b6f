// Copyright 2026 The QWB Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qwb/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ostream.h>

namespace qwb::svg {

namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 420;
constexpr double kLeft = 70;
constexpr double kRight = 150;
constexpr double kTop = 40;
constexpr double kBottom = 50;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo = INFINITY;
  double hi = -INFINITY;

  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void finish() {
    if (lo > hi) lo = 0, hi = 1;
    if (lo == hi) lo -= 0.5, hi += 0.5;
  }
};

void header(std::ostream& out, const std::string& title) {
  fmt::print(out,
             "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" "
             "viewBox=\"0 0 {0} {1}\" font-family=\"sans-serif\" font-size=\"12\">\n",
             kWidth, kHeight);
  fmt::print(out, "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
  fmt::print(out, "<text x=\"{}\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">{}</text>\n",
             kWidth / 2, escape(title));
}

void axes(std::ostream& out, const Range& xr, const Range& yr, const std::string& xl,
          const std::string& yl, bool log_y) {
  const double x0 = kLeft, x1 = kWidth - kRight, y0 = kHeight - kBottom, y1 = kTop;
  fmt::print(out, "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\"/>\n",
             x0, y1, x1 - x0, y0 - y1);
  for (int k = 0; k <= 4; ++k) {
    const double t = k / 4.0;
    const double xv = xr.lo + t * (xr.hi - xr.lo);
    const double yv = yr.lo + t * (yr.hi - yr.lo);
    const double px = x0 + t * (x1 - x0);
    const double py = y0 - t * (y0 - y1);
    fmt::print(out, "<text x=\"{:.1f}\" y=\"{}\" text-anchor=\"middle\">{:.3g}</text>\n", px, y0 + 16, xv);
    fmt::print(out, "<text x=\"{}\" y=\"{:.1f}\" text-anchor=\"end\">{:.3g}</text>\n", x0 - 4, py + 4,
               log_y ? std::pow(10.0, yv) : yv);
  }
  fmt::print(out, "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n", (x0 + x1) / 2,
             kHeight - 12, escape(xl));
  fmt::print(out,
             "<text x=\"16\" y=\"{0}\" text-anchor=\"middle\" transform=\"rotate(-90 16 {0})\">{1}</text>\n",
             (y0 + y1) / 2, escape(yl));
}

template <class Fn>
void save(const std::string& path, Fn&& write) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error(fmt::format("cannot write {}", path));
  write(f);
  if (!f) throw std::runtime_error(fmt::format("error writing {}", path));
}

}  // namespace

void write_xy(std::ostream& out, const XYPlot& plot) {
  const auto ty = [&](double v) { return plot.log_y ? (v > 0 ? std::log10(v) : NAN) : v; };
  Range xr, yr;
  for (const auto& s : plot.series) {
    for (double v : s.x) xr.add(v);
    for (double v : s.y) yr.add(ty(v));
  }
  xr.finish();
  yr.finish();
  const double x0 = kLeft, x1 = kWidth - kRight, y0 = kHeight - kBottom, y1 = kTop;
  const auto px = [&](double v) { return x0 + (v - xr.lo) / (xr.hi - xr.lo) * (x1 - x0); };
  const auto py = [&](double v) { return y0 - (ty(v) - yr.lo) / (yr.hi - yr.lo) * (y0 - y1); };

  header(out, plot.title);
  axes(out, xr, yr, plot.x_label, plot.y_label, plot.log_y);
  for (std::size_t k = 0; k < plot.series.size(); ++k) {
    const Series& s = plot.series[k];
    const char* color = kPalette[k % std::size(kPalette)];
    const std::size_t m = std::min(s.x.size(), s.y.size());
    if (s.lines && m > 1) {
      fmt::print(out, "<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\" points=\"", color);
      for (std::size_t i = 0; i < m; ++i)
        if (std::isfinite(py(s.y[i]))) fmt::print(out, "{:.2f},{:.2f} ", px(s.x[i]), py(s.y[i]));
      fmt::print(out, "\"/>\n");
    }
    if (s.markers) {
      for (std::size_t i = 0; i < m; ++i)
        if (std::isfinite(py(s.y[i])))
          fmt::print(out, "<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"2.5\" fill=\"{}\"/>\n", px(s.x[i]),
                     py(s.y[i]), color);
    }
    const double ly = kTop + 14 + 18.0 * static_cast<double>(k);
    fmt::print(out, "<rect x=\"{}\" y=\"{}\" width=\"12\" height=\"12\" fill=\"{}\"/>\n", x1 + 12,
               ly - 10, color);
    fmt::print(out, "<text x=\"{}\" y=\"{}\">{}</text>\n", x1 + 30, ly, escape(s.label));
  }
  fmt::print(out, "</svg>\n");
}

void write_heatmap(std::ostream& out, const Heatmap& map) {
  Range xr, yr, vr;
  for (double v : map.xs) xr.add(v);
  for (double v : map.ys) yr.add(v);
  for (double v : map.values) vr.add(v);
  xr.finish();
  yr.finish();
  vr.finish();
  const double x0 = kLeft, x1 = kWidth - kRight, y0 = kHeight - kBottom, y1 = kTop;
  const std::size_t nc = map.xs.size(), nr = map.ys.size();

  header(out, map.title);
  if (nc > 0 && nr > 0 && map.values.size() >= nc * nr) {
    const double cw = (x1 - x0) / static_cast<double>(nc);
    const double ch = (y0 - y1) / static_cast<double>(nr);
    for (std::size_t r = 0; r < nr; ++r) {
      for (std::size_t c = 0; c < nc; ++c) {
        // blue (low) to yellow (high)
        const double t = (map.values[r * nc + c] - vr.lo) / (vr.hi - vr.lo);
        const int red = static_cast<int>(std::lround(40 + 215 * t));
        const int green = static_cast<int>(std::lround(40 + 190 * t));
        const int blue = static_cast<int>(std::lround(160 * (1 - t)));
        fmt::print(out,
                   "<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" "
                   "fill=\"#{:02x}{:02x}{:02x}\"/>\n",
                   x0 + cw * static_cast<double>(c), y0 - ch * static_cast<double>(r + 1), cw + 0.05,
                   ch + 0.05, red, green, blue);
      }
    }
  }
  axes(out, xr, yr, map.x_label, map.y_label, false);
  fmt::print(out, "<text x=\"{}\" y=\"{}\">min {:.4g}</text>\n", x1 + 12, kTop + 14, vr.lo);
  fmt::print(out, "<text x=\"{}\" y=\"{}\">max {:.4g}</text>\n", x1 + 12, kTop + 32, vr.hi);
  fmt::print(out, "</svg>\n");
}

void save_xy(const std::string& path, const XYPlot& plot) {
  save(path, [&](std::ostream& o) { write_xy(o, plot); });
}

void save_heatmap(const std::string& path, const Heatmap& map) {
  save(path, [&](std::ostream& o) { write_heatmap(o, map); });
}

}  // namespace qwb::svg
