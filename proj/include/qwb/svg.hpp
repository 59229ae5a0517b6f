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

#pragma once

// Minimal static SVG output. Every plot written by the tools also has a CSV
// twin; these files are for looking at, not for parsing.

#include <iosfwd>
#include <string>
#include <vector>

namespace qwb::svg {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  bool lines = true;    // connect consecutive points
  bool markers = true;  // draw a dot per point
};

struct XYPlot {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<Series> series;
  bool log_y = false;  // non-positive values are skipped
};

void write_xy(std::ostream& out, const XYPlot& plot);

struct Heatmap {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<double> xs;      // columns
  std::vector<double> ys;      // rows
  std::vector<double> values;  // values[row * xs.size() + col]
};

void write_heatmap(std::ostream& out, const Heatmap& map);

/// Writes to `path`; throws std::runtime_error if the file cannot be opened.
void save_xy(const std::string& path, const XYPlot& plot);
void save_heatmap(const std::string& path, const Heatmap& map);

}  // namespace qwb::svg
