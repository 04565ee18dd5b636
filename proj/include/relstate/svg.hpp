// Copyright 2026 The relstate authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

namespace relstate {

/// One named line on a chart; ys pairs up with the shared x grid.
struct Series {
    std::string label;
    std::vector<double> ys;
};

/// Fixed-layout 640x400 line chart; coordinates derive only from the data,
/// so the same input always yields the same bytes.
std::string line_chart_svg(const std::string& title, const std::vector<double>& xs,
                           const std::vector<Series>& series);

/// Fixed-layout 640x400 bar chart with one labelled bar per value.
std::string bar_chart_svg(const std::string& title, const std::vector<std::string>& labels,
                          const std::vector<double>& values);

} // namespace relstate
