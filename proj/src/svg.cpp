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

#include "relstate/svg.hpp"

#include <algorithm>
#include <cstddef>

#include "relstate/errors.hpp"
#include "relstate/format.hpp"

namespace relstate {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 400.0;
constexpr double kMarginLeft = 64.0;
constexpr double kMarginRight = 16.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 48.0;

const char* const kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string header(const std::string& title) {
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\" "
           "viewBox=\"0 0 640 400\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"640\" height=\"400\" fill=\"white\"/>\n";
    out += "<text x=\"320\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"16\">" +
           xml_escape(title) + "</text>\n";
    return out;
}

std::string axes_box() {
    return "<rect x=\"" + format_double(kMarginLeft) + "\" y=\"" + format_double(kMarginTop) +
           "\" width=\"" + format_double(kWidth - kMarginLeft - kMarginRight) + "\" height=\"" +
           format_double(kHeight - kMarginTop - kMarginBottom) +
           "\" fill=\"none\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
}

// Affine map from data range [lo, hi] onto a pixel span; a degenerate range
// is widened so single-point data still renders.
struct AxisScale {
    double lo;
    double hi;
    double pix_lo;
    double pix_hi;

    double map(double v) const {
        return pix_lo + (v - lo) / (hi - lo) * (pix_hi - pix_lo);
    }
};

AxisScale make_scale(double lo, double hi, double pix_lo, double pix_hi) {
    if (!(hi > lo)) {
        lo -= 0.5;
        hi += 0.5;
    }
    return AxisScale{lo, hi, pix_lo, pix_hi};
}

std::string ticks(const AxisScale& x, const AxisScale& y) {
    std::string out;
    for (int k = 0; k <= 4; ++k) {
        const double fx = x.lo + (x.hi - x.lo) * k / 4.0;
        const double px = x.map(fx);
        out += "<line x1=\"" + format_double(px) + "\" y1=\"" +
               format_double(kHeight - kMarginBottom) + "\" x2=\"" + format_double(px) +
               "\" y2=\"" + format_double(kHeight - kMarginBottom + 5.0) +
               "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
        out += "<text x=\"" + format_double(px) + "\" y=\"" +
               format_double(kHeight - kMarginBottom + 20.0) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
               format_double(fx) + "</text>\n";

        const double fy = y.lo + (y.hi - y.lo) * k / 4.0;
        const double py = y.map(fy);
        out += "<line x1=\"" + format_double(kMarginLeft - 5.0) + "\" y1=\"" +
               format_double(py) + "\" x2=\"" + format_double(kMarginLeft) + "\" y2=\"" +
               format_double(py) + "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
        out += "<text x=\"" + format_double(kMarginLeft - 9.0) + "\" y=\"" +
               format_double(py + 4.0) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
               format_double(fy) + "</text>\n";
    }
    return out;
}

} // namespace

std::string line_chart_svg(const std::string& title, const std::vector<double>& xs,
                           const std::vector<Series>& series) {
    if (xs.empty() || series.empty()) {
        throw RangeError("line chart: empty data");
    }
    double x_lo = xs.front();
    double x_hi = xs.front();
    for (double v : xs) {
        x_lo = std::min(x_lo, v);
        x_hi = std::max(x_hi, v);
    }
    double y_lo = 0.0;
    double y_hi = 1.0;
    for (const auto& s : series) {
        if (s.ys.size() != xs.size()) {
            throw DimMismatchError("line chart: series length does not match x grid");
        }
        for (double v : s.ys) {
            y_lo = std::min(y_lo, v);
            y_hi = std::max(y_hi, v);
        }
    }
    const AxisScale x = make_scale(x_lo, x_hi, kMarginLeft, kWidth - kMarginRight);
    const AxisScale y = make_scale(y_lo, y_hi, kHeight - kMarginBottom, kMarginTop);

    std::string out = header(title);
    out += axes_box();
    out += ticks(x, y);
    for (std::size_t si = 0; si < series.size(); ++si) {
        const char* color = kPalette[si % kPaletteSize];
        out += "<polyline fill=\"none\" stroke=\"";
        out += color;
        out += "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i > 0) {
                out += ' ';
            }
            out += format_double(x.map(xs[i])) + "," + format_double(y.map(series[si].ys[i]));
        }
        out += "\"/>\n";
        out += "<text x=\"" + format_double(kWidth - kMarginRight - 6.0) + "\" y=\"" +
               format_double(kMarginTop + 16.0 + 14.0 * static_cast<double>(si)) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\" fill=\"";
        out += color;
        out += "\">" + xml_escape(series[si].label) + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

std::string bar_chart_svg(const std::string& title, const std::vector<std::string>& labels,
                          const std::vector<double>& values) {
    if (values.empty() || labels.size() != values.size()) {
        throw DimMismatchError("bar chart: labels and values must pair up");
    }
    double y_hi = 1.0;
    for (double v : values) {
        y_hi = std::max(y_hi, v);
    }
    const AxisScale y = make_scale(0.0, y_hi, kHeight - kMarginBottom, kMarginTop);
    const double span = kWidth - kMarginLeft - kMarginRight;
    const double slot = span / static_cast<double>(values.size());
    const double bar_width = slot * 0.6;

    std::string out = header(title);
    out += axes_box();
    // y ticks only; bar labels replace the x axis.
    for (int k = 0; k <= 4; ++k) {
        const double fy = y_hi * k / 4.0;
        const double py = y.map(fy);
        out += "<line x1=\"" + format_double(kMarginLeft - 5.0) + "\" y1=\"" +
               format_double(py) + "\" x2=\"" + format_double(kMarginLeft) + "\" y2=\"" +
               format_double(py) + "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
        out += "<text x=\"" + format_double(kMarginLeft - 9.0) + "\" y=\"" +
               format_double(py + 4.0) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
               format_double(fy) + "</text>\n";
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double cx = kMarginLeft + slot * (static_cast<double>(i) + 0.5);
        const double top = y.map(values[i]);
        const double base = kHeight - kMarginBottom;
        out += "<rect x=\"" + format_double(cx - bar_width / 2.0) + "\" y=\"" +
               format_double(top) + "\" width=\"" + format_double(bar_width) + "\" height=\"" +
               format_double(base - top) + "\" fill=\"";
        out += kPalette[i % kPaletteSize];
        out += "\"/>\n";
        out += "<text x=\"" + format_double(cx) + "\" y=\"" + format_double(top - 4.0) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
               format_double(values[i]) + "</text>\n";
        out += "<text x=\"" + format_double(cx) + "\" y=\"" + format_double(base + 20.0) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
               xml_escape(labels[i]) + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

} // namespace relstate
