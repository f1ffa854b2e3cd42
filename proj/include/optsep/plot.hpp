// Copyright 2026 The optsep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Standalone SVG line charts of sweep results (total operations vs n).
// The .dat sidecar holds the plotted numbers; the SVG is for looking at.

#ifndef OPTSEP_PLOT_HPP
#define OPTSEP_PLOT_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "optsep/datagen.hpp"
#include "optsep/sweep.hpp"

namespace optsep {

struct PlotSeries {
  std::string name;
  std::string color;
  std::vector<double> y;
};

struct PlotData {
  std::vector<double> x;
  std::vector<PlotSeries> series;
  bool log_scale = false;
};

inline PlotData plot_data(const std::vector<SweepRow>& rows, bool log_scale) {
  if (rows.empty()) throw std::invalid_argument("nothing to plot");
  PlotData pd;
  pd.log_scale = log_scale;
  pd.series = {{"perceptron", "#d62728", {}}, {"optsep", "#1f77b4", {}}};
  auto tr = [log_scale](std::uint64_t v) {
    if (!log_scale) return static_cast<double>(v);
    if (v == 0) throw std::domain_error("cannot take the log of a zero count");
    return std::log(static_cast<double>(v));
  };
  for (const auto& r : rows) {
    pd.x.push_back(static_cast<double>(r.n));
    pd.series[0].y.push_back(tr(r.perceptron_ops));
    pd.series[1].y.push_back(tr(r.optsep_ops));
  }
  return pd;
}

inline std::string render_dat(const PlotData& pd) {
  std::ostringstream out;
  out << "# n";
  for (const auto& s : pd.series) out << ' ' << s.name;
  out << (pd.log_scale ? "  (natural log of total operations)\n" : "  (total operations)\n");
  for (std::size_t k = 0; k < pd.x.size(); ++k) {
    out << format_double(pd.x[k]);
    for (const auto& s : pd.series) out << ' ' << format_double(s.y[k]);
    out << '\n';
  }
  return out.str();
}

namespace detail {

inline std::string fmt_tick(double v) {
  char buf[32];
  if (v != 0.0 && (std::abs(v) >= 1e5 || std::abs(v) < 1e-2)) {
    std::snprintf(buf, sizeof(buf), "%.2e", v);
  } else {
    std::snprintf(buf, sizeof(buf), "%.4g", v);
  }
  return buf;
}

inline std::pair<double, double> padded_range(double lo, double hi) {
  if (hi == lo) {
    const double pad = lo == 0.0 ? 1.0 : std::abs(lo) * 0.1;
    return {lo - pad, hi + pad};
  }
  const double pad = (hi - lo) * 0.1;
  return {lo - pad, hi + pad};
}

}  // namespace detail

// SVG 1.1 chart, axes padded by 10% of the data range. Single-point series
// are drawn as markers only.
inline std::string render_svg(const PlotData& pd) {
  if (pd.x.empty()) throw std::invalid_argument("nothing to plot");
  constexpr double kW = 640, kH = 420, kLeft = 80, kRight = 20, kTop = 40, kBottom = 50;

  double ylo = INFINITY, yhi = -INFINITY;
  for (const auto& s : pd.series) {
    for (double v : s.y) {
      ylo = std::min(ylo, v);
      yhi = std::max(yhi, v);
    }
  }
  const auto [x0, x1] = detail::padded_range(*std::min_element(pd.x.begin(), pd.x.end()),
                                             *std::max_element(pd.x.begin(), pd.x.end()));
  const auto [y0, y1] = detail::padded_range(ylo, yhi);
  auto px = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * (kW - kLeft - kRight); };
  auto py = [&](double y) { return kH - kBottom - (y - y0) / (y1 - y0) * (kH - kTop - kBottom); };

  std::ostringstream o;
  o.setf(std::ios::fixed);
  o.precision(2);
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kW
    << "\" height=\"" << kH << "\" viewBox=\"0 0 " << kW << ' ' << kH << "\">\n"
    << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    << "<text x=\"" << kW / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       "font-size=\"15\">"
    << (pd.log_scale ? "log(total iteration count) vs n" : "total iteration count vs n")
    << "</text>\n";

  // axes
  o << "<g stroke=\"black\" stroke-width=\"1\">\n"
    << "<line x1=\"" << kLeft << "\" y1=\"" << kH - kBottom << "\" x2=\"" << kW - kRight
    << "\" y2=\"" << kH - kBottom << "\"/>\n"
    << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
    << kH - kBottom << "\"/>\n</g>\n";
  o << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (int k = 0; k <= 5; ++k) {
    const double yv = y0 + (y1 - y0) * k / 5.0;
    o << "<text x=\"" << kLeft - 6 << "\" y=\"" << py(yv) + 4 << "\" text-anchor=\"end\">"
      << detail::fmt_tick(yv) << "</text>\n";
    const double xv = x0 + (x1 - x0) * k / 5.0;
    o << "<text x=\"" << px(xv) << "\" y=\"" << kH - kBottom + 16
      << "\" text-anchor=\"middle\">" << detail::fmt_tick(xv) << "</text>\n";
  }
  o << "<text x=\"" << (kLeft + kW - kRight) / 2 << "\" y=\"" << kH - 10
    << "\" text-anchor=\"middle\">n</text>\n</g>\n";

  for (std::size_t s = 0; s < pd.series.size(); ++s) {
    const PlotSeries& ser = pd.series[s];
    if (ser.y.size() >= 2) {
      o << "<polyline fill=\"none\" stroke=\"" << ser.color << "\" stroke-width=\"2\" points=\"";
      for (std::size_t k = 0; k < ser.y.size(); ++k) {
        o << (k ? " " : "") << px(pd.x[k]) << ',' << py(ser.y[k]);
      }
      o << "\"/>\n";
    }
    for (std::size_t k = 0; k < ser.y.size(); ++k) {
      o << "<circle cx=\"" << px(pd.x[k]) << "\" cy=\"" << py(ser.y[k]) << "\" r=\"3\" fill=\""
        << ser.color << "\"/>\n";
    }
    o << "<text x=\"" << kLeft + 12 << "\" y=\"" << kTop + 14 + 16 * s
      << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" << ser.color << "\">"
      << ser.name << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace optsep

#endif  // OPTSEP_PLOT_HPP
