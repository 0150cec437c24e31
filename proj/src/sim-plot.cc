// src/sim-plot.cc

// Copyright 2026  The trialkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

// SVG rendering of a SimResult.  Output is plain text with fixed-precision
// coordinates, so the same result always renders to the same bytes.

#include <algorithm>
#include <cmath>

#include "trialkit/error.h"
#include "trialkit/simlab.h"
#include "trialkit/text-util.h"

namespace trialkit {

namespace {

constexpr double kWidth = 720.0;
constexpr double kPanelHeight = 260.0;
constexpr double kLeft = 80.0, kRight = 20.0, kTop = 36.0, kBottom = 44.0;

std::string Num(double v) { return FixedDecimal(v, 2); }

struct Panel {
  std::string id;
  std::string title;
  std::string y_label;
  MeanVariance SimAggregate::*field;
  std::string stroke;
};

void RenderPanel(std::string &svg, const Panel &p,
                 const std::vector<SimAggregate> &agg, double y_offset) {
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kPanelHeight - kTop - kBottom;
  const double x0 = kLeft, y0 = y_offset + kTop;

  double lo = HUGE_VAL, hi = -HUGE_VAL;
  for (const auto &a : agg) {
    const MeanVariance &mv = a.*(p.field);
    const double sd = std::sqrt(mv.variance);
    lo = std::min(lo, mv.mean - sd);
    hi = std::max(hi, mv.mean + sd);
  }
  if (!(hi > lo)) {
    lo -= 0.5;
    hi += 0.5;
  }
  const double pad = 0.05 * (hi - lo);
  lo -= pad;
  hi += pad;

  const double step_max = static_cast<double>(agg.back().step);
  auto sx = [&](double step) { return x0 + plot_w * step / step_max; };
  auto sy = [&](double v) { return y0 + plot_h * (hi - v) / (hi - lo); };

  svg += "<g class=\"chart\" id=\"chart-" + p.id + "\">\n";
  svg += "<text x=\"" + Num(kWidth / 2) + "\" y=\"" + Num(y_offset + 22) +
         "\" text-anchor=\"middle\" font-size=\"15\">" + p.title + "</text>\n";
  svg += "<rect x=\"" + Num(x0) + "\" y=\"" + Num(y0) + "\" width=\"" +
         Num(plot_w) + "\" height=\"" + Num(plot_h) +
         "\" fill=\"none\" stroke=\"#000\"/>\n";

  // mean +/- sd band
  svg += "<polygon class=\"band\" fill=\"" + p.stroke +
         "\" fill-opacity=\"0.2\" stroke=\"none\" points=\"";
  for (const auto &a : agg) {
    const MeanVariance &mv = a.*(p.field);
    svg += Num(sx(static_cast<double>(a.step))) + "," +
           Num(sy(mv.mean + std::sqrt(mv.variance))) + " ";
  }
  for (auto it = agg.rbegin(); it != agg.rend(); ++it) {
    const MeanVariance &mv = (*it).*(p.field);
    svg += Num(sx(static_cast<double>(it->step))) + "," +
           Num(sy(mv.mean - std::sqrt(mv.variance))) + " ";
  }
  svg += "\"/>\n";

  svg += "<polyline class=\"mean\" fill=\"none\" stroke=\"" + p.stroke +
         "\" stroke-width=\"1.5\" points=\"";
  for (const auto &a : agg)
    svg += Num(sx(static_cast<double>(a.step))) + "," +
           Num(sy((a.*(p.field)).mean)) + " ";
  svg += "\"/>\n";

  constexpr int kTicks = 5;
  for (int t = 0; t <= kTicks; ++t) {
    const double fx = static_cast<double>(t) / kTicks;
    const double step = step_max * fx;
    const double x = sx(step);
    svg += "<line x1=\"" + Num(x) + "\" y1=\"" + Num(y0 + plot_h) +
           "\" x2=\"" + Num(x) + "\" y2=\"" + Num(y0 + plot_h + 5) +
           "\" stroke=\"#000\"/>\n";
    svg += "<text x=\"" + Num(x) + "\" y=\"" + Num(y0 + plot_h + 18) +
           "\" text-anchor=\"middle\" font-size=\"11\">" +
           FixedDecimal(step, 0) + "</text>\n";
    const double v = lo + (hi - lo) * fx;
    const double y = sy(v);
    svg += "<line x1=\"" + Num(x0 - 5) + "\" y1=\"" + Num(y) + "\" x2=\"" +
           Num(x0) + "\" y2=\"" + Num(y) + "\" stroke=\"#000\"/>\n";
    svg += "<text x=\"" + Num(x0 - 8) + "\" y=\"" + Num(y + 4) +
           "\" text-anchor=\"end\" font-size=\"11\">" + FixedDecimal(v, 4) +
           "</text>\n";
  }
  svg += "<text class=\"xlabel\" x=\"" + Num(x0 + plot_w / 2) + "\" y=\"" +
         Num(y0 + plot_h + 36) +
         "\" text-anchor=\"middle\" font-size=\"12\">step (easy-trial "
         "batches added)</text>\n";
  svg += "<text class=\"ylabel\" x=\"16\" y=\"" + Num(y0 + plot_h / 2) +
         "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 "
         "16 " +
         Num(y0 + plot_h / 2) + ")\">" + p.y_label + "</text>\n";
  svg += "</g>\n";
}

}  // namespace

std::string ExportSimPlotSvg(const SimResult &result) {
  if (result.aggregate.size() < 2)
    throw Error(ErrorKind::kTooFewSteps,
                "plot needs at least one injection step (steps >= 1)");
  const Panel panels[] = {
      {"eer_sys1", "EER of System I", "eer_sys1 (mean \xC2\xB1 sd)",
       &SimAggregate::eer_sys1, "#1f77b4"},
      {"eer_sys2", "EER of System II", "eer_sys2 (mean \xC2\xB1 sd)",
       &SimAggregate::eer_sys2, "#d62728"},
      {"rel_reduction", "Relative EER reduction, System I to System II",
       "rel_reduction (mean \xC2\xB1 sd)", &SimAggregate::rel_reduction,
       "#2ca02c"}};
  const double height = kPanelHeight * 3;
  std::string svg =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
      Num(kWidth) + "\" height=\"" + Num(height) + "\" viewBox=\"0 0 " +
      Num(kWidth) + " " + Num(height) + "\" font-family=\"sans-serif\">\n";
  svg += "<desc>mode=" + std::string(InjectionModeName(result.config.mode)) +
         " batch_size=" + std::to_string(result.config.batch_size) +
         " steps=" + std::to_string(result.config.steps) +
         " repeats=" + std::to_string(result.config.repeats) +
         " seed=" + std::to_string(result.config.seed) + "</desc>\n";
  for (int i = 0; i < 3; ++i)
    RenderPanel(svg, panels[i], result.aggregate, kPanelHeight * i);
  svg += "</svg>\n";
  return svg;
}

}  // namespace trialkit
