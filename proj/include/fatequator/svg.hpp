#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

namespace fatequator {

// Minimal static SVG line charts, written directly so plots carry no
// dependency and no run-varying content (no timestamps); identical input
// renders identical bytes.

struct SvgSeries {
    std::string label;
    std::string color;
    std::vector<std::pair<double, double>> points;
};

struct SvgChart {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<SvgSeries> series;
    double y_min = 0.0;
    double y_max = 1.0;
};

inline constexpr const char* kSvgPalette[6] = {"#1f77b4", "#d62728", "#2ca02c",
                                               "#9467bd", "#ff7f0e", "#8c564b"};

inline std::string render_line_chart(const SvgChart& chart) {
    constexpr double width = 720.0, height = 480.0;
    constexpr double left = 70.0, right = 20.0, top = 40.0, bottom = 50.0;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    double x_min = 0.0, x_max = 1.0;
    bool have_x = false;
    for (const auto& s : chart.series) {
        for (const auto& [x, y] : s.points) {
            if (!have_x) {
                x_min = x_max = x;
                have_x = true;
            } else {
                x_min = std::min(x_min, x);
                x_max = std::max(x_max, x);
            }
        }
    }
    if (!have_x || x_max == x_min) x_max = x_min + 1.0;
    const double y_min = chart.y_min;
    const double y_max = chart.y_max == chart.y_min ? chart.y_min + 1.0 : chart.y_max;

    const auto px = [&](double x) { return left + (x - x_min) / (x_max - x_min) * plot_w; };
    const auto py = [&](double y) { return top + (y_max - y) / (y_max - y_min) * plot_h; };
    const auto fmt = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6g", v);
        return std::string(buf);
    };
    const auto fmt_px = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", v);
        return std::string(buf);
    };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" height=\"480\" "
           "viewBox=\"0 0 720 480\">\n";
    out += "<rect width=\"720\" height=\"480\" fill=\"white\"/>\n";
    out += "<text x=\"360\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"16\">" + chart.title + "</text>\n";

    // axes with 5 gridded divisions
    for (int i = 0; i <= 5; ++i) {
        const double fx = x_min + (x_max - x_min) * i / 5.0;
        const double fy = y_min + (y_max - y_min) * i / 5.0;
        const std::string gx = fmt_px(px(fx));
        const std::string gy = fmt_px(py(fy));
        out += "<line x1=\"" + gx + "\" y1=\"" + fmt_px(top) + "\" x2=\"" + gx + "\" y2=\"" +
               fmt_px(top + plot_h) + "\" stroke=\"#dddddd\"/>\n";
        out += "<line x1=\"" + fmt_px(left) + "\" y1=\"" + gy + "\" x2=\"" +
               fmt_px(left + plot_w) + "\" y2=\"" + gy + "\" stroke=\"#dddddd\"/>\n";
        out += "<text x=\"" + gx + "\" y=\"" + fmt_px(height - bottom + 18.0) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" + fmt(fx) +
               "</text>\n";
        out += "<text x=\"" + fmt_px(left - 8.0) + "\" y=\"" + fmt_px(py(fy) + 4.0) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + fmt(fy) +
               "</text>\n";
    }
    out += "<rect x=\"" + fmt_px(left) + "\" y=\"" + fmt_px(top) + "\" width=\"" + fmt_px(plot_w) +
           "\" height=\"" + fmt_px(plot_h) + "\" fill=\"none\" stroke=\"black\"/>\n";
    out += "<text x=\"" + fmt_px(left + plot_w / 2.0) + "\" y=\"" + fmt_px(height - 10.0) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" +
           chart.x_label + "</text>\n";
    out += "<text x=\"18\" y=\"" + fmt_px(top + plot_h / 2.0) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
           "transform=\"rotate(-90 18 " + fmt_px(top + plot_h / 2.0) + ")\">" + chart.y_label +
           "</text>\n";

    for (const auto& s : chart.series) {
        out += "<polyline fill=\"none\" stroke=\"" + s.color + "\" stroke-width=\"1.5\" points=\"";
        for (const auto& [x, y] : s.points) {
            const double yc = std::clamp(y, y_min, y_max);
            out += fmt_px(px(x)) + "," + fmt_px(py(yc)) + " ";
        }
        out += "\"/>\n";
    }

    double legend_y = top + 16.0;
    for (const auto& s : chart.series) {
        out += "<line x1=\"" + fmt_px(left + 12.0) + "\" y1=\"" + fmt_px(legend_y - 4.0) +
               "\" x2=\"" + fmt_px(left + 36.0) + "\" y2=\"" + fmt_px(legend_y - 4.0) +
               "\" stroke=\"" + s.color + "\" stroke-width=\"2\"/>\n";
        out += "<text x=\"" + fmt_px(left + 42.0) + "\" y=\"" + fmt_px(legend_y) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" + s.label + "</text>\n";
        legend_y += 16.0;
    }
    out += "</svg>\n";
    return out;
}

}  // namespace fatequator
