#include "gbmst/svg_plot.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <limits>

#include "gbmst/errors.hpp"

namespace gbmst {

namespace {

// Fixed palette; label ids cycle through it.
constexpr std::array<const char*, 12> kPalette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#aec7e8", "#ffbb78",
};

const char* color_for(int label) {
    if (label < 0) return "#444444";
    return kPalette[static_cast<std::size_t>(label) % kPalette.size()];
}

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

void write_svg_scatter(const std::string& path, const Dataset& dataset,
                       std::span<const int> labels, const GranularBallSet* balls,
                       const PlotOptions& options) {
    dataset.validate();
    if (dataset.dim != 2)
        throw DimensionMismatch("svg scatter plots need 2-d data");
    if (labels.size() != dataset.size()) throw LabelLengthMismatch();

    double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x;
    double hi_x = -lo_x, hi_y = -lo_x;
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        const auto p = dataset.point(i);
        lo_x = std::min(lo_x, p[0]);
        hi_x = std::max(hi_x, p[0]);
        lo_y = std::min(lo_y, p[1]);
        hi_y = std::max(hi_y, p[1]);
    }
    if (hi_x <= lo_x) hi_x = lo_x + 1.0;
    if (hi_y <= lo_y) hi_y = lo_y + 1.0;

    const double plot_w = options.width - 2 * options.margin;
    const double plot_h = options.height - 2 * options.margin;
    const double scale = std::min(plot_w / (hi_x - lo_x), plot_h / (hi_y - lo_y));
    const auto sx = [&](double x) { return options.margin + (x - lo_x) * scale; };
    // SVG y grows downward.
    const auto sy = [&](double y) { return options.height - options.margin - (y - lo_y) * scale; };

    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(options.width)
        << "\" height=\"" << num(options.height) << "\" viewBox=\"0 0 "
        << num(options.width) << " " << num(options.height) << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    if (balls && options.draw_balls) {
        for (const auto& ball : balls->balls) {
            if (ball.center.size() != 2) throw DimensionMismatch("balls are not 2-d");
            out << "<circle class=\"ball\" cx=\"" << num(sx(ball.center[0]))
                << "\" cy=\"" << num(sy(ball.center[1])) << "\" r=\""
                << num(std::max(ball.radius * scale, 1.0))
                << "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
        }
    }
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        const auto p = dataset.point(i);
        out << "<circle class=\"pt\" cx=\"" << num(sx(p[0])) << "\" cy=\""
            << num(sy(p[1])) << "\" r=\"" << num(options.point_radius)
            << "\" fill=\"" << color_for(labels[i]) << "\" fill-opacity=\"0.8\"/>\n";
    }
    out << "</svg>\n";
}

}  // namespace gbmst
