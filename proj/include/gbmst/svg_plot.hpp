#pragma once

#include <optional>
#include <span>
#include <string>

#include "gbmst/dataset.hpp"
#include "gbmst/granular_ball.hpp"

namespace gbmst {

struct PlotOptions {
    double width = 720;
    double height = 720;
    double margin = 24;
    double point_radius = 2.5;
    bool draw_balls = true;
};

// Scatter plot of a 2-d dataset colored by label (12-color palette cycling by
// label id), with one outline circle per granular ball when draw_balls is on.
// Throws DimensionMismatch for non-2-d data.
void write_svg_scatter(const std::string& path, const Dataset& dataset,
                       std::span<const int> labels,
                       const GranularBallSet* balls = nullptr,
                       const PlotOptions& options = {});

}  // namespace gbmst
