#pragma once

#include <string>
#include <vector>

namespace zenoptics {

struct XY {
    double x;
    double y;
};

struct Series {
    std::string name;
    std::vector<XY> points;
};

/// Minimal deterministic line plot. Same spec in, same bytes out.
struct PlotSpec {
    int width = 800;
    int height = 600;
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<Series> series;
    double y_min = 0.0;
    double y_max = 1.05;
    bool log_x = false;  ///< requires every x > 0
};

/// Renders a self-contained SVG 1.1 document: axes, tick labels, one
/// polyline per series, legend when there is more than one series.
/// Throws std::invalid_argument on empty/non-finite input.
std::string render_svg(const PlotSpec& spec);

}  // namespace zenoptics
