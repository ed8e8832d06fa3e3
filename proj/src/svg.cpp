#include "zenoptics/svg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <system_error>

#include "zenoptics/units.hpp"

namespace zenoptics {

namespace {

constexpr int kMarginLeft = 70;
constexpr int kMarginRight = 20;
constexpr int kMarginTop = 40;
constexpr int kMarginBottom = 55;

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                    "#9467bd", "#ff7f0e", "#8c564b"};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

// Fixed two decimals so byte-for-byte output never depends on locale or
// printf quirks.
std::string coord(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 2);
    if (ec != std::errc{}) throw std::runtime_error("svg: coordinate conversion failed");
    return std::string(buf, ptr);
}

std::string escape_xml(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string tick_label(double v) {
    // Trim trailing noise from near-round tick values.
    const double rounded = std::round(v);
    if (std::fabs(v - rounded) < 1e-9 * std::max(1.0, std::fabs(v)))
        return format_double(rounded, 6);
    return format_double(v, 6);
}

}  // namespace

std::string render_svg(const PlotSpec& spec) {
    if (spec.series.empty()) throw std::invalid_argument("plot: no series");
    if (spec.width < 200 || spec.height < 150)
        throw std::invalid_argument("plot: canvas too small");
    if (!(spec.y_max > spec.y_min)) throw std::invalid_argument("plot: y_max must exceed y_min");

    double x_min = 0.0;
    double x_max = 0.0;
    bool first = true;
    for (const Series& s : spec.series) {
        if (s.points.empty())
            throw std::invalid_argument("plot: series '" + s.name + "' has no points");
        for (const XY& p : s.points) {
            if (!std::isfinite(p.x) || !std::isfinite(p.y))
                throw std::invalid_argument("plot: non-finite point in series '" + s.name + "'");
            if (spec.log_x && !(p.x > 0.0))
                throw std::invalid_argument("plot: log x-axis requires positive x in series '" +
                                            s.name + "'");
            if (first) {
                x_min = x_max = p.x;
                first = false;
            } else {
                x_min = std::min(x_min, p.x);
                x_max = std::max(x_max, p.x);
            }
        }
    }
    if (x_max == x_min) x_max = x_min + 1.0;

    const double plot_left = kMarginLeft;
    const double plot_right = spec.width - kMarginRight;
    const double plot_top = kMarginTop;
    const double plot_bottom = spec.height - kMarginBottom;
    const double plot_w = plot_right - plot_left;
    const double plot_h = plot_bottom - plot_top;

    const double tx_min = spec.log_x ? std::log10(x_min) : x_min;
    const double tx_max = spec.log_x ? std::log10(x_max) : x_max;
    const auto map_x = [&](double x) {
        const double t = spec.log_x ? std::log10(x) : x;
        return plot_left + (t - tx_min) / (tx_max - tx_min) * plot_w;
    };
    const auto map_y = [&](double y) {
        return plot_bottom - (y - spec.y_min) / (spec.y_max - spec.y_min) * plot_h;
    };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(spec.width) + "\" height=\"" + std::to_string(spec.height) +
           "\" viewBox=\"0 0 " + std::to_string(spec.width) + " " +
           std::to_string(spec.height) + "\">\n";
    svg += "<rect width=\"" + std::to_string(spec.width) + "\" height=\"" +
           std::to_string(spec.height) + "\" fill=\"white\"/>\n";

    if (!spec.title.empty())
        svg += "<text x=\"" + coord((plot_left + plot_right) / 2.0) +
               "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"16\">" +
               escape_xml(spec.title) + "</text>\n";

    // Frame
    svg += "<rect x=\"" + coord(plot_left) + "\" y=\"" + coord(plot_top) + "\" width=\"" +
           coord(plot_w) + "\" height=\"" + coord(plot_h) +
           "\" fill=\"none\" stroke=\"black\"/>\n";

    // X ticks: decades when log scale spans at least one, else 6 even steps.
    std::vector<double> x_ticks;
    if (spec.log_x) {
        const int d0 = static_cast<int>(std::ceil(tx_min - 1e-9));
        const int d1 = static_cast<int>(std::floor(tx_max + 1e-9));
        for (int d = d0; d <= d1; ++d) x_ticks.push_back(std::pow(10.0, d));
    }
    if (x_ticks.size() < 2) {
        x_ticks.clear();
        for (int i = 0; i <= 5; ++i) {
            const double t = tx_min + (tx_max - tx_min) * i / 5.0;
            x_ticks.push_back(spec.log_x ? std::pow(10.0, t) : t);
        }
    }
    for (double xv : x_ticks) {
        const double px = map_x(xv);
        svg += "<line x1=\"" + coord(px) + "\" y1=\"" + coord(plot_bottom) + "\" x2=\"" +
               coord(px) + "\" y2=\"" + coord(plot_bottom + 5) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + coord(px) + "\" y=\"" + coord(plot_bottom + 20) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" +
               escape_xml(tick_label(xv)) + "</text>\n";
    }

    for (int i = 0; i <= 5; ++i) {
        const double yv = spec.y_min + (spec.y_max - spec.y_min) * i / 5.0;
        const double py = map_y(yv);
        svg += "<line x1=\"" + coord(plot_left - 5) + "\" y1=\"" + coord(py) + "\" x2=\"" +
               coord(plot_left) + "\" y2=\"" + coord(py) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + coord(plot_left - 9) + "\" y=\"" + coord(py + 4) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" +
               escape_xml(tick_label(yv)) + "</text>\n";
    }

    if (!spec.x_label.empty())
        svg += "<text x=\"" + coord((plot_left + plot_right) / 2.0) + "\" y=\"" +
               coord(spec.height - 12) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" +
               escape_xml(spec.x_label) + "</text>\n";
    if (!spec.y_label.empty())
        svg += "<text x=\"18\" y=\"" + coord((plot_top + plot_bottom) / 2.0) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" "
               "transform=\"rotate(-90 18 " +
               coord((plot_top + plot_bottom) / 2.0) + ")\">" +
               escape_xml(spec.y_label) + "</text>\n";

    for (std::size_t i = 0; i < spec.series.size(); ++i) {
        const Series& s = spec.series[i];
        svg += "<polyline fill=\"none\" stroke=\"";
        svg += kPalette[i % kPaletteSize];
        svg += "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t j = 0; j < s.points.size(); ++j) {
            if (j != 0) svg += ' ';
            svg += coord(map_x(s.points[j].x));
            svg += ',';
            svg += coord(map_y(std::clamp(s.points[j].y, spec.y_min, spec.y_max)));
        }
        svg += "\"/>\n";
    }

    if (spec.series.size() > 1) {
        const double lx = plot_right - 170;
        double ly = plot_top + 14;
        for (std::size_t i = 0; i < spec.series.size(); ++i) {
            svg += "<line x1=\"" + coord(lx) + "\" y1=\"" + coord(ly - 4) + "\" x2=\"" +
                   coord(lx + 24) + "\" y2=\"" + coord(ly - 4) + "\" stroke=\"";
            svg += kPalette[i % kPaletteSize];
            svg += "\" stroke-width=\"1.5\"/>\n";
            svg += "<text x=\"" + coord(lx + 30) + "\" y=\"" + coord(ly) +
                   "\" font-family=\"sans-serif\" font-size=\"12\">" +
                   escape_xml(spec.series[i].name) + "</text>\n";
            ly += 16;
        }
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace zenoptics
