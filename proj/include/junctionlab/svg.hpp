#pragma once

#include <string>
#include <vector>

namespace junctionlab::svg {

struct Series {
    std::vector<double> x;
    std::vector<double> y;
    std::string label;
    std::string color = "#1f6fb2";
};

struct PlotSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    int width_px = 860;
    int height_px = 600;
};

/// Minimal polyline plot: axes, ticks with numeric labels, one polyline per
/// series and a small legend. CSV stays the data contract; this is a
/// convenience view.
std::string render_plot(const std::vector<Series>& series, const PlotSpec& spec);

void write_plot(const std::string& path, const std::vector<Series>& series,
                const PlotSpec& spec);

}  // namespace junctionlab::svg
