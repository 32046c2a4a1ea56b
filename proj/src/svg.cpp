#include "junctionlab/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "junctionlab/errors.hpp"

namespace junctionlab::svg {

namespace {

struct Range {
    double lo = 0.0;
    double hi = 1.0;
    double span() const { return hi - lo; }
};

Range data_range(const std::vector<Series>& series, bool use_x) {
    Range r{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    for (const auto& s : series) {
        const auto& v = use_x ? s.x : s.y;
        for (double value : v) {
            r.lo = std::min(r.lo, value);
            r.hi = std::max(r.hi, value);
        }
    }
    if (!(r.lo < r.hi)) {
        r.lo -= 1.0;
        r.hi += 1.0;
    }
    const double pad = 0.04 * r.span();
    r.lo -= pad;
    r.hi += pad;
    return r;
}

/// Round tick spacing to 1/2/5 times a power of ten.
std::vector<double> ticks(const Range& r, int target = 6) {
    const double raw = r.span() / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        if (mag * m >= raw) {
            step = mag * m;
            break;
        }
    }
    std::vector<double> out;
    for (double t = std::ceil(r.lo / step) * step; t <= r.hi; t += step) {
        out.push_back(std::abs(t) < step * 1e-9 ? 0.0 : t);
    }
    return out;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

}  // namespace

std::string render_plot(const std::vector<Series>& series, const PlotSpec& spec) {
    const int w = spec.width_px, h = spec.height_px;
    const int ml = 84, mr = 24, mt = 42, mb = 58;  // margins
    const Range rx = data_range(series, true);
    const Range ry = data_range(series, false);

    auto px = [&](double x) { return ml + (x - rx.lo) / rx.span() * (w - ml - mr); };
    auto py = [&](double y) { return h - mb - (y - ry.lo) / ry.span() * (h - mt - mb); };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << w / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
        << spec.title << "</text>\n";

    for (double t : ticks(rx)) {
        const double x = px(t);
        out << "<line x1=\"" << x << "\" y1=\"" << mt << "\" x2=\"" << x << "\" y2=\"" << h - mb
            << "\" stroke=\"#dddddd\"/>\n";
        out << "<text x=\"" << x << "\" y=\"" << h - mb + 18
            << "\" text-anchor=\"middle\" font-size=\"12\">" << fmt(t) << "</text>\n";
    }
    for (double t : ticks(ry)) {
        const double y = py(t);
        out << "<line x1=\"" << ml << "\" y1=\"" << y << "\" x2=\"" << w - mr << "\" y2=\"" << y
            << "\" stroke=\"#dddddd\"/>\n";
        out << "<text x=\"" << ml - 6 << "\" y=\"" << y + 4
            << "\" text-anchor=\"end\" font-size=\"12\">" << fmt(t) << "</text>\n";
    }

    out << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << w - ml - mr << "\" height=\""
        << h - mt - mb << "\" fill=\"none\" stroke=\"black\"/>\n";
    out << "<text x=\"" << (ml + w - mr) / 2 << "\" y=\"" << h - 14
        << "\" text-anchor=\"middle\" font-size=\"14\">" << spec.x_label << "</text>\n";
    out << "<text x=\"20\" y=\"" << (mt + h - mb) / 2
        << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 20 "
        << (mt + h - mb) / 2 << ")\">" << spec.y_label << "</text>\n";

    int legend_y = mt + 16;
    for (const auto& s : series) {
        out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.6\" points=\"";
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            out << px(s.x[i]) << "," << py(s.y[i]) << " ";
        }
        out << "\"/>\n";
        if (!s.label.empty()) {
            out << "<line x1=\"" << w - mr - 150 << "\" y1=\"" << legend_y << "\" x2=\""
                << w - mr - 126 << "\" y2=\"" << legend_y << "\" stroke=\"" << s.color
                << "\" stroke-width=\"2\"/>\n";
            out << "<text x=\"" << w - mr - 120 << "\" y=\"" << legend_y + 4
                << "\" font-size=\"12\">" << s.label << "</text>\n";
            legend_y += 18;
        }
    }
    out << "</svg>\n";
    return out.str();
}

void write_plot(const std::string& path, const std::vector<Series>& series,
                const PlotSpec& spec) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write SVG file: " + path);
    out << render_plot(series, spec);
}

}  // namespace junctionlab::svg
