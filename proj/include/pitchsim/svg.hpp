#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "pitchsim/errors.hpp"

namespace pitchsim {

// Minimal standalone SVG line plot of one signal against time.
inline void write_svg_plot(const std::string& path, const std::string& title,
                           const std::vector<double>& x, const std::vector<double>& y,
                           int width = 900, int height = 300) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("svg plot needs matching x/y with >= 2 points");
    std::ofstream out(path);
    if (!out) throw config_error("cannot write SVG: " + path);

    const double pad_l = 70, pad_r = 15, pad_t = 28, pad_b = 34;
    double xmin = x.front(), xmax = x.back();
    double ymin = y[0], ymax = y[0];
    for (double v : y) { ymin = std::min(ymin, v); ymax = std::max(ymax, v); }
    if (ymax - ymin < 1e-12) { ymax += 1.0; ymin -= 1.0; }
    const double sx = (width - pad_l - pad_r) / (xmax - xmin);
    const double sy = (height - pad_t - pad_b) / (ymax - ymin);
    auto X = [&](double v) { return pad_l + (v - xmin) * sx; };
    auto Y = [&](double v) { return height - pad_b - (v - ymin) * sy; };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << pad_l << "\" y=\"18\" font-family=\"sans-serif\" font-size=\"13\">"
        << title << "</text>\n";

    char buf[128];
    // axes and four y ticks
    out << "<g stroke=\"#888\" stroke-width=\"1\">\n";
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\"/>\n",
                  pad_l, height - pad_b, static_cast<double>(width - pad_r), height - pad_b);
    out << buf;
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\"/>\n",
                  pad_l, pad_t, pad_l, height - pad_b);
    out << buf;
    out << "</g>\n<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#444\">\n";
    for (int k = 0; k <= 4; ++k) {
        const double yv = ymin + (ymax - ymin) * k / 4.0;
        std::snprintf(buf, sizeof buf, "<text x=\"4\" y=\"%.1f\">%.4g</text>\n", Y(yv) + 4, yv);
        out << buf;
        const double xv = xmin + (xmax - xmin) * k / 4.0;
        std::snprintf(buf, sizeof buf, "<text x=\"%.1f\" y=\"%.1f\">%.4g</text>\n", X(xv) - 10,
                      height - pad_b + 16.0, xv);
        out << buf;
    }
    out << "</g>\n";

    // decimate long traces to at most ~4000 segments
    const std::size_t stride = std::max<std::size_t>(1, x.size() / 4000);
    out << "<polyline fill=\"none\" stroke=\"#1f6fb2\" stroke-width=\"1.2\" points=\"";
    for (std::size_t i = 0; i < x.size(); i += stride) {
        std::snprintf(buf, sizeof buf, "%.1f,%.1f ", X(x[i]), Y(y[i]));
        out << buf;
    }
    std::snprintf(buf, sizeof buf, "%.1f,%.1f", X(x.back()), Y(y.back()));
    out << buf << "\"/>\n</svg>\n";
}

} // namespace pitchsim
