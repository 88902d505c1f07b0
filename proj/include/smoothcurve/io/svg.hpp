#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace smoothcurve::io {

struct PlotSeries {
    std::span<const double> xs;
    std::span<const double> ys;
    std::string color = "#1f3b73";
    double stroke_width = 1.5;
    double opacity = 1.0;
    std::string label;
};

struct PlotLabels {
    std::string title;
    std::string x_label;
    std::string y_label;
};

namespace detail {

inline std::string fixed(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

inline std::string tick(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

inline std::string escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

}  // namespace detail

/// Static line chart on a fixed 960 x 540 viewBox. Dense series are reduced
/// to the min/max envelope per horizontal pixel so files stay small.
inline void write_svg(std::ostream& out, const std::vector<PlotSeries>& series, const PlotLabels& labels)
{
    constexpr double width = 960.0;
    constexpr double height = 540.0;
    constexpr double left = 80.0, right = 20.0, top = 40.0, bottom = 60.0;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
    for (const auto& s : series) {
        for (double v : s.xs) x0 = std::min(x0, v), x1 = std::max(x1, v);
        for (double v : s.ys) y0 = std::min(y0, v), y1 = std::max(y1, v);
    }
    if (!(x1 > x0)) x1 = x0 + 1.0;
    if (!(y1 > y0)) y1 = y0 + 1.0;
    const double pad = 0.05 * (y1 - y0);
    y0 -= pad;
    y1 += pad;

    const auto px = [&](double x) { return left + (x - x0) / (x1 - x0) * plot_w; };
    const auto py = [&](double y) { return top + (1.0 - (y - y0) / (y1 - y0)) * plot_h; };

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 960 540\" width=\"960\" "
           "height=\"540\" font-family=\"sans-serif\" font-size=\"12\">\n"
        << "<rect width=\"960\" height=\"540\" fill=\"white\"/>\n"
        << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << plot_w << "\" height=\"" << plot_h
        << "\" fill=\"none\" stroke=\"#444\"/>\n";

    for (int t = 0; t <= 5; ++t) {
        const double fx = x0 + (x1 - x0) * t / 5.0;
        const double fy = y0 + (y1 - y0) * t / 5.0;
        out << "<text x=\"" << detail::fixed(px(fx)) << "\" y=\"" << detail::fixed(top + plot_h + 18)
            << "\" text-anchor=\"middle\">" << detail::tick(fx) << "</text>\n";
        out << "<text x=\"" << detail::fixed(left - 6) << "\" y=\"" << detail::fixed(py(fy) + 4)
            << "\" text-anchor=\"end\">" << detail::tick(fy) << "</text>\n";
    }
    out << "<text x=\"480\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" << detail::escape(labels.title)
        << "</text>\n"
        << "<text x=\"" << detail::fixed(left + plot_w / 2) << "\" y=\"" << detail::fixed(height - 16)
        << "\" text-anchor=\"middle\">" << detail::escape(labels.x_label) << "</text>\n"
        << "<text x=\"18\" y=\"" << detail::fixed(top + plot_h / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
        << detail::fixed(top + plot_h / 2) << ")\">" << detail::escape(labels.y_label) << "</text>\n";

    for (const auto& s : series) {
        out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"" << s.stroke_width
            << "\" stroke-opacity=\"" << s.opacity << "\" points=\"";
        const std::size_t n = s.xs.size();
        std::size_t i = 0;
        while (i < n) {
            // gather every sample that lands on the same pixel column
            const long column = std::lround(px(s.xs[i]));
            std::size_t j = i;
            std::size_t lo = i, hi = i;
            while (j < n && std::lround(px(s.xs[j])) == column) {
                if (s.ys[j] < s.ys[lo]) lo = j;
                if (s.ys[j] > s.ys[hi]) hi = j;
                ++j;
            }
            const std::size_t a = std::min(lo, hi), b = std::max(lo, hi);
            out << detail::fixed(px(s.xs[a])) << ',' << detail::fixed(py(s.ys[a])) << ' ';
            if (b != a) out << detail::fixed(px(s.xs[b])) << ',' << detail::fixed(py(s.ys[b])) << ' ';
            i = j;
        }
        out << "\"/>\n";
    }

    double legend_y = top + 16;
    for (const auto& s : series) {
        if (s.label.empty()) continue;
        out << "<line x1=\"" << left + 12 << "\" y1=\"" << legend_y - 4 << "\" x2=\"" << left + 36 << "\" y2=\""
            << legend_y - 4 << "\" stroke=\"" << s.color << "\" stroke-width=\"2\" stroke-opacity=\"" << s.opacity
            << "\"/>\n<text x=\"" << left + 42 << "\" y=\"" << legend_y << "\">" << detail::escape(s.label)
            << "</text>\n";
        legend_y += 16;
    }
    out << "</svg>\n";
}

}  // namespace smoothcurve::io
