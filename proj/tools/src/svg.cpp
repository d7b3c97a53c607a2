// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "hardness/app/report.hpp"
#include "hardness/csv.hpp"

namespace hardness::app {

namespace {

constexpr double box_pitch = 48.0;
constexpr double left_margin = 64.0;
constexpr double right_margin = 24.0;
constexpr double top_margin = 40.0;
constexpr double plot_height = 300.0;
constexpr double bottom_margin = 56.0;

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string xml_escape(const std::string& s)
{
    std::string out;
    for (char ch : s) {
        switch (ch) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += ch;
        }
    }
    return out;
}

} // namespace

std::string boxplot_svg(const std::string& title, const std::string& x_label, const std::vector<BoxSeries>& series)
{
    double lo = 0.0;
    double hi = 1.0;
    bool first = true;
    for (const auto& s : series) {
        double a = s.stats.whisker_low;
        double b = s.stats.whisker_high;
        if (!s.stats.outliers.empty()) {
            a = std::min(a, s.stats.outliers.front());
            b = std::max(b, s.stats.outliers.back());
        }
        lo = first ? a : std::min(lo, a);
        hi = first ? b : std::max(hi, b);
        first = false;
    }
    // Measures in [0, 1] share a fixed axis; others get a padded data range.
    if (lo >= 0.0 && hi <= 1.0) {
        lo = 0.0;
        hi = 1.0;
    } else if (hi - lo < 1e-12) {
        lo -= 0.5;
        hi += 0.5;
    } else {
        const double pad = 0.05 * (hi - lo);
        lo = lo >= 0.0 ? std::max(0.0, lo - pad) : lo - pad;
        hi += pad;
    }
    auto y_of = [&](double v) { return top_margin + plot_height * (hi - v) / (hi - lo); };

    const double width = left_margin + right_margin + box_pitch * static_cast<double>(std::max<std::size_t>(series.size(), 1));
    const double height = top_margin + plot_height + bottom_margin;
    const double bottom = top_margin + plot_height;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
        << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << num(width) << "\" height=\"" << num(height) << "\" fill=\"white\"/>\n";
    svg << "<text x=\"" << num(width / 2) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
        << xml_escape(title) << "</text>\n";

    // Axes and five y ticks.
    svg << "<line x1=\"" << num(left_margin) << "\" y1=\"" << num(top_margin) << "\" x2=\"" << num(left_margin)
        << "\" y2=\"" << num(bottom) << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << num(left_margin) << "\" y1=\"" << num(bottom) << "\" x2=\"" << num(width - right_margin)
        << "\" y2=\"" << num(bottom) << "\" stroke=\"black\"/>\n";
    for (int t = 0; t <= 4; ++t) {
        const double v = lo + (hi - lo) * t / 4.0;
        const double y = y_of(v);
        svg << "<line x1=\"" << num(left_margin - 4) << "\" y1=\"" << num(y) << "\" x2=\"" << num(left_margin)
            << "\" y2=\"" << num(y) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << num(left_margin - 6) << "\" y=\"" << num(y + 4) << "\" text-anchor=\"end\">"
            << xml_escape(csv::format_real(v, 3)) << "</text>\n";
    }
    svg << "<text x=\"" << num(left_margin + (width - left_margin - right_margin) / 2) << "\" y=\""
        << num(height - 12) << "\" text-anchor=\"middle\">" << xml_escape(x_label) << "</text>\n";

    for (std::size_t k = 0; k < series.size(); ++k) {
        const auto& b = series[k].stats;
        const double cx = left_margin + box_pitch * (static_cast<double>(k) + 0.5);
        const double half = box_pitch * 0.3;
        svg << "<g>\n";
        svg << "<line x1=\"" << num(cx) << "\" y1=\"" << num(y_of(b.whisker_high)) << "\" x2=\"" << num(cx)
            << "\" y2=\"" << num(y_of(b.q3)) << "\" stroke=\"black\"/>\n";
        svg << "<line x1=\"" << num(cx) << "\" y1=\"" << num(y_of(b.q1)) << "\" x2=\"" << num(cx) << "\" y2=\""
            << num(y_of(b.whisker_low)) << "\" stroke=\"black\"/>\n";
        for (double w : {b.whisker_low, b.whisker_high}) {
            svg << "<line x1=\"" << num(cx - half / 2) << "\" y1=\"" << num(y_of(w)) << "\" x2=\""
                << num(cx + half / 2) << "\" y2=\"" << num(y_of(w)) << "\" stroke=\"black\"/>\n";
        }
        svg << "<rect x=\"" << num(cx - half) << "\" y=\"" << num(y_of(b.q3)) << "\" width=\"" << num(2 * half)
            << "\" height=\"" << num(std::max(0.0, y_of(b.q1) - y_of(b.q3)))
            << "\" fill=\"#9ecae1\" stroke=\"black\"/>\n";
        svg << "<line x1=\"" << num(cx - half) << "\" y1=\"" << num(y_of(b.median)) << "\" x2=\"" << num(cx + half)
            << "\" y2=\"" << num(y_of(b.median)) << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
        for (double o : b.outliers) {
            svg << "<circle cx=\"" << num(cx) << "\" cy=\"" << num(y_of(o)) << "\" r=\"2\" fill=\"none\" stroke=\"black\"/>\n";
        }
        svg << "<text x=\"" << num(cx) << "\" y=\"" << num(bottom + 16) << "\" text-anchor=\"middle\">"
            << xml_escape(series[k].label) << "</text>\n";
        svg << "</g>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace hardness::app
