#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace eigenstrata::tools {

namespace {

constexpr double kW = 800, kH = 500, kMargin = 60;

const char* colour_for(const std::string& name, std::size_t i) {
    static const char* palette[] = {"#1f4e9c", "#c0392b", "#2e8b57", "#8e44ad", "#d35400", "#16a085"};
    if (name.rfind("sim", 0) == 0) return "#555555";
    if (name == "density" || name == "rho") return "#000000";
    if (name.rfind("uncorr", 0) == 0) return "#c0392b";
    if (name.rfind("bulk", 0) == 0 || name.rfind("asym", 0) == 0) return "#c0392b";
    if (name.rfind("comp", 0) == 0 || name.rfind("eig", 0) == 0) return "#1f4e9c";
    return palette[i % 6];
}

std::string num(double v) {
    char b[32];
    std::snprintf(b, sizeof b, "%.2f", v);
    return b;
}

}  // namespace

std::string render_svg(const Table& t, const std::string& title) {
    std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kW) + "\" height=\"" + num(kH) + "\">\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s += "<text x=\"" + num(kW / 2) + "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">" +
         title + "</text>\n";
    if (t.data.size() < 2 || t.rows() < 2) return s + "</svg>\n";

    const auto& x = t.data[0];
    double x0 = *std::min_element(x.begin(), x.end()), x1 = *std::max_element(x.begin(), x.end());
    double y0 = std::numeric_limits<double>::infinity(), y1 = -y0;
    for (std::size_t c = 1; c < t.data.size(); ++c)
        for (double v : t.data[c])
            if (std::isfinite(v)) {
                y0 = std::min(y0, v);
                y1 = std::max(y1, v);
            }
    if (!std::isfinite(y0) || y1 <= y0) {
        y0 = 0;
        y1 = 1;
    }
    if (x1 <= x0) x1 = x0 + 1;
    auto px = [&](double v) { return kMargin + (v - x0) / (x1 - x0) * (kW - 2 * kMargin); };
    auto py = [&](double v) { return kH - kMargin - (v - y0) / (y1 - y0) * (kH - 2 * kMargin); };

    s += "<rect x=\"" + num(kMargin) + "\" y=\"" + num(kMargin) + "\" width=\"" + num(kW - 2 * kMargin) +
         "\" height=\"" + num(kH - 2 * kMargin) + "\" fill=\"none\" stroke=\"#999\"/>\n";
    char lab[96];
    std::snprintf(lab, sizeof lab, "%s [%.3g, %.3g]", t.columns[0].c_str(), x0, x1);
    s += "<text x=\"" + num(kW / 2) + "\" y=\"" + num(kH - 20) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" + lab + "</text>\n";
    std::snprintf(lab, sizeof lab, "[%.3g, %.3g]", y0, y1);
    s += "<text x=\"8\" y=\"" + num(kMargin - 8) + "\" font-family=\"sans-serif\" font-size=\"12\">" + lab + "</text>\n";

    for (std::size_t c = 1; c < t.data.size(); ++c) {
        std::string pts;
        bool open = false;
        auto flush = [&] {
            if (open && !pts.empty())
                s += "<polyline fill=\"none\" stroke-width=\"1.2\" stroke=\"" +
                     std::string(colour_for(t.columns[c], c)) + "\" points=\"" + pts + "\"/>\n";
            pts.clear();
            open = false;
        };
        for (std::size_t r = 0; r < t.rows(); ++r) {
            const double v = t.data[c][r];
            if (!std::isfinite(v)) {
                flush();
                continue;
            }
            pts += num(px(x[r])) + "," + num(py(v)) + " ";
            open = true;
        }
        flush();
    }
    return s + "</svg>\n";
}

}  // namespace eigenstrata::tools
