#include "tvb/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace tvb {

namespace {

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", x + 0.0);
    return buf;
}

const char* kPalette[] = {"#c0392b", "#2471a3", "#1e8449", "#8e44ad",
                          "#b9770e", "#148f77", "#7b241c", "#5d6d7e"};

}  // namespace

std::string render_svg(const BundleAnalysis& a, const std::string& title) {
    if (a.bundle.fan.lattice_rank != 2) {
        throw ValidationError("svg rendering is only available for two-dimensional fans");
    }
    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    bool seeded = false;
    auto grow = [&](double x, double y) {
        if (!seeded) {
            min_x = max_x = x;
            min_y = max_y = y;
            seeded = true;
            return;
        }
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
    };
    for (const ParliamentPolytope& p : a.parliament) {
        for (const QVec& v : p.vertices) grow(v[0].get_d(), v[1].get_d());
    }
    for (const auto& chars : a.characters) {
        for (const CharacterCount& cc : chars) grow(double(cc.u[0]), double(cc.u[1]));
    }
    if (!seeded) grow(0, 0);
    min_x -= 1.5;
    min_y -= 1.5;
    max_x += 1.5;
    max_y += 1.5;

    const double scale = 48;
    const double pad = 16;
    const double legend_h = 26.0 * (a.parliament.size() + a.characters.size()) + 40;
    const double width = (max_x - min_x) * scale + 2 * pad + 240;
    const double height = std::max((max_y - min_y) * scale + 2 * pad, legend_h);
    auto px = [&](double x) { return pad + (x - min_x) * scale; };
    auto py = [&](double y) { return pad + (max_y - y) * scale; };

    std::ostringstream s;
    s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
      << num(height) << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n";
    s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s << "<title>" << title << "</title>\n";

    // Lattice dots.
    for (long long gx = static_cast<long long>(std::ceil(min_x)); gx <= std::floor(max_x); gx++) {
        for (long long gy = static_cast<long long>(std::ceil(min_y)); gy <= std::floor(max_y); gy++) {
            s << "<circle cx=\"" << num(px(double(gx))) << "\" cy=\"" << num(py(double(gy)))
              << "\" r=\"1.2\" fill=\"#d5d8dc\"/>\n";
        }
    }
    // Axes.
    if (min_x < 0 && max_x > 0) {
        s << "<line x1=\"" << num(px(0)) << "\" y1=\"" << num(py(min_y)) << "\" x2=\"" << num(px(0))
          << "\" y2=\"" << num(py(max_y)) << "\" stroke=\"#aab7b8\" stroke-width=\"1\"/>\n";
    }
    if (min_y < 0 && max_y > 0) {
        s << "<line x1=\"" << num(px(min_x)) << "\" y1=\"" << num(py(0)) << "\" x2=\""
          << num(px(max_x)) << "\" y2=\"" << num(py(0)) << "\" stroke=\"#aab7b8\" stroke-width=\"1\"/>\n";
    }

    // Polytopes.
    for (size_t i = 0; i < a.parliament.size(); i++) {
        const ParliamentPolytope& p = a.parliament[i];
        if (p.is_empty) continue;
        const std::string color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
        std::vector<std::pair<double, double>> pts;
        for (const QVec& v : p.vertices) pts.emplace_back(v[0].get_d(), v[1].get_d());
        double cx = 0, cy = 0;
        for (const auto& [x, y] : pts) {
            cx += x;
            cy += y;
        }
        cx /= double(pts.size());
        cy /= double(pts.size());
        std::sort(pts.begin(), pts.end(), [&](const auto& u, const auto& v) {
            return std::atan2(u.second - cy, u.first - cx) < std::atan2(v.second - cy, v.first - cx);
        });
        if (pts.size() == 1) {
            s << "<circle cx=\"" << num(px(pts[0].first)) << "\" cy=\"" << num(py(pts[0].second))
              << "\" r=\"8\" fill=\"" << color << "\" fill-opacity=\"0.35\" stroke=\"" << color
              << "\"/>\n";
        } else if (pts.size() == 2) {
            s << "<line x1=\"" << num(px(pts[0].first)) << "\" y1=\"" << num(py(pts[0].second))
              << "\" x2=\"" << num(px(pts[1].first)) << "\" y2=\"" << num(py(pts[1].second))
              << "\" stroke=\"" << color << "\" stroke-width=\"6\" stroke-opacity=\"0.45\"/>\n";
        } else {
            s << "<polygon points=\"";
            for (size_t k = 0; k < pts.size(); k++) {
                if (k) s << " ";
                s << num(px(pts[k].first)) << "," << num(py(pts[k].second));
            }
            s << "\" fill=\"" << color << "\" fill-opacity=\"0.25\" stroke=\"" << color
              << "\" stroke-width=\"1.5\"/>\n";
        }
        s << "<text x=\"" << num(px(cx) + 6) << "\" y=\"" << num(py(cy) - 6)
          << "\" font-family=\"monospace\" font-size=\"12\" fill=\"" << color << "\">"
          << format_vector(p.e) << "</text>\n";
    }

    // Character markers, one glyph shape per maximal cone.
    auto in_some_polytope = [&](const IntVec& u) {
        return std::any_of(a.parliament.begin(), a.parliament.end(),
                           [&](const ParliamentPolytope& p) { return p.contains(u); });
    };
    for (size_t k = 0; k < a.characters.size(); k++) {
        const int shape = static_cast<int>(k % 4);
        for (const CharacterCount& cc : a.characters[k]) {
            const double x = px(double(cc.u[0]));
            const double y = py(double(cc.u[1]));
            const bool filled = in_some_polytope(cc.u);
            const std::string fill = filled ? "#17202a" : "white";
            const double r = 5;
            switch (shape) {
                case 0:
                    s << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"" << num(r)
                      << "\" fill=\"" << fill << "\" stroke=\"#17202a\" stroke-width=\"1.5\"/>\n";
                    break;
                case 1:
                    s << "<rect x=\"" << num(x - r) << "\" y=\"" << num(y - r) << "\" width=\""
                      << num(2 * r) << "\" height=\"" << num(2 * r) << "\" fill=\"" << fill
                      << "\" stroke=\"#17202a\" stroke-width=\"1.5\"/>\n";
                    break;
                case 2:
                    s << "<polygon points=\"" << num(x) << "," << num(y - r - 1) << " " << num(x + r + 1)
                      << "," << num(y) << " " << num(x) << "," << num(y + r + 1) << " " << num(x - r - 1)
                      << "," << num(y) << "\" fill=\"" << fill
                      << "\" stroke=\"#17202a\" stroke-width=\"1.5\"/>\n";
                    break;
                default:
                    s << "<polygon points=\"" << num(x) << "," << num(y - r - 1) << " " << num(x + r + 1)
                      << "," << num(y + r) << " " << num(x - r - 1) << "," << num(y + r) << "\" fill=\""
                      << fill << "\" stroke=\"#17202a\" stroke-width=\"1.5\"/>\n";
            }
            if (cc.multiplicity > 1) {
                s << "<text x=\"" << num(x + 7) << "\" y=\"" << num(y + 4)
                  << "\" font-family=\"monospace\" font-size=\"11\" fill=\"#17202a\">x"
                  << cc.multiplicity << "</text>\n";
            }
        }
    }

    // Legend.
    double ly = 24;
    const double lx = (max_x - min_x) * scale + 2 * pad + 12;
    s << "<text x=\"" << num(lx) << "\" y=\"" << num(ly)
      << "\" font-family=\"monospace\" font-size=\"13\" fill=\"#17202a\">" << title << "</text>\n";
    ly += 10;
    for (size_t k = 0; k < a.characters.size(); k++) {
        ly += 26;
        const char* shapes[] = {"circle", "square", "diamond", "triangle"};
        s << "<text x=\"" << num(lx) << "\" y=\"" << num(ly)
          << "\" font-family=\"monospace\" font-size=\"12\" fill=\"#17202a\">cone " << (k + 1) << ": "
          << shapes[k % 4] << "</text>\n";
    }
    for (size_t i = 0; i < a.parliament.size(); i++) {
        ly += 26;
        const std::string color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
        s << "<rect x=\"" << num(lx) << "\" y=\"" << num(ly - 11) << "\" width=\"12\" height=\"12\" fill=\""
          << color << "\" fill-opacity=\"0.4\" stroke=\"" << color << "\"/>\n";
        s << "<text x=\"" << num(lx + 18) << "\" y=\"" << num(ly)
          << "\" font-family=\"monospace\" font-size=\"12\" fill=\"#17202a\">"
          << format_vector(a.parliament[i].e)
          << (a.parliament[i].is_empty ? " (empty)" : "") << "</text>\n";
    }
    s << "</svg>\n";
    return s.str();
}

}  // namespace tvb
