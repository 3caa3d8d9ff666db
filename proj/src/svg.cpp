#include "chrlab/svg.hpp"

#include "chrlab/biinfinite.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace chrlab {

namespace {

constexpr double kCell = 40.0;
constexpr int kPad = 1;  // grid cells beyond the content bounding box

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    std::string s(buf);
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    if (s == "-0") s = "0";
    return s;
}

struct Box {
    double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
    bool empty = true;
    void add(double x, double y) {
        if (empty) {
            min_x = max_x = x;
            min_y = max_y = y;
            empty = false;
        } else {
            min_x = std::min(min_x, x);
            max_x = std::max(max_x, x);
            min_y = std::min(min_y, y);
            max_y = std::max(max_y, y);
        }
    }
};

}  // namespace

std::string render_svg(const SvgScene& scene) {
    if (scene.paths.empty() && scene.guides.empty())
        throw std::invalid_argument("empty scene");

    Box box;
    for (const auto& path : scene.paths)
        for (const auto& pt : path.points()) box.add(static_cast<double>(pt.x), static_cast<double>(pt.y));
    for (const auto& g : scene.guides) {
        box.add(g.x1, g.y1);
        box.add(g.x2, g.y2);
    }
    for (const auto& l : scene.labels) box.add(l.x, l.y);

    const auto grid_lo_x = static_cast<std::int64_t>(std::floor(box.min_x)) - kPad;
    const auto grid_hi_x = static_cast<std::int64_t>(std::ceil(box.max_x)) + kPad;
    const auto grid_lo_y = static_cast<std::int64_t>(std::floor(box.min_y)) - kPad;
    const auto grid_hi_y = static_cast<std::int64_t>(std::ceil(box.max_y)) + kPad;

    const double width = static_cast<double>(grid_hi_x - grid_lo_x) * kCell;
    const double height = static_cast<double>(grid_hi_y - grid_lo_y) * kCell;
    auto sx = [&](double x) { return (x - static_cast<double>(grid_lo_x)) * kCell; };
    auto sy = [&](double y) { return (static_cast<double>(grid_hi_y) - y) * kCell; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
        << num(height) << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n";
    out << "  <g class=\"grid\" stroke=\"#d8d8d8\" stroke-width=\"1\">\n";
    for (std::int64_t x = grid_lo_x; x <= grid_hi_x; ++x)
        out << "    <line x1=\"" << num(sx(static_cast<double>(x))) << "\" y1=\"" << num(sy(static_cast<double>(grid_lo_y)))
            << "\" x2=\"" << num(sx(static_cast<double>(x))) << "\" y2=\"" << num(sy(static_cast<double>(grid_hi_y)))
            << "\"/>\n";
    for (std::int64_t y = grid_lo_y; y <= grid_hi_y; ++y)
        out << "    <line x1=\"" << num(sx(static_cast<double>(grid_lo_x))) << "\" y1=\"" << num(sy(static_cast<double>(y)))
            << "\" x2=\"" << num(sx(static_cast<double>(grid_hi_x))) << "\" y2=\"" << num(sy(static_cast<double>(y)))
            << "\"/>\n";
    out << "  </g>\n";
    for (const auto& g : scene.guides)
        out << "  <line class=\"guide\" stroke=\"#cc3333\" stroke-width=\"2\" x1=\"" << num(sx(g.x1))
            << "\" y1=\"" << num(sy(g.y1)) << "\" x2=\"" << num(sx(g.x2)) << "\" y2=\"" << num(sy(g.y2))
            << "\"/>\n";
    for (const auto& path : scene.paths) {
        out << "  <polyline class=\"path\" fill=\"none\" stroke=\"#222222\" stroke-width=\"3\" points=\"";
        bool first = true;
        for (const auto& pt : path.points()) {
            if (!first) out << " ";
            first = false;
            out << num(sx(static_cast<double>(pt.x))) << "," << num(sy(static_cast<double>(pt.y)));
        }
        out << "\"/>\n";
    }
    for (const auto& l : scene.labels)
        out << "  <text font-family=\"serif\" font-style=\"italic\" font-size=\"15\" text-anchor=\"middle\" x=\""
            << num(sx(l.x)) << "\" y=\"" << num(sy(l.y) + 5.0) << "\">" << l.text << "</text>\n";
    out << "</svg>\n";
    return out.str();
}

namespace {

// Letter labels along a path: 'a' under (or over) horizontal steps,
// 'b' beside vertical ones.
void label_steps(const LatticePath& path, bool below, std::vector<SvgLabel>& labels) {
    auto pts = path.points();
    for (std::size_t i = 0; i < path.steps.size(); ++i) {
        double x0 = static_cast<double>(pts[i].x), y0 = static_cast<double>(pts[i].y);
        if (path.steps[i] == Step::Right)
            labels.push_back({x0 + 0.5, below ? y0 - 0.4 : y0 + 0.4, "a"});
        else
            labels.push_back({below ? x0 - 0.3 : x0 + 0.3, y0 + 0.5, "b"});
    }
}

}  // namespace

SvgScene christoffel_scene(const Slope& s, PathSide side) {
    SvgScene scene;
    scene.paths.push_back(christoffel_path(s, side));
    scene.guides.push_back({0, 0, static_cast<double>(s.p), static_cast<double>(s.q)});
    label_steps(scene.paths.front(), side == PathSide::Lower, scene.labels);
    return scene;
}

SvgScene b4_scene(const Word& m, Letter x, Letter y, std::int64_t lo, std::int64_t hi) {
    if (lo > 0 || hi < 0 || lo == hi) throw std::invalid_argument("window must cover index 0");
    BiInfiniteWord s = spliced_b4(m, x, y);

    // Walk backward from the anchor (index 0 at the origin) to find the
    // start of the window.
    Point at{0, 0};
    for (std::int64_t i = -1; i >= lo; --i) {
        if (s.at(i) == Letter::A)
            --at.x;
        else
            --at.y;
    }
    LatticePath left_path;  // indices [lo, 0)
    left_path.start = at;
    for (std::int64_t i = lo; i < 0; ++i)
        left_path.steps.push_back(s.at(i) == Letter::A ? Step::Right : Step::Up);
    LatticePath right_path;  // indices [0, hi)
    right_path.start = Point{0, 0};
    for (std::int64_t i = 0; i < hi; ++i)
        right_path.steps.push_back(s.at(i) == Letter::A ? Step::Right : Step::Up);

    // Both rays share the slope of the repeated block; the right ray
    // passes through the staircase corner reached after the center.
    Word block = Letter::A + m + Letter::B;
    double bp = static_cast<double>(count(block, Letter::A));
    double bq = static_cast<double>(count(block, Letter::B));
    Word center = y + m + y;
    Point after{static_cast<std::int64_t>(count(center, Letter::A)),
                static_cast<std::int64_t>(count(center, Letter::B))};

    double x_left = static_cast<double>(left_path.start.x);
    auto right_pts = right_path.points();
    double x_right = static_cast<double>(right_pts.back().x);
    auto ray_y = [&](double ax, double ay, double xq) { return ay + (bq / bp) * (xq - ax); };
    SvgScene scene;
    scene.paths.push_back(left_path);
    scene.paths.push_back(right_path);
    scene.guides.push_back({x_left, ray_y(0, 0, x_left), 0, 0});
    scene.guides.push_back({0, ray_y(static_cast<double>(after.x), static_cast<double>(after.y), 0),
                            x_right,
                            ray_y(static_cast<double>(after.x), static_cast<double>(after.y), x_right)});
    label_steps(left_path, false, scene.labels);
    label_steps(right_path, true, scene.labels);
    return scene;
}

}  // namespace chrlab
