#include "spr3/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace spr3 {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", x + 0.0);
    return buf;
}

struct Box {
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    void grow(double x, double y) {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    void pad(double frac) {
        const double dx = std::max(xmax - xmin, 1e-12), dy = std::max(ymax - ymin, 1e-12);
        xmin -= frac * dx;
        xmax += frac * dx;
        ymin -= frac * dy;
        ymax += frac * dy;
    }
};

// Maps data coordinates into a panel, preserving aspect ratio, y up.
struct PanelMap {
    Box box;
    double px, py, pw, ph;
    double scale;
    PanelMap(Box b, double x, double y, double w, double h) : box(b), px(x), py(y), pw(w), ph(h) {
        scale = std::min(pw / (box.xmax - box.xmin), ph / (box.ymax - box.ymin));
    }
    double x(double v) const {
        return px + 0.5 * pw + (v - 0.5 * (box.xmin + box.xmax)) * scale;
    }
    double y(double v) const {
        return py + 0.5 * ph - (v - 0.5 * (box.ymin + box.ymax)) * scale;
    }
};

void polyline(std::string& out, const PanelMap& m, const std::vector<Vec2>& pts,
              const char* style) {
    out += "  <polyline fill=\"none\" ";
    out += style;
    out += " points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) out += ' ';
        out += fmt(m.x(pts[i][0])) + "," + fmt(m.y(pts[i][1]));
    }
    out += "\"/>\n";
}

}  // namespace

std::string render_scenario_svg(const SwimmerGeometry& geom, const Trajectory& traj) {
    const EllipticStroke& stroke = traj.stroke;

    // Orthonormal basis of the stroke plane.
    const double un = norm(stroke.u);
    Vec3 e1 = un > 0.0 ? stroke.u / un : Vec3{1.0, 0.0, 0.0};
    Vec3 vp = stroke.v - dot(stroke.v, e1) * e1;
    const double vpn = norm(vp);
    Vec3 e2 = vpn > 1e-300 ? vp / vpn : Vec3{0.0, 1.0, 0.0};

    std::vector<Vec2> ellipse;
    Box shape_box;
    for (int k = 0; k <= 128; ++k) {
        const Vec3 xi = stroke.shape_at(2.0 * kPi * k / 128.0);
        const Vec2 p{dot(xi, e1), dot(xi, e2)};
        ellipse.push_back(p);
        shape_box.grow(p[0], p[1]);
    }
    shape_box.grow(0.0, 0.0);
    shape_box.pad(0.12);

    // Center path and ball outlines at the quarter-period frames.
    std::vector<Vec2> path;
    Box plane_box;
    for (const auto& s : traj.samples) {
        path.push_back(s.c);
        plane_box.grow(s.c[0], s.c[1]);
    }
    std::vector<std::array<Vec2, 3>> frames;
    const int n_first = std::min<int>(traj.steps_per_loop,
                                      static_cast<int>(traj.samples.size()) - 1);
    for (int q = 0; q <= 4; ++q) {
        const int k = q * n_first / 4;
        const auto& s = traj.samples[static_cast<std::size_t>(k)];
        const auto centers = ball_centers(geom, s.xi, Pose{s.c, s.theta});
        frames.push_back(centers);
        for (const auto& b : centers) {
            plane_box.grow(b[0] - geom.radius, b[1] - geom.radius);
            plane_box.grow(b[0] + geom.radius, b[1] + geom.radius);
        }
    }
    plane_box.pad(0.08);

    const PanelMap left(shape_box, 20.0, 20.0, 400.0, 420.0);
    const PanelMap right(plane_box, 480.0, 20.0, 400.0, 420.0);

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"900\" height=\"460\" "
           "viewBox=\"0 0 900 460\">\n";
    out += "  <rect width=\"900\" height=\"460\" fill=\"white\"/>\n";
    out += "  <text x=\"220\" y=\"16\" text-anchor=\"middle\" font-size=\"13\" "
           "font-family=\"sans-serif\">stroke ellipse (shape plane)</text>\n";
    out += "  <text x=\"680\" y=\"16\" text-anchor=\"middle\" font-size=\"13\" "
           "font-family=\"sans-serif\">center path and ball outlines</text>\n";

    polyline(out, left, ellipse, "stroke=\"#1f77b4\" stroke-width=\"1.5\"");
    out += "  <circle cx=\"" + fmt(left.x(0.0)) + "\" cy=\"" + fmt(left.y(0.0)) +
           "\" r=\"2.5\" fill=\"#333\"/>\n";

    polyline(out, right, path, "stroke=\"#d62728\" stroke-width=\"1.2\"");
    for (std::size_t f = 0; f < frames.size(); ++f) {
        const double alpha = 0.25 + 0.15 * static_cast<double>(f);
        for (const auto& b : frames[f]) {
            out += "  <circle cx=\"" + fmt(right.x(b[0])) + "\" cy=\"" + fmt(right.y(b[1])) +
                   "\" r=\"" + fmt(geom.radius * right.scale) +
                   "\" fill=\"none\" stroke=\"#2ca02c\" stroke-opacity=\"" + fmt(alpha) +
                   "\" stroke-width=\"1\"/>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

}  // namespace spr3
