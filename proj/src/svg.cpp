#include "pierce/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

namespace pierce {
namespace {

struct Box {
    double xmin = std::numeric_limits<double>::infinity();
    double ymin = std::numeric_limits<double>::infinity();
    double xmax = -std::numeric_limits<double>::infinity();
    double ymax = -std::numeric_limits<double>::infinity();

    void add(Point p, double pad = 0.0) {
        xmin = std::min(xmin, p.x - pad);
        ymin = std::min(ymin, p.y - pad);
        xmax = std::max(xmax, p.x + pad);
        ymax = std::max(ymax, p.y + pad);
    }
};

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

struct EllipseGeom {
    Point center;
    double rx = 0.0;
    double ry = 0.0;
    double angle = 0.0;  // radians, focal axis vs x-axis
};

EllipseGeom ellipse_geom(const EllipseSpec& e) {
    EllipseGeom g;
    g.center = midpoint(e.focus_a, e.focus_b);
    const double half_f = 0.5 * dist(e.focus_a, e.focus_b);
    g.rx = e.alpha * half_f;
    g.ry = std::sqrt(std::max(0.0, g.rx * g.rx - half_f * half_f));
    g.angle = std::atan2(e.focus_b.y - e.focus_a.y, e.focus_b.x - e.focus_a.x);
    return g;
}

}  // namespace

std::string render_svg_string(const Instance& inst, const Tree* tree, const Circle* circle,
                              const std::vector<Disk>& disks,
                              const std::vector<EllipseSpec>& ellipses) {
    Box box;
    for (const Point& p : inst.points) box.add(p);
    if (circle) box.add(circle->center, circle->radius);
    for (const Disk& d : disks) box.add(d.center, d.radius);
    for (const EllipseSpec& e : ellipses) box.add(ellipse_geom(e).center, ellipse_geom(e).rx);

    const double span = std::max({box.xmax - box.xmin, box.ymax - box.ymin, 1e-9});
    const double pad = 0.06 * span;
    box.add(Point{box.xmin, box.ymin}, pad);
    box.add(Point{box.xmax, box.ymax}, pad);

    const double width = 800.0;
    const double scale = width / (box.xmax - box.xmin);
    const double height = std::ceil((box.ymax - box.ymin) * scale);
    const auto X = [&](double x) { return (x - box.xmin) * scale; };
    const auto Y = [&](double y) { return height - (y - box.ymin) * scale; };  // y up

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width)
        << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width) << " "
        << num(height) << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (const Disk& d : disks)
        svg << "<circle cx=\"" << num(X(d.center.x)) << "\" cy=\"" << num(Y(d.center.y))
            << "\" r=\"" << num(d.radius * scale)
            << "\" fill=\"steelblue\" fill-opacity=\"0.18\" stroke=\"steelblue\" "
               "stroke-width=\"1\"/>\n";

    for (const EllipseSpec& e : ellipses) {
        const EllipseGeom g = ellipse_geom(e);
        const double deg = -g.angle * 180.0 / std::numbers::pi;  // y-flip negates
        svg << "<ellipse cx=\"" << num(X(g.center.x)) << "\" cy=\"" << num(Y(g.center.y))
            << "\" rx=\"" << num(g.rx * scale) << "\" ry=\"" << num(g.ry * scale)
            << "\" transform=\"rotate(" << num(deg) << " " << num(X(g.center.x)) << " "
            << num(Y(g.center.y))
            << ")\" fill=\"none\" stroke=\"darkorange\" stroke-width=\"1.5\"/>\n";
    }

    if (tree)
        for (const Edge& e : tree->edges) {
            const Point a = inst.points[e.i];
            const Point b = inst.points[e.j];
            svg << "<line x1=\"" << num(X(a.x)) << "\" y1=\"" << num(Y(a.y)) << "\" x2=\""
                << num(X(b.x)) << "\" y2=\"" << num(Y(b.y))
                << "\" stroke=\"red\" stroke-width=\"2\"/>\n";
        }

    if (circle) {
        svg << "<circle cx=\"" << num(X(circle->center.x)) << "\" cy=\""
            << num(Y(circle->center.y)) << "\" r=\"" << num(circle->radius * scale)
            << "\" fill=\"none\" stroke=\"black\" stroke-width=\"3\"/>\n";
        const double cx = X(circle->center.x);
        const double cy = Y(circle->center.y);
        const double arm = 7.0;
        svg << "<path d=\"M " << num(cx - arm) << " " << num(cy) << " H " << num(cx + arm)
            << " M " << num(cx) << " " << num(cy - arm) << " V " << num(cy + arm)
            << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    }

    for (const Point& p : inst.points)
        svg << "<circle cx=\"" << num(X(p.x)) << "\" cy=\"" << num(Y(p.y))
            << "\" r=\"4\" fill=\"black\"/>\n";

    svg << "</svg>\n";
    return svg.str();
}

void render_svg(const Instance& inst, const Tree* tree, const Circle* circle,
                const std::vector<Disk>& disks, const std::vector<EllipseSpec>& ellipses,
                const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << render_svg_string(inst, tree, circle, disks, ellipses);
    if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace pierce
