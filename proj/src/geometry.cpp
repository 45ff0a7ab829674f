#include "pierce/geometry.hpp"

#include <algorithm>

namespace pierce {

double dist(Point p, Point q) {
    return std::hypot(p.x - q.x, p.y - q.y);
}

double angle_at(Point c, Point p, Point q, Tolerance tol) {
    const Point u = p - c;
    const Point v = q - c;
    if (norm(u) <= tol.eps_abs || norm(v) <= tol.eps_abs)
        throw DegenerateAngle("angle_at: ray endpoint coincides with apex");
    return std::atan2(std::abs(cross(u, v)), dot(u, v));
}

bool in_diametral_disk(Point p, Point q, Point x, Tolerance tol) {
    const double d2 = dot(p - q, p - q);
    if (d2 <= tol.eps_abs * tol.eps_abs)
        throw DegenerateEdge("in_diametral_disk: zero-length diameter");
    return dot(p - x, q - x) <= tol.eps_rel * d2;
}

Circle circumcircle(Point p, Point q, Point r, Tolerance tol) {
    const double area2 = cross(q - p, r - p);  // doubled signed area
    const double dmax = std::max({dist(p, q), dist(q, r), dist(p, r)});
    if (std::abs(area2) <= tol.eps_abs * dmax * dmax)
        throw CollinearPoints("circumcircle: points are collinear");

    // Perpendicular-bisector intersection, relative to p for stability.
    const Point b = q - p;
    const Point c = r - p;
    const double bl = dot(b, b);
    const double cl = dot(c, c);
    const double ux = (c.y * bl - b.y * cl) / (2.0 * area2);
    const double uy = (b.x * cl - c.x * bl) / (2.0 * area2);
    const Point center{p.x + ux, p.y + uy};
    return {center, dist(center, p)};
}

}  // namespace pierce
