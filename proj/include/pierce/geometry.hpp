#pragma once

#include <cmath>
#include <optional>

#include "pierce/errors.hpp"

namespace pierce {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
    friend bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline Point midpoint(Point a, Point b) { return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}; }
inline bool finite(Point a) { return std::isfinite(a.x) && std::isfinite(a.y); }

// Undirected edge over instance indices, stored with i < j.  The weight is
// the Euclidean distance between the endpoints.
struct Edge {
    int i = 0;
    int j = 0;
    double weight = 0.0;
};

struct Circle {
    Point center;
    double radius = 0.0;
};

// A disk, optionally tagged with the edge whose diameter generated it.
struct Disk {
    Point center;
    double radius = 0.0;
    std::optional<Edge> edge;
};

struct Tolerance {
    double eps_rel = 1e-9;
    double eps_abs = 1e-12;
};

// Euclidean distance.  Symmetric, zero iff p == q.
double dist(Point p, Point q);

// Unsigned angle between the rays c->p and c->q, in [0, pi].  Computed as
// atan2(|cross|, dot), which stays accurate near 0 and pi where acos of the
// normalized dot product loses digits.
// Throws DegenerateAngle if either ray is shorter than tol.eps_abs.
double angle_at(Point c, Point p, Point q, Tolerance tol = {});

// Closed membership of x in the disk with diameter pq, via the Thales sign
// test dot(p-x, q-x) <= eps_rel * |pq|^2.  Boundary points count as inside.
// Throws DegenerateEdge if |pq| <= tol.eps_abs.
bool in_diametral_disk(Point p, Point q, Point x, Tolerance tol = {});

// Unique circle through three pairwise-distinct points.  Throws
// CollinearPoints when the doubled signed triangle area has magnitude at most
// tol.eps_abs * (max pairwise distance)^2.
Circle circumcircle(Point p, Point q, Point r, Tolerance tol = {});

}  // namespace pierce
