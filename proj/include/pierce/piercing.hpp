#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pierce/enclosing.hpp"
#include "pierce/spanning.hpp"

namespace pierce {

// Similarity transform that maps the smallest enclosing circle to the unit
// circle at the origin.  Applied in order: translate, scale, rotate, then
// reflect across the x-axis if `reflected`.  When built for an edge, the
// endpoint farther from the circle center lands on the negative x-axis and
// the nearer endpoint in the closed lower half-plane (the closed third
// quadrant whenever the edge subtends less than a right angle at the center).
struct NormalizedFrame {
    Point translation;
    double rotation = 0.0;
    double scale = 1.0;
    bool reflected = false;
};

Point apply_frame(const NormalizedFrame& frame, Point x);

struct FrameResult {
    NormalizedFrame frame;
    std::vector<Point> points;
};

// Ties in "farther from the center" go to the lower-indexed endpoint.
// Throws ZeroRadius when the enclosing circle is degenerate.
FrameResult normalize_frame(const Instance& inst, const Edge& edge,
                            Tolerance tol = {}, std::uint64_t seed = kDefaultSeed);

// Indices of the points lying on the enclosing circle, split over the four
// quadrant arcs of a frame rotated by theta.  A1 covers angles [0, pi/2],
// then A2, A3, A4 counterclockwise; a point exactly on an axis belongs to
// the lower-indexed arc.
struct ArcOccupancy {
    std::vector<int> a1, a2, a3, a4;
};

ArcOccupancy arc_occupancy(const Instance& inst, double theta, Tolerance tol = {},
                           std::uint64_t seed = kDefaultSeed);

// Some pair of opposite arcs both hold a boundary point: (A1 and A3) or
// (A2 and A4).
bool lemma1_check(const Instance& inst, double theta, Tolerance tol = {},
                  std::uint64_t seed = kDefaultSeed);

struct EdgeRecord {
    Edge edge;
    double angle = 0.0;        // subtended at the circle center, in [0, pi]
    double dot_slack = 0.0;    // dot(p-c, q-c) / (|pq|^2 / 4); <= 0 means pierced
    bool contains_center = false;
};

struct PiercingReport {
    std::string instance_id;
    Tree tree;
    Circle circle;
    std::vector<EdgeRecord> edges;
    double min_angle = 0.0;
    bool verdict = false;
};

// One disk per tree edge: centered at the edge midpoint, radius half the
// edge weight.
std::vector<Disk> diametral_disks(const Instance& inst, const Tree& tree);

// Per-edge closed-disk membership of the circle center, via the sign test
// dot(p-c, q-c) <= eps_rel * |pq|^2.  An endpoint coinciding with the center
// is reported with angle pi (the center trivially lies in that disk).
PiercingReport make_piercing_report(const Instance& inst, const Tree& tree,
                                    const Circle& circle, Tolerance tol = {});

// Maximum spanning tree + smallest enclosing circle + the report above.
// A one-point instance yields an empty report with a vacuously true verdict.
PiercingReport verify_piercing(const Instance& inst, Tolerance tol = {},
                               std::uint64_t seed = kDefaultSeed);

// Minimum over tree edges of the angle subtended at the circle center.
double min_angle_at_center(const Instance& inst, Tolerance tol = {},
                           std::uint64_t seed = kDefaultSeed);

struct Lemma2Result {
    bool ok = false;
    double min_margin = 0.0;  // smallest strict-inequality slack observed
};

// Samples the three distance inequalities behind the cycle argument, for a
// pair (p, q) already in the normalized frame: p on the negative x-axis,
// q in the closed third quadrant, angle at the origin below pi/2, |p| >= |q|,
// |p| <= 1.  Inequalities: |qt| > |pq| on A1+A2, |pt| > |pq| on A1+A4, and
// |tt'| > |pq| for t on A2, t' on A4.
// Throws PreconditionViolated if the frame conditions fail.
Lemma2Result lemma2_margin(Point p, Point q, int samples, std::uint64_t seed);
bool lemma2_check(Point p, Point q, int samples, std::uint64_t seed);

// True iff every triple of disks has a common point.  A triple intersects
// iff some disk center or some pair's boundary-intersection vertex lies in
// all three disks (closed membership with tolerance).
bool helly_triples(const std::vector<Disk>& disks, Tolerance tol = {});

}  // namespace pierce
