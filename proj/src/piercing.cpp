#include "pierce/piercing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace pierce {
namespace {

constexpr double kPi = std::numbers::pi;

double wrap_to_2pi(double a) {
    a = std::fmod(a, 2.0 * kPi);
    if (a < 0.0) a += 2.0 * kPi;
    return a;
}

bool in_disk(const Disk& d, Point x, Tolerance tol) {
    return dist(d.center, x) <= d.radius * (1.0 + tol.eps_rel) + tol.eps_abs;
}

}  // namespace

Point apply_frame(const NormalizedFrame& frame, Point x) {
    Point y = frame.scale * (x + frame.translation);
    const double c = std::cos(frame.rotation);
    const double s = std::sin(frame.rotation);
    y = Point{c * y.x - s * y.y, s * y.x + c * y.y};
    if (frame.reflected) y.y = -y.y;
    return y;
}

FrameResult normalize_frame(const Instance& inst, const Edge& edge, Tolerance tol,
                            std::uint64_t seed) {
    const auto [circle, support] = smallest_enclosing_circle(inst, seed);
    if (circle.radius <= tol.eps_abs)
        throw ZeroRadius("normalize_frame: enclosing circle has zero radius");

    NormalizedFrame frame;
    frame.translation = Point{-circle.center.x, -circle.center.y};
    frame.scale = 1.0 / circle.radius;

    const Point a = frame.scale * (inst.points[edge.i] + frame.translation);
    const Point b = frame.scale * (inst.points[edge.j] + frame.translation);
    const Point farther = (norm(a) >= norm(b)) ? a : b;
    const Point nearer = (norm(a) >= norm(b)) ? b : a;

    frame.rotation = std::remainder(kPi - std::atan2(farther.y, farther.x), 2.0 * kPi);
    const double c = std::cos(frame.rotation);
    const double s = std::sin(frame.rotation);
    const Point nearer_rot{c * nearer.x - s * nearer.y, s * nearer.x + c * nearer.y};
    frame.reflected = nearer_rot.y > 0.0;

    FrameResult result;
    result.frame = frame;
    result.points.reserve(inst.points.size());
    for (const Point& p : inst.points) result.points.push_back(apply_frame(frame, p));
    return result;
}

ArcOccupancy arc_occupancy(const Instance& inst, double theta, Tolerance tol,
                           std::uint64_t seed) {
    const auto [circle, support] = smallest_enclosing_circle(inst, seed);
    ArcOccupancy occ;
    for (int k = 0; k < inst.size(); ++k) {
        const double d = dist(inst.points[k], circle.center);
        if (std::abs(d - circle.radius) > tol.eps_rel * circle.radius + tol.eps_abs)
            continue;
        const Point v = inst.points[k] - circle.center;
        const double a = wrap_to_2pi(std::atan2(v.y, v.x) - theta);
        if (a <= 0.5 * kPi)
            occ.a1.push_back(k);
        else if (a <= kPi)
            occ.a2.push_back(k);
        else if (a <= 1.5 * kPi)
            occ.a3.push_back(k);
        else
            occ.a4.push_back(k);
    }
    return occ;
}

bool lemma1_check(const Instance& inst, double theta, Tolerance tol, std::uint64_t seed) {
    const ArcOccupancy occ = arc_occupancy(inst, theta, tol, seed);
    return (!occ.a1.empty() && !occ.a3.empty()) || (!occ.a2.empty() && !occ.a4.empty());
}

std::vector<Disk> diametral_disks(const Instance& inst, const Tree& tree) {
    std::vector<Disk> disks;
    disks.reserve(tree.edges.size());
    for (const Edge& e : tree.edges)
        disks.push_back(Disk{midpoint(inst.points[e.i], inst.points[e.j]),
                             0.5 * e.weight, e});
    return disks;
}

PiercingReport make_piercing_report(const Instance& inst, const Tree& tree,
                                    const Circle& circle, Tolerance tol) {
    PiercingReport report;
    report.instance_id = inst.id;
    report.tree = tree;
    report.circle = circle;
    report.min_angle = kPi;
    report.verdict = true;

    const Point c = circle.center;
    for (const Edge& e : tree.edges) {
        const Point p = inst.points[e.i];
        const Point q = inst.points[e.j];
        EdgeRecord rec;
        rec.edge = e;
        const double d2 = e.weight * e.weight;
        const double raw_dot = dot(p - c, q - c);
        rec.dot_slack = raw_dot / (0.25 * d2);
        rec.contains_center = raw_dot <= tol.eps_rel * d2;
        if (norm(p - c) <= tol.eps_abs || norm(q - c) <= tol.eps_abs)
            rec.angle = kPi;  // an endpoint sits at the center: trivially pierced
        else
            rec.angle = angle_at(c, p, q, tol);
        report.min_angle = std::min(report.min_angle, rec.angle);
        report.verdict = report.verdict && rec.contains_center;
        report.edges.push_back(rec);
    }
    return report;
}

PiercingReport verify_piercing(const Instance& inst, Tolerance tol, std::uint64_t seed) {
    const Tree tree = max_spanning_tree(inst, tol);
    const auto [circle, support] = smallest_enclosing_circle(inst, seed);
    return make_piercing_report(inst, tree, circle, tol);
}

double min_angle_at_center(const Instance& inst, Tolerance tol, std::uint64_t seed) {
    return verify_piercing(inst, tol, seed).min_angle;
}

Lemma2Result lemma2_margin(Point p, Point q, int samples, std::uint64_t seed) {
    const double tol = 1e-9;
    if (std::abs(p.y) > tol || p.x >= 0.0)
        throw PreconditionViolated("lemma2: p must lie on the negative x-axis");
    if (q.x > tol || q.y > tol)
        throw PreconditionViolated("lemma2: q must lie in the closed third quadrant");
    if (norm(p) > 1.0 + tol)
        throw PreconditionViolated("lemma2: p must lie inside the unit circle");
    if (norm(q) > norm(p) + tol)
        throw PreconditionViolated("lemma2: |p| must be at least |q|");
    if (angle_at(Point{0.0, 0.0}, p, q) >= 0.5 * kPi)
        throw PreconditionViolated("lemma2: angle at the origin must be below pi/2");

    const double pq = dist(p, q);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const auto on_circle = [](double a) { return Point{std::cos(a), std::sin(a)}; };

    Lemma2Result result;
    result.min_margin = std::numeric_limits<double>::infinity();
    const auto observe = [&](double lhs) {
        result.min_margin = std::min(result.min_margin, lhs - pq);
    };

    for (int k = 0; k < samples; ++k) {
        // (i) t on A1+A2: angles in (0, pi)
        observe(dist(q, on_circle(kPi * unit(rng))));
        // (ii) t on A1+A4: angles in (-pi/2, pi/2)
        observe(dist(p, on_circle(kPi * (unit(rng) - 0.5))));
        // (iii) t on A2, t' on A4
        const Point t = on_circle(0.5 * kPi * (1.0 + unit(rng)));
        const Point t2 = on_circle(0.5 * kPi * (3.0 + unit(rng)));
        observe(dist(t, t2));
    }
    result.ok = result.min_margin > 0.0;
    return result;
}

bool lemma2_check(Point p, Point q, int samples, std::uint64_t seed) {
    return lemma2_margin(p, q, samples, seed).ok;
}

bool helly_triples(const std::vector<Disk>& disks, Tolerance tol) {
    const int n = static_cast<int>(disks.size());

    // Boundary-intersection vertices of a disk pair (clamped at tangency).
    const auto lens_vertices = [&](const Disk& a, const Disk& b, std::vector<Point>& out) {
        const double d = dist(a.center, b.center);
        if (d <= tol.eps_abs) return;  // concentric: no boundary crossing
        const double along = (d * d + a.radius * a.radius - b.radius * b.radius) / (2.0 * d);
        double h2 = a.radius * a.radius - along * along;
        const double scale = a.radius * a.radius + b.radius * b.radius + d * d;
        if (h2 < -tol.eps_rel * scale) return;  // disjoint or nested boundaries
        h2 = std::max(h2, 0.0);
        const double h = std::sqrt(h2);
        const Point u = (1.0 / d) * (b.center - a.center);
        const Point perp{-u.y, u.x};
        const Point base = a.center + along * u;
        out.push_back(base + h * perp);
        out.push_back(base - h * perp);
    };

    std::vector<Point> candidates;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const Disk* tri[3] = {&disks[i], &disks[j], &disks[k]};
                candidates.clear();
                for (const Disk* d : tri) candidates.push_back(d->center);
                lens_vertices(*tri[0], *tri[1], candidates);
                lens_vertices(*tri[0], *tri[2], candidates);
                lens_vertices(*tri[1], *tri[2], candidates);

                bool found = false;
                for (const Point& c : candidates) {
                    if (in_disk(*tri[0], c, tol) && in_disk(*tri[1], c, tol) &&
                        in_disk(*tri[2], c, tol)) {
                        found = true;
                        break;
                    }
                }
                if (!found) return false;
            }
    return true;
}

}  // namespace pierce
