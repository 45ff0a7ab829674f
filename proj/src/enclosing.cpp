#include "pierce/enclosing.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace pierce {
namespace {

// Containment slack for the incremental construction; well below the 1e-9
// band the library promises outward.
constexpr double kSecEps = 1e-12;

bool contains(const Circle& c, Point p) {
    const double dx = p.x - c.center.x;
    const double dy = p.y - c.center.y;
    const double r2 = c.radius * c.radius;
    return dx * dx + dy * dy <= r2 * (1.0 + kSecEps) + kSecEps * kSecEps;
}

Circle diametral(Point a, Point b) {
    return Circle{midpoint(a, b), 0.5 * dist(a, b)};
}

// Smallest circle with every boundary-set point on its rim.  For three
// points, one of the diametral circles may already cover the third; prefer
// it, it is smaller and sidesteps near-collinear circumcircle blowup.
Circle circle_of_boundary(const std::vector<Point>& pts, std::vector<int>& support) {
    switch (support.size()) {
        case 0:
            return Circle{{0.0, 0.0}, -1.0};
        case 1:
            return Circle{pts[support[0]], 0.0};
        case 2:
            return diametral(pts[support[0]], pts[support[1]]);
        default: {
            const int ia = support[0], ib = support[1], ic = support[2];
            const Point a = pts[ia], b = pts[ib], c = pts[ic];
            struct Option { Circle circ; int drop; };
            Option options[] = {{diametral(a, b), ic}, {diametral(a, c), ib},
                                {diametral(b, c), ia}};
            for (const Option& o : options) {
                if (contains(o.circ, pts[o.drop])) {
                    support.erase(std::find(support.begin(), support.end(), o.drop));
                    return o.circ;
                }
            }
            try {
                return circumcircle(a, b, c);
            } catch (const CollinearPoints&) {
                // Exactly collinear trio: the widest diametral pair covers it.
                Option* widest = &options[0];
                for (Option& o : options)
                    if (o.circ.radius > widest->circ.radius) widest = &o;
                support.erase(std::find(support.begin(), support.end(), widest->drop));
                return widest->circ;
            }
        }
    }
}

// Welzl's recursion over order[0..count), with move-to-front of points that
// force a boundary update.
Circle welzl(const std::vector<Point>& pts, std::vector<int>& order, int count,
             std::vector<int>& boundary, std::vector<int>& support) {
    if (count == 0 || boundary.size() == 3) {
        support = boundary;
        return circle_of_boundary(pts, support);
    }
    const int p = order[count - 1];
    Circle circ = welzl(pts, order, count - 1, boundary, support);
    if (circ.radius >= 0.0 && contains(circ, pts[p])) return circ;

    boundary.push_back(p);
    circ = welzl(pts, order, count - 1, boundary, support);
    boundary.pop_back();

    std::rotate(order.begin(), order.begin() + (count - 1), order.begin() + count);
    return circ;
}

}  // namespace

std::pair<Circle, SupportSet> smallest_enclosing_circle(const Instance& inst,
                                                        std::uint64_t seed) {
    const int n = inst.size();
    if (n == 0) throw EmptyInstance("smallest_enclosing_circle: no points");
    if (n == 1) return {Circle{inst.points[0], 0.0}, SupportSet{{0}}};

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<int> boundary;
    std::vector<int> support;
    Circle circ = welzl(inst.points, order, n, boundary, support);
    std::sort(support.begin(), support.end());
    return {circ, SupportSet{support}};
}

Circle sec_bruteforce(const Instance& inst) {
    const int n = inst.size();
    if (n == 0) throw EmptyInstance("sec_bruteforce: no points");
    if (n > 64) throw TooLarge("sec_bruteforce: n > 64");
    if (n == 1) return Circle{inst.points[0], 0.0};

    const auto& pts = inst.points;
    const auto covers_all = [&](const Circle& c) {
        for (const Point& p : pts)
            if (!contains(c, p)) return false;
        return true;
    };

    Circle best{{0.0, 0.0}, std::numeric_limits<double>::infinity()};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Circle c = diametral(pts[i], pts[j]);
            if (c.radius < best.radius && covers_all(c)) best = c;
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Circle c;
                try {
                    c = circumcircle(pts[i], pts[j], pts[k]);
                } catch (const CollinearPoints&) {
                    continue;
                }
                if (c.radius < best.radius && covers_all(c)) best = c;
            }
    return best;
}

}  // namespace pierce
