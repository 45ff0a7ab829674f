#include "pierce/fingerhut.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "pierce/piercing.hpp"
#include "pierce/rng.hpp"

namespace pierce {
namespace {

struct RhoObjective {
    std::vector<Point> a;
    std::vector<Point> b;
    std::vector<double> inv_len;
    mutable long long evaluations = 0;

    RhoObjective(const Instance& inst, const std::vector<Edge>& edges) {
        a.reserve(edges.size());
        b.reserve(edges.size());
        inv_len.reserve(edges.size());
        for (const Edge& e : edges) {
            if (e.weight <= 0.0)
                throw DegenerateEdge("optimal_piercing_ratio: zero-length edge");
            a.push_back(inst.points[e.i]);
            b.push_back(inst.points[e.j]);
            inv_len.push_back(1.0 / e.weight);
        }
    }

    double operator()(Point c) const {
        ++evaluations;
        double worst = 0.0;
        for (std::size_t k = 0; k < a.size(); ++k) {
            const double r = (dist(c, a[k]) + dist(c, b[k])) * inv_len[k];
            worst = std::max(worst, r);
        }
        return worst;
    }
};

struct Vertex {
    Point x;
    double f;
};

// Standard downhill simplex in the plane; strict-improvement accepts only.
void nelder_mead(const RhoObjective& rho, Point start, double size, long long max_evals,
                 double f_tol, Point& best_x, double& best_f) {
    std::array<Vertex, 3> s{Vertex{start, rho(start)},
                            Vertex{start + Point{size, 0.0}, rho(start + Point{size, 0.0})},
                            Vertex{start + Point{0.0, size}, rho(start + Point{0.0, size})}};
    const long long stop = rho.evaluations + max_evals;
    while (rho.evaluations < stop) {
        std::sort(s.begin(), s.end(), [](const Vertex& u, const Vertex& v) { return u.f < v.f; });
        if (s[2].f - s[0].f < f_tol && dist(s[0].x, s[2].x) < f_tol) break;

        const Point centroid = midpoint(s[0].x, s[1].x);
        const Point refl = centroid + (centroid - s[2].x);
        const double f_refl = rho(refl);
        if (f_refl < s[0].f) {
            const Point expand = centroid + 2.0 * (centroid - s[2].x);
            const double f_exp = rho(expand);
            s[2] = (f_exp < f_refl) ? Vertex{expand, f_exp} : Vertex{refl, f_refl};
        } else if (f_refl < s[1].f) {
            s[2] = Vertex{refl, f_refl};
        } else {
            const Point contract = centroid + 0.5 * (s[2].x - centroid);
            const double f_con = rho(contract);
            if (f_con < s[2].f) {
                s[2] = Vertex{contract, f_con};
            } else {
                for (int k : {1, 2}) {
                    s[k].x = midpoint(s[0].x, s[k].x);
                    s[k].f = rho(s[k].x);
                }
            }
        }
    }
    for (const Vertex& v : s) {
        if (v.f < best_f) {
            best_f = v.f;
            best_x = v.x;
        }
    }
}

constexpr std::array<Point, 8> kCompass{{{1.0, 0.0},
                                         {-1.0, 0.0},
                                         {0.0, 1.0},
                                         {0.0, -1.0},
                                         {0.70710678118654752, 0.70710678118654752},
                                         {0.70710678118654752, -0.70710678118654752},
                                         {-0.70710678118654752, 0.70710678118654752},
                                         {-0.70710678118654752, -0.70710678118654752}}};

}  // namespace

double edge_ratio(Point c, Point a, Point b, Tolerance tol) {
    const double len = dist(a, b);
    if (len <= tol.eps_abs) throw DegenerateEdge("edge_ratio: coincident endpoints");
    return (dist(c, a) + dist(c, b)) / len;
}

bool in_ellipse(const EllipseSpec& e, Point x, Tolerance tol) {
    const double len = dist(e.focus_a, e.focus_b);
    return dist(e.focus_a, x) + dist(x, e.focus_b) <= e.alpha * len + tol.eps_rel * len;
}

double max_ratio(Point c, const Instance& inst, const std::vector<Edge>& edges,
                 Tolerance tol) {
    double worst = 0.0;
    for (const Edge& e : edges)
        worst = std::max(worst, edge_ratio(c, inst.points[e.i], inst.points[e.j], tol));
    return worst;
}

MinMaxResult optimal_piercing_ratio(const Instance& inst, const std::vector<Edge>& edges,
                                    double tol_opt, long long budget, std::uint64_t seed) {
    if (edges.empty()) throw Error("optimal_piercing_ratio: no edges");
    if (tol_opt <= 0.0) throw Error("optimal_piercing_ratio: tol must be positive");
    const RhoObjective rho(inst, edges);

    // Spread of the edge endpoints fixes the initial simplex scale.
    Point lo = rho.a[0], hi = rho.a[0];
    for (const auto& pts : {rho.a, rho.b})
        for (const Point& p : pts) {
            lo = Point{std::min(lo.x, p.x), std::min(lo.y, p.y)};
            hi = Point{std::max(hi.x, p.x), std::max(hi.y, p.y)};
        }
    const double spread = std::max({hi.x - lo.x, hi.y - lo.y, tol_opt});

    std::vector<Point> starts;
    starts.push_back(smallest_enclosing_circle(inst, seed).first.center);
    for (std::size_t k = 0; k < rho.a.size(); ++k)
        starts.push_back(midpoint(rho.a[k], rho.b[k]));
    Point centroid{0.0, 0.0};
    for (const Point& p : inst.points) centroid = centroid + p;
    starts.push_back((1.0 / static_cast<double>(inst.size())) * centroid);

    Point best = starts.front();
    double best_f = rho(best);
    const long long nm_share =
        std::max<long long>(64, budget / (2 * static_cast<long long>(starts.size())));
    for (const Point& s : starts) {
        if (rho.evaluations >= budget) break;
        nelder_mead(rho, s, 0.25 * spread, std::min(nm_share, budget - rho.evaluations),
                    1e-3 * tol_opt, best, best_f);
    }

    MinMaxResult result;
    result.final_step = spread * 0.25;

    // Shrinking compass refinement down to the certification resolution,
    // then a 5x5 probe at tol_opt; an improvement of more than tol_opt
    // restarts the refinement from the better point.
    double h = std::max(0.25 * spread, 4.0 * tol_opt);
    while (rho.evaluations < budget) {
        bool moved = false;
        for (const Point& d : kCompass) {
            const Point c = best + h * d;
            const double f = rho(c);
            if (f < best_f) {
                best_f = f;
                best = c;
                moved = true;
            }
        }
        if (moved) continue;
        if (h > tol_opt) {
            h = std::max(0.5 * h, tol_opt);
            continue;
        }

        // Certification probe.
        result.final_step = tol_opt;
        Point probe_best = best;
        double probe_f = best_f;
        for (int dx = -2; dx <= 2; ++dx)
            for (int dy = -2; dy <= 2; ++dy) {
                if (dx == 0 && dy == 0) continue;
                const Point c = best + Point{dx * tol_opt, dy * tol_opt};
                const double f = rho(c);
                if (f < probe_f) {
                    probe_f = f;
                    probe_best = c;
                }
            }
        if (best_f - probe_f > tol_opt) {
            best = probe_best;
            best_f = probe_f;
            h = 4.0 * tol_opt;
            continue;
        }
        if (probe_f < best_f) {
            best = probe_best;
            best_f = probe_f;
        }
        result.converged = true;
        break;
    }

    result.point = best;
    result.ratio = best_f;
    result.evaluations = rho.evaluations;
    if (!result.converged) result.final_step = h;
    return result;
}

Matching max_weight_matching_bruteforce(const Instance& inst) {
    const int n = inst.size();
    if (n % 2 != 0) throw OddCount("max_weight_matching_bruteforce: odd point count");
    if (n > 12) throw TooLarge("max_weight_matching_bruteforce: n > 12");

    Matching best;
    best.total_weight = -1.0;
    std::vector<std::pair<int, int>> current;
    std::vector<bool> used(n, false);

    // Pairs the lowest unmatched index first, partners in ascending order, so
    // matchings are generated in lexicographic order and the first strict
    // maximum is the lexicographically smallest one.
    const auto rec = [&](auto&& self, int matched, double weight) -> void {
        if (matched == n) {
            if (weight > best.total_weight) {
                best.total_weight = weight;
                best.pairs = current;
            }
            return;
        }
        int a = 0;
        while (used[a]) ++a;
        used[a] = true;
        for (int b = a + 1; b < n; ++b) {
            if (used[b]) continue;
            used[b] = true;
            current.emplace_back(a, b);
            self(self, matched + 2, weight + dist(inst.points[a], inst.points[b]));
            current.pop_back();
            used[b] = false;
        }
        used[a] = false;
    };
    rec(rec, 0, 0.0);
    return best;
}

double center_ratio_check(const Instance& inst, Tolerance tol, std::uint64_t seed) {
    const Tree tree = max_spanning_tree(inst, tol);
    const Circle circle = smallest_enclosing_circle(inst, seed).first;
    return max_ratio(circle.center, inst, tree.edges, tol);
}

RatioReport make_ratio_report(const Instance& inst, bool with_optimal, double tol_opt,
                              long long budget, Tolerance tol, std::uint64_t seed) {
    RatioReport report;
    report.instance_id = inst.id;
    const Tree tree = max_spanning_tree(inst, tol);
    report.edges = tree.edges;
    const Circle circle = smallest_enclosing_circle(inst, seed).first;

    for (const Edge& e : tree.edges)
        report.per_edge_at_center.push_back(
            edge_ratio(circle.center, inst.points[e.i], inst.points[e.j], tol));
    report.ratio_at_center = 0.0;
    for (double r : report.per_edge_at_center)
        report.ratio_at_center = std::max(report.ratio_at_center, r);

    if (with_optimal && !tree.edges.empty()) {
        report.has_optimal = true;
        report.optimal = optimal_piercing_ratio(inst, tree.edges, tol_opt, budget, seed);
        for (const Edge& e : tree.edges)
            report.per_edge_at_optimal.push_back(
                edge_ratio(report.optimal.point, inst.points[e.i], inst.points[e.j], tol));
    }
    return report;
}

namespace {

// Translate/scale a 4-point configuration so its enclosing circle is the
// unit circle at the origin.  Returns false when two points get closer than
// the degeneracy floor.
bool renormalize(std::vector<Point>& pts, std::uint64_t seed) {
    Instance tmp{pts, ""};
    const Circle c = smallest_enclosing_circle(tmp, seed).first;
    if (c.radius < 1e-9) return false;
    const double s = 1.0 / c.radius;
    for (Point& p : pts) p = s * (p - c.center);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (dist(pts[i], pts[j]) < 1e-6) return false;
    return true;
}

double score_config(const std::vector<Point>& pts, std::uint64_t seed, double tol_opt,
                    long long inner_budget) {
    Instance inst{pts, ""};
    const Tree tree = max_spanning_tree(inst);
    return optimal_piercing_ratio(inst, tree.edges, tol_opt, inner_budget, seed).ratio;
}

}  // namespace

LowerBoundResult lower_bound_search(std::uint64_t seed, int restarts, long long budget) {
    restarts = std::max(1, restarts);
    const long long per_restart = std::max<long long>(64, budget / restarts);

    std::vector<Point> global_best;
    double global_f = -1.0;
    long long spent = 0;

    for (int r = 0; r < restarts; ++r) {
        std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(r)));
        std::uniform_real_distribution<double> coord(-1.0, 1.0);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::normal_distribution<double> gauss(0.0, 1.0);
        const std::uint64_t sec_seed = mix_seed(seed, 0x5ec5eedull + r);

        std::vector<Point> cur(4);
        do {
            for (Point& p : cur) p = Point{coord(rng), coord(rng)};
        } while (!renormalize(cur, sec_seed));
        double cur_f = score_config(cur, sec_seed, 1e-4, 1200);
        ++spent;

        std::vector<Point> rest_best = cur;
        double rest_f = cur_f;

        // Annealing: geometric cooling by 0.95 per epoch.
        const long long anneal_budget = per_restart * 4 / 5;
        const double t0 = 0.03;
        double t = t0;
        const long long epoch = std::max<long long>(1, anneal_budget / 120);
        for (long long it = 0; it < anneal_budget; ++it) {
            if (it > 0 && it % epoch == 0) t *= 0.95;
            const double step = 0.02 + 0.5 * (t / t0);
            std::vector<Point> cand = cur;
            const int k = static_cast<int>(rng() % 4);
            cand[k] = cand[k] + Point{step * gauss(rng), step * gauss(rng)};
            if (!renormalize(cand, sec_seed)) continue;
            const double f = score_config(cand, sec_seed, 1e-4, 1200);
            ++spent;
            if (f > cur_f || unit(rng) < std::exp((f - cur_f) / t)) {
                cur = cand;
                cur_f = f;
                if (cur_f > rest_f) {
                    rest_f = cur_f;
                    rest_best = cur;
                }
            }
        }

        // Greedy coordinate polish with shrinking steps.
        double h = 0.02;
        while (h > 2e-6 && spent < (r + 1) * per_restart) {
            bool moved = false;
            for (int k = 0; k < 4 && !moved; ++k) {
                for (const Point& d : kCompass) {
                    std::vector<Point> cand = rest_best;
                    cand[k] = cand[k] + h * d;
                    if (!renormalize(cand, sec_seed)) continue;
                    const double f = score_config(cand, sec_seed, 1e-5, 2500);
                    ++spent;
                    if (f > rest_f + 1e-12) {
                        rest_f = f;
                        rest_best = cand;
                        moved = true;
                        break;
                    }
                }
            }
            if (!moved) h *= 0.5;
        }

        if (rest_f > global_f) {
            global_f = rest_f;
            global_best = rest_best;
        }
    }

    LowerBoundResult result;
    result.instance = make_instance(global_best, "lower-bound-s" + std::to_string(seed));
    result.evaluations = spent;
    const Tree tree = max_spanning_tree(result.instance);
    result.tree_edges = tree.edges;
    const MinMaxResult final_solve =
        optimal_piercing_ratio(result.instance, tree.edges, 1e-7, 400000, seed);
    result.rho_star = final_solve.ratio;
    result.optimal_point = final_solve.point;
    return result;
}

}  // namespace pierce
