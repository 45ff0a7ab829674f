#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pierce/enclosing.hpp"
#include "pierce/spanning.hpp"

namespace pierce {

// The ellipse of focal sum alpha * |ab| around an edge (a, b); alpha = 1
// degenerates to the segment itself.
struct EllipseSpec {
    Point focus_a;
    Point focus_b;
    double alpha = 1.0;
};

// (|ca| + |cb|) / |ab|; at least 1 by the triangle inequality.
// Throws DegenerateEdge if |ab| <= tol.eps_abs.
double edge_ratio(Point c, Point a, Point b, Tolerance tol = {});

// Closed membership: |ax| + |xb| <= alpha * |ab| + eps_rel * |ab|.
bool in_ellipse(const EllipseSpec& e, Point x, Tolerance tol = {});

// rho(c): the largest edge_ratio over the given edges.
double max_ratio(Point c, const Instance& inst, const std::vector<Edge>& edges,
                 Tolerance tol = {});

struct MinMaxResult {
    Point point;
    double ratio = 0.0;
    bool converged = false;    // false when the budget ran out first
    long long evaluations = 0;
    double final_step = 0.0;   // resolution of the last certification probe
};

// Minimizes the convex function rho(c) = max_e edge_ratio(c, .) by
// multi-start downhill simplex (starts: enclosing-circle center, edge
// midpoints, centroid) followed by shrinking compass refinement.  The result
// is certified by a local grid probe at resolution tol_opt: no probed point
// improves by more than tol_opt.  If the evaluation budget runs out first,
// the best point so far is returned with converged = false.
MinMaxResult optimal_piercing_ratio(const Instance& inst, const std::vector<Edge>& edges,
                                    double tol_opt = 1e-6, long long budget = 200000,
                                    std::uint64_t seed = kDefaultSeed);

// Perfect matching as disjoint index pairs covering every point.
struct Matching {
    std::vector<std::pair<int, int>> pairs;
    double total_weight = 0.0;
};

// Exhaustive search over all (n-1)!! perfect matchings; ties resolved toward
// the lexicographically smallest pair list.  Throws OddCount for odd n and
// TooLarge for n > 12.
Matching max_weight_matching_bruteforce(const Instance& inst);

// rho at the enclosing-circle center over the maximum spanning tree edges.
double center_ratio_check(const Instance& inst, Tolerance tol = {},
                          std::uint64_t seed = kDefaultSeed);

// Ratio analysis of the maximum tree; the optimal block is filled only when
// requested (the solver is the expensive part).
struct RatioReport {
    std::string instance_id;
    std::vector<Edge> edges;
    double ratio_at_center = 0.0;
    std::vector<double> per_edge_at_center;
    bool has_optimal = false;
    MinMaxResult optimal;
    std::vector<double> per_edge_at_optimal;
};

RatioReport make_ratio_report(const Instance& inst, bool with_optimal,
                              double tol_opt = 1e-6, long long budget = 200000,
                              Tolerance tol = {}, std::uint64_t seed = kDefaultSeed);

struct LowerBoundResult {
    Instance instance;            // 4 points, scaled to enclosing radius 1
    double rho_star = 0.0;
    Point optimal_point;
    std::vector<Edge> tree_edges;
    long long evaluations = 0;    // configurations scored
};

// Simulated-annealing search over 4-point configurations maximizing the
// optimal piercing ratio of the maximum-spanning-tree edges.  Restarts are
// independent given the seed and reduced by best value, earlier restart
// winning ties, so results are reproducible.
LowerBoundResult lower_bound_search(std::uint64_t seed, int restarts, long long budget);

}  // namespace pierce
