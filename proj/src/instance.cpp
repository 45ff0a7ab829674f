#include "pierce/instance.hpp"

#include <utility>

namespace pierce {

void validate_instance(const Instance& inst, Tolerance tol) {
    if (inst.points.empty())
        throw EmptyInstance("instance '" + inst.id + "' has no points");
    for (std::size_t k = 0; k < inst.points.size(); ++k) {
        if (!finite(inst.points[k]))
            throw NonFiniteCoordinate("instance '" + inst.id + "': point " +
                                      std::to_string(k) + " is not finite");
    }
    const int n = inst.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (dist(inst.points[a], inst.points[b]) <= tol.eps_abs)
                throw DuplicatePoints("instance '" + inst.id + "': points " +
                                      std::to_string(a) + " and " + std::to_string(b) +
                                      " coincide");
}

Instance make_instance(std::vector<Point> points, std::string id, Tolerance tol) {
    Instance inst{std::move(points), std::move(id)};
    validate_instance(inst, tol);
    return inst;
}

Edge make_edge(const Instance& inst, int i, int j) {
    if (i == j) throw DegenerateEdge("make_edge: i == j");
    if (i > j) std::swap(i, j);
    return Edge{i, j, dist(inst.points[i], inst.points[j])};
}

}  // namespace pierce
