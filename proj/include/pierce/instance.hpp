#pragma once

#include <string>
#include <vector>

#include "pierce/geometry.hpp"

namespace pierce {

// An ordered list of planar points; indices into `points` identify vertices
// everywhere else in the library.
struct Instance {
    std::vector<Point> points;
    std::string id;

    int size() const { return static_cast<int>(points.size()); }
};

// Validates and builds an instance: at least one point, all coordinates
// finite, no two points within tol.eps_abs of each other.
// Throws EmptyInstance, NonFiniteCoordinate or DuplicatePoints.
Instance make_instance(std::vector<Point> points, std::string id = "", Tolerance tol = {});

// Validation used by make_instance, callable on an existing instance.
void validate_instance(const Instance& inst, Tolerance tol = {});

// Edge between two instance points with the canonical i < j orientation and
// the Euclidean weight filled in.
Edge make_edge(const Instance& inst, int i, int j);

}  // namespace pierce
