#pragma once

#include <vector>

#include "pierce/instance.hpp"

namespace pierce {

// Spanning tree over instance indices: exactly n-1 edges, connected, acyclic.
struct Tree {
    std::vector<Edge> edges;
    double total_weight = 0.0;
};

// Maximum-weight spanning tree of the complete Euclidean graph over the
// instance, by Kruskal's rule: all n(n-1)/2 edges sorted by weight
// descending, ties broken by ascending (i, j), an edge taken iff it joins two
// distinct components.  Deterministic for a fixed input order.  A single
// point yields the empty tree.
// Throws DuplicatePoints if two points coincide within tol.eps_abs.
Tree max_spanning_tree(const Instance& inst, Tolerance tol = {});

// Certifies maximality without enumeration via the cycle rule: for every
// non-tree edge (u, v), every edge on the unique tree path between u and v
// must weigh at least weight(u, v) minus tolerance.
// Throws NotASpanningTree if the edge set is not a spanning tree.
bool verify_max_tree(const Instance& inst, const Tree& tree, Tolerance tol = {});

// Exhaustive oracle: enumerates all n^(n-2) labeled spanning trees through
// Prüfer sequences and returns the maximum total weight.  Independent of the
// Kruskal path above.  Throws TooLarge for n > 8.
double enumerate_best_tree_weight(const Instance& inst);

// Builds a Tree from explicit index pairs (weights filled in from the
// instance), validating the spanning structure.  Throws NotASpanningTree.
Tree tree_from_pairs(const Instance& inst,
                     const std::vector<std::pair<int, int>>& pairs);

}  // namespace pierce
