#include "pierce/spanning.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace pierce {
namespace {

// Union-find with path halving and union by size.
class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int root(int a) {
        while (a != parent_[a]) {
            parent_[a] = parent_[parent_[a]];
            a = parent_[a];
        }
        return a;
    }

    bool unite(int a, int b) {
        a = root(a);
        b = root(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return true;
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
};

std::vector<std::vector<std::pair<int, double>>> adjacency(int n, const std::vector<Edge>& edges) {
    std::vector<std::vector<std::pair<int, double>>> adj(n);
    for (const Edge& e : edges) {
        adj[e.i].emplace_back(e.j, e.weight);
        adj[e.j].emplace_back(e.i, e.weight);
    }
    return adj;
}

// Tree decoded from a Prüfer sequence; returns the summed edge weights.
double prufer_weight(const std::vector<int>& seq, int n,
                     const std::vector<std::vector<double>>& w) {
    std::vector<int> degree(n, 1);
    for (int v : seq) ++degree[v];

    double total = 0.0;
    // Smallest-leaf decoding with a moving pointer; O(n) per sequence.
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int v : seq) {
        total += w[leaf][v];
        if (--degree[v] == 1 && v < ptr) {
            leaf = v;
        } else {
            while (degree[++ptr] != 1) {}
            leaf = ptr;
        }
    }
    total += w[leaf][n - 1];
    return total;
}

}  // namespace

Tree max_spanning_tree(const Instance& inst, Tolerance tol) {
    const int n = inst.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (dist(inst.points[a], inst.points[b]) <= tol.eps_abs)
                throw DuplicatePoints("max_spanning_tree: points " + std::to_string(a) +
                                      " and " + std::to_string(b) + " coincide");
    if (n <= 1) return Tree{};

    std::vector<Edge> all;
    all.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            all.push_back(Edge{i, j, dist(inst.points[i], inst.points[j])});

    std::sort(all.begin(), all.end(), [](const Edge& a, const Edge& b) {
        if (a.weight != b.weight) return a.weight > b.weight;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    });

    UnionFind uf(n);
    Tree tree;
    tree.edges.reserve(n - 1);
    for (const Edge& e : all) {
        if (uf.unite(e.i, e.j)) {
            tree.edges.push_back(e);
            tree.total_weight += e.weight;
            if (static_cast<int>(tree.edges.size()) == n - 1) break;
        }
    }
    return tree;
}

bool verify_max_tree(const Instance& inst, const Tree& tree, Tolerance tol) {
    const int n = inst.size();
    if (static_cast<int>(tree.edges.size()) != std::max(0, n - 1))
        throw NotASpanningTree("verify_max_tree: expected " + std::to_string(n - 1) +
                               " edges, got " + std::to_string(tree.edges.size()));
    UnionFind uf(n);
    for (const Edge& e : tree.edges) {
        if (e.i < 0 || e.j < 0 || e.i >= n || e.j >= n || e.i == e.j || !uf.unite(e.i, e.j))
            throw NotASpanningTree("verify_max_tree: edge set contains a cycle or bad index");
    }

    const auto adj = adjacency(n, tree.edges);

    // One DFS per source: min edge weight along the unique tree path.
    std::vector<double> path_min(n);
    std::vector<int> stack;
    for (int u = 0; u < n; ++u) {
        std::fill(path_min.begin(), path_min.end(), -1.0);
        path_min[u] = std::numeric_limits<double>::infinity();
        stack.assign(1, u);
        while (!stack.empty()) {
            const int a = stack.back();
            stack.pop_back();
            for (const auto& [b, w] : adj[a]) {
                if (path_min[b] >= 0.0) continue;
                path_min[b] = std::min(path_min[a], w);
                stack.push_back(b);
            }
        }
        for (int v = u + 1; v < n; ++v) {
            const double w = dist(inst.points[u], inst.points[v]);
            if (path_min[v] < w - (tol.eps_rel * w + tol.eps_abs)) return false;
        }
    }
    return true;
}

Tree tree_from_pairs(const Instance& inst, const std::vector<std::pair<int, int>>& pairs) {
    const int n = inst.size();
    if (static_cast<int>(pairs.size()) != std::max(0, n - 1))
        throw NotASpanningTree("tree_from_pairs: expected " + std::to_string(n - 1) +
                               " edges, got " + std::to_string(pairs.size()));
    UnionFind uf(n);
    Tree tree;
    for (const auto& [a, b] : pairs) {
        if (a < 0 || b < 0 || a >= n || b >= n || a == b)
            throw NotASpanningTree("tree_from_pairs: bad edge (" + std::to_string(a) + ", " +
                                   std::to_string(b) + ")");
        if (!uf.unite(a, b))
            throw NotASpanningTree("tree_from_pairs: edge (" + std::to_string(a) + ", " +
                                   std::to_string(b) + ") closes a cycle");
        const Edge e = make_edge(inst, a, b);
        tree.edges.push_back(e);
        tree.total_weight += e.weight;
    }
    return tree;
}

double enumerate_best_tree_weight(const Instance& inst) {
    const int n = inst.size();
    if (n > 8) throw TooLarge("enumerate_best_tree_weight: n > 8");
    if (n <= 1) return 0.0;

    std::vector<std::vector<double>> w(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            w[i][j] = dist(inst.points[i], inst.points[j]);

    if (n == 2) return w[0][1];

    // Odometer over all n^(n-2) Prüfer sequences.
    std::vector<int> seq(n - 2, 0);
    double best = -1.0;
    for (;;) {
        best = std::max(best, prufer_weight(seq, n, w));
        int k = 0;
        while (k < n - 2 && ++seq[k] == n) seq[k++] = 0;
        if (k == n - 2) break;
    }
    return best;
}

}  // namespace pierce
