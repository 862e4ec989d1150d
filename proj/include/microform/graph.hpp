#ifndef MICROFORM_GRAPH_HPP
#define MICROFORM_GRAPH_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "microform/rational.hpp"

namespace microform {

enum class RootSide { none, black, white };

// Finite bipartite multigraph with black and white vertices. Blacks carry
// generating-function coefficients, whites carry derivatives of the target
// function. Optionally rooted (rooted/hooked trees for the bracket calculus).
struct Graph {
    int nb = 0;
    int nw = 0;
    std::map<std::pair<int, int>, int> edges; // (black, white) -> multiplicity >= 1
    RootSide root_side = RootSide::none;
    int root = -1;
    bool hooked = false;

    int n_vertices() const { return nb + nw; }

    int n_edges() const {
        int e = 0;
        for (auto& [k, m] : edges) e += m;
        return e;
    }

    int black_degree(int b) const {
        int d = 0;
        for (auto& [k, m] : edges)
            if (k.first == b) d += m;
        return d;
    }
    int white_degree(int w) const {
        int d = 0;
        for (auto& [k, m] : edges)
            if (k.second == w) d += m;
        return d;
    }

    // Degree including the root hook, the effective arity of the vertex's
    // tensor factor.
    int effective_degree(RootSide side, int v) const {
        int d = side == RootSide::black ? black_degree(v) : white_degree(v);
        if (hooked && root_side == side && root == v) d += 1;
        return d;
    }

    bool connected() const;
    int loop_count() const; // |E| - |V| + 1 for connected graphs
    bool is_tree() const { return connected() && n_edges() == n_vertices() - 1; }

    // Every degree-1 vertex is white, the root excepted. The bare black
    // singleton is allowed.
    bool white_leaved() const;

    void validate() const; // structural invariants; throws on violation

    Graph without_root() const {
        Graph g = *this;
        g.root_side = RootSide::none;
        g.root = -1;
        g.hooked = false;
        return g;
    }

    static Graph singleton_black() { return Graph{1, 0, {}, RootSide::none, -1, false}; }
    static Graph singleton_white() { return Graph{0, 1, {}, RootSide::none, -1, false}; }
};

// White-weighted graph: nonnegative integer weight per white vertex,
// bookkeeping for the momentum multi-index of compositions.
struct WGraph {
    Graph g;
    std::vector<int> wt; // size nw

    int weight_sum() const {
        int s = 0;
        for (int w : wt) s += w;
        return s;
    }
};

// Canonical byte encoding; equal iff isomorphic (in the matching category).
std::string canonical_form(const Graph& g);
std::string canonical_form(const WGraph& g);

// Order of the vertex-automorphism group (parallel edges indistinguishable;
// roots, hooks and weights respected).
long long automorphism_count(const Graph& g);
long long automorphism_count(const WGraph& g);

// Relabel to the canonical representative.
Graph canonicalize(const Graph& g);
WGraph canonicalize(const WGraph& g);

// --- enumeration ---------------------------------------------------------

// Canonical representatives of connected white-leaved graphs with exactly
// n_white whites and n_loops independent cycles, black degrees in
// [min_black_degree, max_black_degree]. Deterministically sorted.
std::vector<Graph> enumerate_graphs(int n_white, int n_loops, int max_black_degree,
                                    int min_black_degree = 2);

inline std::vector<Graph> enumerate_trees(int n_white, int max_black_degree) {
    return enumerate_graphs(n_white, 0, max_black_degree);
}

// All distinct rooted (or hooked) versions of the given classes: every vertex
// choice of root that keeps degree-1 blacks legal, deduplicated canonically.
std::vector<Graph> all_rootings(const std::vector<Graph>& classes, bool hooked);

// Connected bipartite trees with black degrees >= 1 whose non-root black
// leaves are forbidden only when rooted later; used by the rooted-tree test
// universe.
std::vector<Graph> enumerate_trees_min_degree(int n_white, int n_black, int max_black_degree,
                                              int min_black_degree);

// White-weighted versions of the given classes: every assignment of weights
// 0..max_weight per white with sum <= sum_bound, deduplicated canonically.
std::vector<WGraph> enumerate_weighted(const std::vector<Graph>& classes, int max_weight,
                                       int sum_bound);

// --- rooted-tree calculus ------------------------------------------------

// Child subtrees hanging off the root, each rooted (hooked) at the vertex
// adjacent to the root.
std::vector<Graph> root_children(const Graph& t);

// sigma(t) by the bracket recursion mu_1! mu_2! ... sigma(t_1)...sigma(t_m).
long long symmetry_factor(const Graph& rooted_tree);

// Butcher product: join the hooks of a black-rooted and a white-rooted tree;
// the result is rooted at tau's root.
Graph butcher_product(const Graph& tau, const Graph& theta);

// Cut edge (b, w) of a tree: components rooted at b and at w.
std::pair<Graph, Graph> cut_edge(const Graph& t, int b, int w);

// Tree with the given root vertex.
Graph with_root(const Graph& g, RootSide side, int v, bool hooked);

} // namespace microform

#endif
