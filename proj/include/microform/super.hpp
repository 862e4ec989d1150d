#ifndef MICROFORM_SUPER_HPP
#define MICROFORM_SUPER_HPP

#include "microform/expand.hpp"

namespace microform {

// Vertex-labeled bipartite graph whose black vertices carry ordered edge
// slots (slot k of black b contracts index position k of the coefficient
// tensor). Parallel slots to the same white are indistinguishable: the slot
// list is a tuple of white targets, so each ordered object appears once.
struct OGraph {
    int nb = 0;
    int nw = 0;
    std::vector<std::vector<int>> slots; // per black: ordered white targets (0-based)

    int n_edges() const {
        int e = 0;
        for (auto& s : slots) e += (int)s.size();
        return e;
    }
    int white_degree(int w) const {
        int d = 0;
        for (auto& s : slots)
            for (int t : s) d += (t == w);
        return d;
    }
    bool connected() const;
    int loop_count() const { return n_edges() - (nb + nw) + 1; }

    Graph underlying() const; // forget the ordering
};

// Canonical encoding under slot-rank-preserving isomorphism.
std::string canonical_form(const OGraph& g);

// All vertex-labeled slot-ordered connected white-leaved graphs (no
// isomorphism quotient) with exactly n_white whites and n_loops loops.
std::vector<OGraph> enumerate_ordered_graphs(int n_white, int n_loops, int max_black_degree);

// Parity bit per coordinate index 1..d.
struct ParityTable {
    std::vector<int> parity; // values 0/1

    int at(int coordinate_1based) const { return parity.at(coordinate_1based - 1); }
    bool all_even() const {
        for (int p : parity)
            if (p) return false;
        return true;
    }
};

// Parity of a partition of the ordered index list 0..m-1 under the given
// per-position parities: blocks ordered by their last element, inversions
// counted over odd-odd pairs mod 2.
int partition_parity(const std::vector<int>& parities, const std::vector<std::vector<int>>& blocks);

// Sign exponent of an ordered graph by the drawing procedure: edges in
// global slot-rank order, whites ordered by their highest-rank edge,
// crossings between the waypoint line and the white line weighted by the
// product of the edge-index parities.
int graph_sign_exponent(const OGraph& g, const std::vector<int>& edge_parities);

// Same sign through the partition-parity route (independent formulation for
// the cross-check): whites are the blocks of the edge partition.
int graph_sign_exponent_partition(const OGraph& g, const std::vector<int>& edge_parities);

// Ordered-graph expansion with crossing signs: sum over labeled ordered
// graphs with weights (-1)^sign / (nb! nw!) and the loop factor. S is looked
// up positionally (non-symmetric mode allowed).
Expansion assemble_super(const GenFun& S, const Poly& target, const ParityTable& parities,
                         int g_order, int hbar_order);

} // namespace microform

#endif
