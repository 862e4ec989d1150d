#include "microform/super.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace microform {

bool OGraph::connected() const {
    int n = nb + nw;
    if (n <= 1) return true;
    std::vector<std::vector<int>> adj(n);
    for (int b = 0; b < nb; ++b)
        for (int w : slots[b]) {
            adj[b].push_back(nb + w);
            adj[nb + w].push_back(b);
        }
    std::vector<char> seen(n, 0);
    std::vector<int> st{0};
    seen[0] = 1;
    int cnt = 1;
    while (!st.empty()) {
        int v = st.back();
        st.pop_back();
        for (int u : adj[v])
            if (!seen[u]) {
                seen[u] = 1;
                ++cnt;
                st.push_back(u);
            }
    }
    return cnt == n;
}

Graph OGraph::underlying() const {
    Graph g;
    g.nb = nb;
    g.nw = nw;
    for (int b = 0; b < nb; ++b)
        for (int w : slots[b]) g.edges[{b, w}] += 1;
    return g;
}

std::string canonical_form(const OGraph& g) {
    // minimize the slot table over all vertex relabelings; desk-scale sizes
    std::vector<int> pb(g.nb), pw(g.nw);
    std::iota(pb.begin(), pb.end(), 0);
    std::iota(pw.begin(), pw.end(), 0);
    std::vector<std::vector<int>> best;
    std::sort(pb.begin(), pb.end());
    do {
        std::vector<int> pwi(g.nw);
        std::iota(pwi.begin(), pwi.end(), 0);
        std::sort(pwi.begin(), pwi.end());
        do {
            // relabeled slot table: row pb[b] gets black b's slots through pwi
            std::vector<std::vector<int>> table(g.nb);
            for (int b = 0; b < g.nb; ++b) {
                std::vector<int> row;
                for (int w : g.slots[b]) row.push_back(pwi[w]);
                table[pb[b]] = std::move(row);
            }
            if (best.empty() || table < best) best = table;
        } while (std::next_permutation(pwi.begin(), pwi.end()));
    } while (std::next_permutation(pb.begin(), pb.end()));
    std::string s = std::to_string(g.nb) + ";" + std::to_string(g.nw) + ";";
    for (auto& row : best) {
        for (int w : row) s += std::to_string(w) + ",";
        s += "|";
    }
    return s;
}

std::vector<OGraph> enumerate_ordered_graphs(int n_white, int n_loops, int max_black_degree) {
    if (max_black_degree < 2) throw std::invalid_argument("max_black_degree must be >= 2");
    std::vector<OGraph> out;
    if (n_white == 0) {
        if (n_loops == 0) out.push_back(OGraph{1, 0, {{}}});
        return out;
    }
    if (n_white == 1 && n_loops == 0) out.push_back(OGraph{0, 1, {}});

    for (int nb = 1;; ++nb) {
        int E = nb + n_white - 1 + n_loops;
        if (2 * nb > E) break;
        if (max_black_degree * nb < E) continue;
        if (E < n_white) continue;

        OGraph g;
        g.nb = nb;
        g.nw = n_white;
        g.slots.assign(nb, {});
        std::function<void(int, int)> rec = [&](int b, int remaining) {
            if (b == nb) {
                if (remaining != 0) return;
                for (int w = 0; w < n_white; ++w)
                    if (g.white_degree(w) == 0) return;
                if (!g.connected()) return;
                out.push_back(g);
                return;
            }
            int lo = 2, hi = std::min(max_black_degree, remaining - 2 * (nb - b - 1));
            for (int d = lo; d <= hi; ++d) {
                // ordered tuples of length d over whites, nondecreasing runs
                // collapse parallel slots: enumerate tuples directly but skip
                // those that merely permute equal neighbours? Parallel slots
                // to one white are already a single tuple entry pattern, so
                // enumerate all tuples and keep them verbatim.
                std::vector<int> tup(d, 0);
                std::function<void(int)> trec = [&](int i) {
                    if (i == d) {
                        g.slots[b] = tup;
                        rec(b + 1, remaining - d);
                        g.slots[b].clear();
                        return;
                    }
                    for (int w = 0; w < n_white; ++w) {
                        tup[i] = w;
                        trec(i + 1);
                    }
                };
                trec(0);
            }
        };
        rec(0, E);
    }
    return out;
}

int partition_parity(const std::vector<int>& parities, const std::vector<std::vector<int>>& blocks) {
    int m = (int)parities.size();
    // validate: blocks partition 0..m-1
    std::vector<int> seen(m, 0);
    for (auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("empty partition block");
        for (int i : b) {
            if (i < 0 || i >= m || seen[i]) throw std::invalid_argument("not a partition");
            seen[i] = 1;
        }
    }
    for (int s : seen)
        if (!s) throw std::invalid_argument("not a partition");

    // order blocks by their last (largest) element; within blocks keep the
    // inherited order
    std::vector<std::vector<int>> ordered = blocks;
    for (auto& b : ordered) std::sort(b.begin(), b.end());
    std::sort(ordered.begin(), ordered.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a.back() < b.back(); });
    std::vector<int> rank(m);
    int r = 0;
    for (auto& b : ordered)
        for (int i : b) rank[i] = r++;

    int par = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (rank[i] > rank[j]) par += parities[i] * parities[j];
    return par % 2;
}

namespace {

// global edge ranks in (black, slot) order and the white position order by
// highest-rank attached edge
struct DrawnGraph {
    std::vector<int> edge_white;   // per edge rank: target white
    std::vector<int> white_pos;    // per white: position on the white line
};

DrawnGraph draw(const OGraph& g) {
    DrawnGraph d;
    for (int b = 0; b < g.nb; ++b)
        for (int w : g.slots[b]) d.edge_white.push_back(w);
    int ne = (int)d.edge_white.size();
    std::vector<int> max_rank(g.nw, -1);
    for (int e = 0; e < ne; ++e) max_rank[d.edge_white[e]] = e;
    std::vector<int> order(g.nw);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return max_rank[a] < max_rank[b]; });
    d.white_pos.resize(g.nw);
    for (int p = 0; p < g.nw; ++p) d.white_pos[order[p]] = p;
    return d;
}

} // namespace

int graph_sign_exponent(const OGraph& g, const std::vector<int>& edge_parities) {
    DrawnGraph d = draw(g);
    int ne = (int)d.edge_white.size();
    if ((int)edge_parities.size() != ne) throw std::invalid_argument("missing edge parity");
    int par = 0;
    // segments run from waypoint (height = rank) to white (height = position);
    // two segments cross iff rank order and white position order disagree
    for (int e1 = 0; e1 < ne; ++e1)
        for (int e2 = e1 + 1; e2 < ne; ++e2) {
            int w1 = d.edge_white[e1], w2 = d.edge_white[e2];
            if (w1 == w2) continue;
            if (d.white_pos[w1] > d.white_pos[w2]) par += edge_parities[e1] * edge_parities[e2];
        }
    return par % 2;
}

int graph_sign_exponent_partition(const OGraph& g, const std::vector<int>& edge_parities) {
    // whites are blocks of the edge-index partition
    std::vector<std::vector<int>> blocks(g.nw);
    int rank = 0;
    for (int b = 0; b < g.nb; ++b)
        for (int w : g.slots[b]) blocks[w].push_back(rank++);
    std::vector<std::vector<int>> nonempty;
    for (auto& b : blocks)
        if (!b.empty()) nonempty.push_back(b);
    return partition_parity(edge_parities, nonempty);
}

Expansion assemble_super(const GenFun& S, const Poly& target, const ParityTable& parities,
                         int g_order, int hbar_order) {
    if ((int)parities.parity.size() != S.dim)
        throw std::invalid_argument("parity table incomplete");
    if (target.dim != S.dim) throw std::invalid_argument("target dimension mismatch");

    Expansion e;
    e.op = Expansion::Op::pullback;
    e.quantum = true;
    e.g_order = g_order;
    e.hbar_order = hbar_order;
    e.mom_order = 0;
    e.out_dim = 0;

    std::vector<LamPoly> phi = S.phi();

    for (int nw = 0; nw <= g_order; ++nw) {
        for (int b = 0; b <= hbar_order; ++b) {
            for (const OGraph& og : enumerate_ordered_graphs(nw, b, S.max_order)) {
                Term t;
                t.g = og.underlying();
                t.sym = 1;
                t.lam_power = b;
                Rational fact = factorial(og.nb) * factorial(og.nw);
                t.coefficient = Rational(1) / fact;

                // assignment of coordinate values to edge ranks
                int ne = og.n_edges();
                int d = S.dim;
                int total = 1;
                for (int i = 0; i < ne; ++i) total *= d;
                LamPoly acc;
                std::vector<int> val(ne);
                for (int a = 0; a < total; ++a) {
                    int x = a;
                    for (int i = 0; i < ne; ++i) {
                        val[i] = 1 + x % d;
                        x /= d;
                    }
                    // black entries: positional lookup in slot order
                    LamPoly prod = lam_const(S.source_dim, Scalar(1));
                    int rank = 0;
                    for (int bb = 0; bb < og.nb && !prod.empty(); ++bb) {
                        std::vector<int> tuple;
                        for (size_t s = 0; s < og.slots[bb].size(); ++s) tuple.push_back(val[rank++]);
                        LamPoly entry = S.coeff_lam(tuple);
                        prod = lam_mul(prod, entry, hbar_order - b);
                    }
                    if (prod.empty()) continue;
                    // white derivative factors
                    std::vector<std::vector<int>> wderiv(og.nw);
                    rank = 0;
                    for (int bb = 0; bb < og.nb; ++bb)
                        for (int w : og.slots[bb]) wderiv[w].push_back(val[rank++]);
                    for (int w = 0; w < og.nw && !prod.empty(); ++w) {
                        std::vector<int> idx0;
                        for (int aa : wderiv[w]) idx0.push_back(aa - 1);
                        Poly dp = target.diff_seq(idx0);
                        prod = lam_mul(prod, lam_eval(dp, phi, S.source_dim, hbar_order - b),
                                       hbar_order - b);
                    }
                    if (prod.empty()) continue;
                    // crossing sign for this index assignment
                    std::vector<int> epar(ne);
                    for (int i = 0; i < ne; ++i) epar[i] = parities.at(val[i]);
                    if (graph_sign_exponent(og, epar) == 1)
                        prod = lam_scale(prod, Scalar(-1));
                    lam_add(acc, prod);
                }
                if (!acc.empty()) t.values[{}] = std::move(acc);
                e.terms.push_back(std::move(t));
            }
        }
    }
    return e;
}

} // namespace microform
