#include "microform/graph.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace microform {

namespace {

void sort_classes(std::vector<Graph>& out) {
    std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
        if (a.nw != b.nw) return a.nw < b.nw;
        int la = a.n_edges() - a.n_vertices() + 1;
        int lb = b.n_edges() - b.n_vertices() + 1;
        if (la != lb) return la < lb;
        if (a.nb != b.nb) return a.nb < b.nb;
        return canonical_form(a) < canonical_form(b);
    });
}

// Distribute `deg` edge endpoints of one black vertex over `nw` whites as a
// multiplicity vector; invoke f for each.
void distribute(int deg, int nw, std::vector<int>& mult, int from,
                const std::function<void()>& f) {
    if (from == nw - 1) {
        mult[from] = deg;
        f();
        mult[from] = 0;
        return;
    }
    for (int take = 0; take <= deg; ++take) {
        mult[from] = take;
        distribute(deg - take, nw, mult, from + 1, f);
    }
    mult[from] = 0;
}

} // namespace

std::vector<Graph> enumerate_graphs(int n_white, int n_loops, int max_black_degree,
                                    int min_black_degree) {
    if (n_white < 0 || n_loops < 0) throw std::invalid_argument("negative enumeration bound");
    if (max_black_degree < 2) throw std::invalid_argument("max_black_degree must be >= 2");
    std::vector<Graph> out;
    std::set<std::string> seen;

    if (n_white == 0) {
        if (n_loops == 0) out.push_back(Graph::singleton_black());
        return out;
    }
    if (n_white == 1 && n_loops == 0) out.push_back(Graph::singleton_white());

    // handshake bound: E = nb + nw - 1 + b and every black degree >= min_deg
    for (int nb = 1;; ++nb) {
        int E = nb + n_white - 1 + n_loops;
        if (min_black_degree * nb > E) break;
        if (max_black_degree * nb < E) continue;
        if (E < n_white) continue; // every white needs an edge

        // non-increasing black degree sequences
        std::vector<int> degs(nb);
        std::function<void(int, int, int)> deg_rec = [&](int i, int remaining, int cap) {
            if (i == nb) {
                if (remaining != 0) return;
                // assign each black's edges to whites
                Graph g;
                g.nb = nb;
                g.nw = n_white;
                std::vector<std::vector<int>> assign(nb, std::vector<int>(n_white, 0));
                std::function<void(int)> black_rec = [&](int b) {
                    if (b == nb) {
                        Graph cand;
                        cand.nb = nb;
                        cand.nw = n_white;
                        for (int bb = 0; bb < nb; ++bb)
                            for (int w = 0; w < n_white; ++w)
                                if (assign[bb][w] > 0) cand.edges[{bb, w}] = assign[bb][w];
                        for (int w = 0; w < n_white; ++w)
                            if (cand.white_degree(w) == 0) return;
                        if (!cand.connected()) return;
                        std::string key = canonical_form(cand);
                        if (seen.insert(key).second) out.push_back(canonicalize(cand));
                        return;
                    }
                    std::vector<int> mult(n_white, 0);
                    distribute(degs[b], n_white, mult, 0, [&]() {
                        assign[b] = mult;
                        black_rec(b + 1);
                    });
                };
                black_rec(0);
                return;
            }
            int hi = std::min(cap, remaining);
            for (int d = min_black_degree; d <= hi; ++d) {
                degs[i] = d;
                deg_rec(i + 1, remaining - d, d);
            }
        };
        deg_rec(0, E, max_black_degree);
    }

    sort_classes(out);
    return out;
}

std::vector<Graph> enumerate_trees_min_degree(int n_white, int n_black, int max_black_degree,
                                              int min_black_degree) {
    std::vector<Graph> out;
    std::set<std::string> seen;
    if (n_white == 0) {
        if (n_black == 1) out.push_back(Graph::singleton_black());
        return out;
    }
    if (n_black == 0) {
        if (n_white == 1) out.push_back(Graph::singleton_white());
        return out;
    }
    int E = n_black + n_white - 1;
    if (min_black_degree * n_black > E || max_black_degree * n_black < E || E < n_white)
        return out;

    std::vector<std::vector<int>> assign(n_black, std::vector<int>(n_white, 0));
    std::function<void(int, int)> black_rec = [&](int b, int remaining) {
        if (b == n_black) {
            if (remaining != 0) return;
            Graph cand;
            cand.nb = n_black;
            cand.nw = n_white;
            for (int bb = 0; bb < n_black; ++bb)
                for (int w = 0; w < n_white; ++w)
                    if (assign[bb][w] > 0) cand.edges[{bb, w}] = assign[bb][w];
            for (int w = 0; w < n_white; ++w)
                if (cand.white_degree(w) == 0) return;
            if (!cand.connected()) return;
            if (cand.n_edges() != cand.n_vertices() - 1) return;
            std::string key = canonical_form(cand);
            if (seen.insert(key).second) out.push_back(canonicalize(cand));
            return;
        }
        std::vector<int> mult(n_white, 0);
        int left = n_black - b - 1;
        int lo = std::max(min_black_degree, remaining - max_black_degree * left);
        int hi = std::min(max_black_degree, remaining - min_black_degree * left);
        for (int d = lo; d <= hi; ++d)
            distribute(d, n_white, mult, 0, [&]() {
                assign[b] = mult;
                black_rec(b + 1, remaining - d);
            });
    };
    black_rec(0, E);
    sort_classes(out);
    return out;
}

std::vector<Graph> all_rootings(const std::vector<Graph>& classes, bool hooked) {
    std::vector<Graph> out;
    std::set<std::string> seen;
    for (const Graph& g : classes) {
        for (int b = 0; b < g.nb; ++b) {
            Graph r = with_root(g, RootSide::black, b, hooked);
            if (!r.white_leaved()) continue;
            std::string key = canonical_form(r);
            if (seen.insert(key).second) out.push_back(canonicalize(r));
        }
        for (int w = 0; w < g.nw; ++w) {
            Graph r = with_root(g, RootSide::white, w, hooked);
            if (!r.white_leaved()) continue;
            std::string key = canonical_form(r);
            if (seen.insert(key).second) out.push_back(canonicalize(r));
        }
    }
    std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
        if (a.n_vertices() != b.n_vertices()) return a.n_vertices() < b.n_vertices();
        return canonical_form(a) < canonical_form(b);
    });
    return out;
}

std::vector<WGraph> enumerate_weighted(const std::vector<Graph>& classes, int max_weight,
                                       int sum_bound) {
    std::vector<WGraph> out;
    std::set<std::string> seen;
    for (const Graph& g : classes) {
        std::vector<int> wt(g.nw, 0);
        std::function<void(int, int)> rec = [&](int w, int sum) {
            if (w == g.nw) {
                WGraph cand{g, wt};
                std::string key = canonical_form(cand);
                if (seen.insert(key).second) out.push_back(canonicalize(cand));
                return;
            }
            for (int v = 0; v <= max_weight && sum + v <= sum_bound; ++v) {
                wt[w] = v;
                rec(w + 1, sum + v);
            }
            wt[w] = 0;
        };
        rec(0, 0);
    }
    std::sort(out.begin(), out.end(), [](const WGraph& a, const WGraph& b) {
        if (a.g.nw != b.g.nw) return a.g.nw < b.g.nw;
        if (a.g.nb != b.g.nb) return a.g.nb < b.g.nb;
        return canonical_form(a) < canonical_form(b);
    });
    return out;
}

Graph with_root(const Graph& g, RootSide side, int v, bool hooked) {
    Graph r = g;
    r.root_side = side;
    r.root = v;
    r.hooked = hooked;
    return r;
}

namespace {

// Extract the component containing `keep` after removing vertex
// (`cut_side`, `cut`), rooted (hooked) at `keep`.
Graph subtree_from(const Graph& g, RootSide cut_side, int cut, RootSide keep_side, int keep,
                   bool hook) {
    int n = g.n_vertices();
    auto vid = [&](RootSide s, int v) { return s == RootSide::black ? v : g.nb + v; };
    std::vector<std::vector<int>> adj(n);
    for (auto& [k, m] : g.edges) {
        adj[k.first].push_back(g.nb + k.second);
        adj[g.nb + k.second].push_back(k.first);
    }
    std::vector<char> in(n, 0);
    std::vector<int> stack{vid(keep_side, keep)};
    in[stack[0]] = 1;
    int cutv = vid(cut_side, cut);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : adj[v])
            if (u != cutv && !in[u]) {
                in[u] = 1;
                stack.push_back(u);
            }
    }
    std::vector<int> bmap(g.nb, -1), wmap(g.nw, -1);
    int nb2 = 0, nw2 = 0;
    for (int b = 0; b < g.nb; ++b)
        if (in[b]) bmap[b] = nb2++;
    for (int w = 0; w < g.nw; ++w)
        if (in[g.nb + w]) wmap[w] = nw2++;
    Graph r;
    r.nb = nb2;
    r.nw = nw2;
    for (auto& [k, m] : g.edges)
        if (in[k.first] && in[g.nb + k.second]) r.edges[{bmap[k.first], wmap[k.second]}] = m;
    r.root_side = keep_side;
    r.root = keep_side == RootSide::black ? bmap[keep] : wmap[keep];
    r.hooked = hook;
    return r;
}

} // namespace

std::vector<Graph> root_children(const Graph& t) {
    if (t.root_side == RootSide::none) throw std::invalid_argument("root_children needs a root");
    if (!t.is_tree()) throw std::invalid_argument("cycle detected: input is not a tree");
    std::vector<Graph> children;
    if (t.root_side == RootSide::black) {
        for (auto& [k, m] : t.edges)
            if (k.first == t.root) {
                if (m != 1) throw std::invalid_argument("cycle detected: parallel edge");
                children.push_back(
                    subtree_from(t, RootSide::black, t.root, RootSide::white, k.second, true));
            }
    } else {
        for (auto& [k, m] : t.edges)
            if (k.second == t.root) {
                if (m != 1) throw std::invalid_argument("cycle detected: parallel edge");
                children.push_back(
                    subtree_from(t, RootSide::white, t.root, RootSide::black, k.first, true));
            }
    }
    return children;
}

long long symmetry_factor(const Graph& rooted_tree) {
    std::vector<Graph> children = root_children(rooted_tree);
    if (children.empty()) return 1;
    std::map<std::string, std::pair<int, const Graph*>> groups;
    for (auto& c : children) {
        auto& slot = groups[canonical_form(c)];
        slot.first += 1;
        slot.second = &c;
    }
    long long sigma = 1;
    for (auto& c : children) sigma *= symmetry_factor(c);
    for (auto& [key, grp] : groups)
        for (int i = 2; i <= grp.first; ++i) sigma *= i;
    return sigma;
}

Graph butcher_product(const Graph& tau, const Graph& theta) {
    if (tau.root_side == RootSide::none || theta.root_side == RootSide::none)
        throw std::invalid_argument("butcher product needs rooted operands");
    if (tau.root_side == theta.root_side)
        throw std::invalid_argument("butcher product needs opposite root colours");
    Graph r;
    r.nb = tau.nb + theta.nb;
    r.nw = tau.nw + theta.nw;
    for (auto& [k, m] : tau.edges) r.edges[k] = m;
    for (auto& [k, m] : theta.edges) r.edges[{k.first + tau.nb, k.second + tau.nw}] = m;
    int black_end, white_end;
    if (tau.root_side == RootSide::black) {
        black_end = tau.root;
        white_end = theta.root + tau.nw;
    } else {
        black_end = theta.root + tau.nb;
        white_end = tau.root;
    }
    r.edges[{black_end, white_end}] += 1;
    r.root_side = tau.root_side;
    r.root = tau.root;
    r.hooked = false;
    return r;
}

std::pair<Graph, Graph> cut_edge(const Graph& t, int b, int w) {
    auto it = t.edges.find({b, w});
    if (it == t.edges.end()) throw std::invalid_argument("cut_edge: no such edge");
    Graph base = t.without_root();
    base.edges[{b, w}] -= 1;
    if (base.edges[{b, w}] == 0) base.edges.erase({b, w});
    Graph black_part = subtree_from(base, RootSide::white, w, RootSide::black, b, false);
    Graph white_part = subtree_from(base, RootSide::black, b, RootSide::white, w, false);
    return {black_part, white_part};
}

} // namespace microform
