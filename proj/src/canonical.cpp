#include "microform/graph.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace microform {

bool Graph::connected() const {
    int n = n_vertices();
    if (n <= 1) return true;
    // vertex ids: blacks 0..nb-1, whites nb..nb+nw-1
    std::vector<std::vector<int>> adj(n);
    for (auto& [k, m] : edges) {
        adj[k.first].push_back(nb + k.second);
        adj[nb + k.second].push_back(k.first);
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : adj[v])
            if (!seen[u]) {
                seen[u] = 1;
                ++cnt;
                stack.push_back(u);
            }
    }
    return cnt == n;
}

int Graph::loop_count() const {
    if (!connected()) throw std::invalid_argument("loop_count requires a connected graph");
    return n_edges() - n_vertices() + 1;
}

bool Graph::white_leaved() const {
    for (int b = 0; b < nb; ++b) {
        int d = black_degree(b);
        bool is_root = root_side == RootSide::black && root == b;
        if (d == 0 && !(nb == 1 && nw == 0)) return false;
        if (d == 1 && !is_root) return false;
    }
    for (int w = 0; w < nw; ++w)
        if (white_degree(w) == 0 && !(nw == 1 && nb == 0)) return false;
    return true;
}

void Graph::validate() const {
    if (nb < 0 || nw < 0) throw std::invalid_argument("negative vertex count");
    for (auto& [k, m] : edges) {
        if (k.first < 0 || k.first >= nb || k.second < 0 || k.second >= nw)
            throw std::invalid_argument("edge endpoint out of range");
        if (m < 1) throw std::invalid_argument("edge multiplicity must be >= 1");
    }
    if (root_side != RootSide::none) {
        int n = root_side == RootSide::black ? nb : nw;
        if (root < 0 || root >= n) throw std::invalid_argument("root out of range");
    } else if (hooked) {
        throw std::invalid_argument("hook requires a root");
    }
}

namespace {

// Shared canonical-labeling engine: iterated colour refinement, then
// exhaustive search over colour-class-respecting labelings for the
// lexicographically minimal adjacency encoding. Minimal labelings form a
// coset of the automorphism group, so counting them gives |sym|.
struct CanonEngine {
    const Graph& g;
    const std::vector<int>* wt; // white weights or null

    std::vector<std::vector<std::pair<int, int>>> badj, wadj; // (other, mult)
    std::vector<int> cb, cw;                                  // colours

    explicit CanonEngine(const Graph& gr, const std::vector<int>* weights)
        : g(gr), wt(weights), badj(gr.nb), wadj(gr.nw) {
        for (auto& [k, m] : g.edges) {
            badj[k.first].push_back({k.second, m});
            wadj[k.second].push_back({k.first, m});
        }
        refine();
    }

    void refine() {
        // initial signatures
        std::vector<std::vector<long long>> sb(g.nb), sw(g.nw);
        for (int b = 0; b < g.nb; ++b) {
            std::vector<long long> s{0, g.black_degree(b)};
            std::vector<long long> mults;
            for (auto& [w, m] : badj[b]) mults.push_back(m);
            std::sort(mults.begin(), mults.end());
            s.insert(s.end(), mults.begin(), mults.end());
            s.push_back(g.root_side == RootSide::black && g.root == b ? (g.hooked ? 2 : 1) : 0);
            sb[b] = std::move(s);
        }
        for (int w = 0; w < g.nw; ++w) {
            std::vector<long long> s{1, g.white_degree(w)};
            std::vector<long long> mults;
            for (auto& [b, m] : wadj[w]) mults.push_back(m);
            std::sort(mults.begin(), mults.end());
            s.insert(s.end(), mults.begin(), mults.end());
            s.push_back(g.root_side == RootSide::white && g.root == w ? (g.hooked ? 2 : 1) : 0);
            s.push_back(wt ? (*wt)[w] : 0);
            sw[w] = std::move(s);
        }
        assign_colours(sb, sw);

        int total = g.nb + g.nw;
        for (int round = 0; round < total + 1; ++round) {
            std::vector<std::vector<long long>> nb2(g.nb), nw2(g.nw);
            for (int b = 0; b < g.nb; ++b) {
                std::vector<long long> s{cb[b]};
                std::vector<std::pair<long long, long long>> prof;
                for (auto& [w, m] : badj[b]) prof.push_back({m, cw[w]});
                std::sort(prof.begin(), prof.end());
                for (auto& [m, c] : prof) {
                    s.push_back(m);
                    s.push_back(c);
                }
                nb2[b] = std::move(s);
            }
            for (int w = 0; w < g.nw; ++w) {
                std::vector<long long> s{cw[w]};
                std::vector<std::pair<long long, long long>> prof;
                for (auto& [b, m] : wadj[w]) prof.push_back({m, cb[b]});
                std::sort(prof.begin(), prof.end());
                for (auto& [m, c] : prof) {
                    s.push_back(m);
                    s.push_back(c);
                }
                nw2[w] = std::move(s);
            }
            int before = colour_count();
            assign_colours(nb2, nw2);
            if (colour_count() == before) break;
        }
    }

    int colour_count() const {
        int mx = -1;
        for (int c : cb) mx = std::max(mx, c);
        for (int c : cw) mx = std::max(mx, c);
        return mx + 1;
    }

    // Canonical, label-independent colour ids: sort the signature tuples.
    void assign_colours(const std::vector<std::vector<long long>>& sb,
                        const std::vector<std::vector<long long>>& sw) {
        std::vector<std::vector<long long>> all;
        all.reserve(sb.size() + sw.size());
        for (auto& s : sb) all.push_back(s);
        for (auto& s : sw) all.push_back(s);
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        auto id = [&](const std::vector<long long>& s) {
            return (int)(std::lower_bound(all.begin(), all.end(), s) - all.begin());
        };
        cb.resize(g.nb);
        cw.resize(g.nw);
        for (int b = 0; b < g.nb; ++b) cb[b] = id(sb[b]);
        for (int w = 0; w < g.nw; ++w) cw[w] = id(sw[w]);
    }

    // cells in colour order
    static std::vector<std::vector<int>> cells_of(const std::vector<int>& col) {
        std::map<int, std::vector<int>> by;
        for (int v = 0; v < (int)col.size(); ++v) by[col[v]].push_back(v);
        std::vector<std::vector<int>> cells;
        for (auto& [c, vs] : by) cells.push_back(vs);
        return cells;
    }

    std::vector<int> encode(const std::vector<int>& pb, const std::vector<int>& pw) const {
        // pb[b] = new label of black b, pw likewise
        std::vector<int> enc{g.nb, g.nw, (int)g.root_side, g.hooked ? 1 : 0};
        if (g.root_side == RootSide::black)
            enc.push_back(pb[g.root]);
        else if (g.root_side == RootSide::white)
            enc.push_back(pw[g.root]);
        else
            enc.push_back(-1);
        std::vector<std::array<int, 3>> es;
        for (auto& [k, m] : g.edges) es.push_back({pb[k.first], pw[k.second], m});
        std::sort(es.begin(), es.end());
        for (auto& e : es) {
            enc.push_back(e[0]);
            enc.push_back(e[1]);
            enc.push_back(e[2]);
        }
        if (wt) {
            std::vector<int> w2(g.nw);
            for (int w = 0; w < g.nw; ++w) w2[pw[w]] = (*wt)[w];
            enc.insert(enc.end(), w2.begin(), w2.end());
        }
        return enc;
    }

    // Search all cell-respecting labelings; record minimum encoding, the
    // number of labelings attaining it, and one arg-min labeling.
    void search(std::vector<int>& best, long long& count, std::vector<int>& best_pb,
                std::vector<int>& best_pw) {
        auto bcells = cells_of(cb);
        auto wcells = cells_of(cw);

        std::vector<int> pb(g.nb, -1), pw(g.nw, -1);
        best.clear();
        count = 0;

        // assign labels cell by cell (blacks first, then whites)
        std::function<void(size_t, int, bool)> rec = [&](size_t ci, int next, bool on_white) {
            auto& cells = on_white ? wcells : bcells;
            auto& perm = on_white ? pw : pb;
            if (ci == cells.size()) {
                if (!on_white) {
                    rec(0, 0, true);
                    return;
                }
                std::vector<int> enc = encode(pb, pw);
                if (best.empty() || enc < best) {
                    best = std::move(enc);
                    count = 1;
                    best_pb = pb;
                    best_pw = pw;
                } else if (enc == best) {
                    ++count;
                }
                return;
            }
            std::vector<int> cell = cells[ci];
            std::sort(cell.begin(), cell.end());
            do {
                int lbl = next;
                for (int v : cell) perm[v] = lbl++;
                rec(ci + 1, lbl, on_white);
            } while (std::next_permutation(cell.begin(), cell.end()));
            for (int v : cells[ci]) perm[v] = -1;
        };
        rec(0, 0, false);
    }
};

std::string encode_to_string(const std::vector<int>& enc) {
    std::string s;
    s.reserve(enc.size() * 3);
    for (int x : enc) {
        s += std::to_string(x);
        s += ',';
    }
    return s;
}

struct CanonResult {
    std::vector<int> enc;
    long long aut = 0;
    std::vector<int> pb, pw;
};

CanonResult run_canon(const Graph& g, const std::vector<int>* wt) {
    g.validate();
    CanonEngine eng(g, wt);
    CanonResult res;
    eng.search(res.enc, res.aut, res.pb, res.pw);
    return res;
}

} // namespace

std::string canonical_form(const Graph& g) { return encode_to_string(run_canon(g, nullptr).enc); }

std::string canonical_form(const WGraph& wg) {
    if ((int)wg.wt.size() != wg.g.nw) throw std::invalid_argument("weight table size mismatch");
    return encode_to_string(run_canon(wg.g, &wg.wt).enc);
}

long long automorphism_count(const Graph& g) { return run_canon(g, nullptr).aut; }

long long automorphism_count(const WGraph& wg) {
    if ((int)wg.wt.size() != wg.g.nw) throw std::invalid_argument("weight table size mismatch");
    return run_canon(wg.g, &wg.wt).aut;
}

namespace {

Graph relabel(const Graph& g, const std::vector<int>& pb, const std::vector<int>& pw) {
    Graph r;
    r.nb = g.nb;
    r.nw = g.nw;
    for (auto& [k, m] : g.edges) r.edges[{pb[k.first], pw[k.second]}] += m;
    r.root_side = g.root_side;
    r.hooked = g.hooked;
    if (g.root_side == RootSide::black)
        r.root = pb[g.root];
    else if (g.root_side == RootSide::white)
        r.root = pw[g.root];
    return r;
}

} // namespace

Graph canonicalize(const Graph& g) {
    auto res = run_canon(g, nullptr);
    return relabel(g, res.pb, res.pw);
}

WGraph canonicalize(const WGraph& wg) {
    auto res = run_canon(wg.g, &wg.wt);
    WGraph r;
    r.g = relabel(wg.g, res.pb, res.pw);
    r.wt.resize(wg.g.nw);
    for (int w = 0; w < wg.g.nw; ++w) r.wt[res.pw[w]] = wg.wt[w];
    return r;
}

} // namespace microform
