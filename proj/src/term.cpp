#include "microform/term.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace microform {

Rational quantum_weight(const Graph& g) {
    Rational w(1);
    for (int b = 0; b < g.nb; ++b) {
        int deg = g.effective_degree(RootSide::black, b);
        w = w * factorial(deg);
        for (auto& [k, m] : g.edges)
            if (k.first == b) w = w / factorial(m);
    }
    return w;
}

namespace {

// Edge instances in deterministic order; parallel edges expand to
// consecutive instances.
std::vector<std::pair<int, int>> edge_instances(const Graph& g) {
    std::vector<std::pair<int, int>> inst;
    for (auto& [k, m] : g.edges)
        for (int c = 0; c < m; ++c) inst.push_back(k);
    return inst;
}

struct WhiteFactorCtx {
    // derivative evaluation cache: (white id, derivative counts, extra key)
    std::map<std::tuple<int, std::vector<int>, std::vector<int>>, LamPoly> cache;
};

// Generic contraction driver. For each assignment of coordinate values
// (1..d) to edge instances, multiplies black tensor entries and white
// factors; white factors may carry free indices enumerated separately.
struct Contraction {
    const Graph& g;
    const GenFun& S;
    int lam_max;
    int out_dim;

    std::vector<std::pair<int, int>> inst;
    std::vector<std::vector<int>> black_slots; // instance ids per black
    std::vector<std::vector<int>> white_slots; // instance ids per white
    std::vector<LamPoly> phi;

    std::map<std::vector<int>, LamPoly> black_cache; // sorted idx tuple -> entry

    Contraction(const Graph& gr, const GenFun& s, int lmax)
        : g(gr), S(s), lam_max(lmax), out_dim(s.source_dim), inst(edge_instances(gr)),
          black_slots(gr.nb), white_slots(gr.nw), phi(s.phi()) {
        for (int i = 0; i < (int)inst.size(); ++i) {
            black_slots[inst[i].first].push_back(i);
            white_slots[inst[i].second].push_back(i);
        }
    }

    LamPoly black_entry(std::vector<int> idx) {
        std::sort(idx.begin(), idx.end()); // S symmetric here
        auto it = black_cache.find(idx);
        if (it != black_cache.end()) return it->second;
        LamPoly e = S.coeff_lam(idx);
        black_cache.emplace(idx, e);
        return e;
    }

    // white_factor(w, derivative coordinate values, free index tuple)
    // free_counts(w) = number of free indices the white carries.
    template <class WhiteFactor>
    std::map<std::vector<int>, LamPoly> run(int free_dim,
                                            const std::vector<int>& free_counts,
                                            WhiteFactor&& white_factor) {
        std::map<std::vector<int>, LamPoly> out;
        int ne = (int)inst.size();
        int d = S.dim;
        if (!S.symmetric) throw std::logic_error("contraction requires symmetric coefficients");

        std::vector<int> val(ne, 1);
        bool hook_black = g.hooked && g.root_side == RootSide::black;
        bool hook_white = g.hooked && g.root_side == RootSide::white;

        // odometer over d^ne edge assignments, and over the hook index when
        // present
        std::function<void(const std::vector<int>&, int)> with_hook =
            [&](const std::vector<int>& v, int hook_val) {
                // black product
                LamPoly prod = lam_const(out_dim, Scalar(1));
                for (int b = 0; b < g.nb && !prod.empty(); ++b) {
                    std::vector<int> tuple;
                    if (hook_black && g.root == b) tuple.push_back(hook_val);
                    for (int s : black_slots[b]) tuple.push_back(v[s]);
                    prod = lam_mul(prod, black_entry(tuple), lam_max);
                }
                if (prod.empty()) return;

                // whites with free indices: enumerate free assignments
                std::vector<std::vector<int>> wderiv(g.nw);
                for (int w = 0; w < g.nw; ++w) {
                    for (int s : white_slots[w]) wderiv[w].push_back(v[s]);
                    if (hook_white && g.root == w) wderiv[w].push_back(hook_val);
                    std::sort(wderiv[w].begin(), wderiv[w].end());
                }

                std::vector<int> free_all;
                std::function<void(int, LamPoly)> wrec = [&](int w, LamPoly acc) {
                    if (acc.empty()) return;
                    if (w == g.nw) {
                        std::vector<int> key = free_all;
                        std::sort(key.begin(), key.end());
                        if (hook_val != 0) key.insert(key.begin(), hook_val);
                        auto [it, fresh] = out.try_emplace(key, acc);
                        if (!fresh) lam_add(it->second, acc);
                        return;
                    }
                    int nf = free_counts.empty() ? 0 : free_counts[w];
                    std::vector<int> fidx(nf, 1);
                    std::function<void(int)> frec = [&](int j) {
                        if (j == nf) {
                            LamPoly f = white_factor(w, wderiv[w], fidx);
                            if (f.empty()) return;
                            size_t mark = free_all.size();
                            free_all.insert(free_all.end(), fidx.begin(), fidx.end());
                            wrec(w + 1, lam_mul(acc, f, lam_max));
                            free_all.resize(mark);
                            return;
                        }
                        for (int a = 1; a <= free_dim; ++a) {
                            fidx[j] = a;
                            frec(j + 1);
                        }
                    };
                    frec(0);
                };
                wrec(0, prod);
            };

        std::function<void()> all_assignments = [&]() {
            int total = 1;
            for (int i = 0; i < ne; ++i) total *= d;
            for (int t = 0; t < total; ++t) {
                int x = t;
                for (int i = 0; i < ne; ++i) {
                    val[i] = 1 + x % d;
                    x /= d;
                }
                if (g.hooked)
                    for (int a = 1; a <= d; ++a) with_hook(val, a);
                else
                    with_hook(val, 0);
            }
        };
        all_assignments();
        return out;
    }
};

} // namespace

std::map<std::vector<int>, LamPoly> contract_pullback(const Graph& g, const GenFun& S,
                                                      const Poly& target, int lam_max) {
    if (target.dim != S.dim) throw std::invalid_argument("target dimension mismatch");
    Contraction c(g, S, lam_max);
    WhiteFactorCtx ctx;
    auto wf = [&](int w, const std::vector<int>& deriv, const std::vector<int>&) -> LamPoly {
        auto key = std::make_tuple(w, deriv, std::vector<int>{});
        auto it = ctx.cache.find(key);
        if (it != ctx.cache.end()) return it->second;
        std::vector<int> idx0;
        for (int a : deriv) idx0.push_back(a - 1);
        Poly dp = target.diff_seq(idx0);
        LamPoly v = lam_eval(dp, c.phi, S.source_dim, lam_max);
        ctx.cache.emplace(key, v);
        return v;
    };
    return c.run(0, {}, wf);
}

std::map<std::vector<int>, LamPoly> contract_compose(const WGraph& wg, const GenFun& F,
                                                     const GenFun& G, int lam_max) {
    if (F.dim != G.source_dim)
        throw std::invalid_argument("target dimension of F must equal source dimension of G");
    for (int w = 0; w < wg.g.nw; ++w)
        if (wg.wt[w] > G.max_order)
            throw std::invalid_argument("white weight exceeds generating function order");
    Contraction c(wg.g, F, lam_max);
    WhiteFactorCtx ctx;
    auto wf = [&](int w, const std::vector<int>& deriv, const std::vector<int>& fidx) -> LamPoly {
        std::vector<int> fkey = fidx;
        std::sort(fkey.begin(), fkey.end());
        auto key = std::make_tuple(w, deriv, fkey);
        auto it = ctx.cache.find(key);
        if (it != ctx.cache.end()) return it->second;
        LamPoly coeff = G.coeff_lam(fkey); // weight-l_w coefficient tensor of G
        LamPoly v;
        std::vector<int> idx0;
        for (int a : deriv) idx0.push_back(a - 1);
        for (auto& [lam, p] : coeff) {
            Poly dp = p.diff_seq(idx0);
            LamPoly ev = lam_eval(dp, c.phi, F.source_dim, lam_max);
            lam_add(v, lam_shift(ev, lam, lam_max));
        }
        ctx.cache.emplace(key, v);
        return v;
    };
    std::vector<int> free_counts = wg.wt;
    return c.run(G.dim, free_counts, wf);
}

std::map<std::vector<int>, LamPoly> contract_transform(const Graph& g, const GenFun& S,
                                                       const std::vector<Poly>& y_inverse,
                                                       int lam_max) {
    for (auto& p : y_inverse)
        if (p.dim != S.dim) throw std::invalid_argument("inverse map dimension mismatch");
    Contraction c(g, S, lam_max);
    WhiteFactorCtx ctx;
    int d_new = (int)y_inverse.size();
    auto wf = [&](int w, const std::vector<int>& deriv, const std::vector<int>& fidx) -> LamPoly {
        auto key = std::make_tuple(w, deriv, fidx);
        auto it = ctx.cache.find(key);
        if (it != ctx.cache.end()) return it->second;
        std::vector<int> idx0;
        for (int a : deriv) idx0.push_back(a - 1);
        Poly dp = y_inverse[fidx[0] - 1].diff_seq(idx0);
        LamPoly v = lam_eval(dp, c.phi, S.source_dim, lam_max);
        ctx.cache.emplace(key, v);
        return v;
    };
    std::vector<int> free_counts(g.nw, 1);
    return c.run(d_new, free_counts, wf);
}

std::map<std::vector<int>, Scalar> classical_term(const Graph& t, const GenFun& S,
                                                  const Poly& target) {
    if (S.source_dim != 0) throw std::logic_error("classical_term expects constant coefficients");
    for (int b = 0; b < t.nb; ++b)
        if (t.effective_degree(RootSide::black, b) > S.max_order)
            throw std::invalid_argument("black degree exceeds generating function order");
    GenFun S0 = S.h0();
    Rational w = quantum_weight(t);
    auto raw = contract_pullback(t, S0, target, 0);
    std::map<std::vector<int>, Scalar> out;
    for (auto& [key, lp] : raw) {
        auto it = lp.find(0);
        if (it == lp.end()) continue;
        Scalar v = it->second.constant_term() * Scalar(w);
        if (!v.is_zero()) out[key] = v;
    }
    return out;
}

std::pair<LamPoly, int> quantum_term(const Graph& g, const GenFun& S, const Poly& target,
                                     int lam_max) {
    for (int v = 0; v < g.nb; ++v)
        if (g.effective_degree(RootSide::black, v) > S.max_order)
            throw std::invalid_argument("black degree exceeds generating function order");
    int b = g.loop_count();
    Rational w = quantum_weight(g);
    auto raw = contract_pullback(g, S, target, lam_max);
    LamPoly v;
    auto it = raw.find({});
    if (it != raw.end()) v = lam_scale(it->second, Scalar(w));
    return {v, b};
}

} // namespace microform
