#include "microform/oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace microform {

TargetFunction TargetFunction::from_genfun(const GenFun& G) {
    TargetFunction t;
    t.y_dim = G.source_dim;
    t.mom_dim = G.dim;
    for (auto& [k, p] : G.coeffs) {
        auto& [h, idx] = k;
        Poly add = G.symmetric ? p.scaled(Scalar(tuple_orderings(idx))) : p;
        std::vector<int> key = idx;
        std::sort(key.begin(), key.end());
        auto [it, fresh] = t.parts.try_emplace({key, h}, add);
        if (!fresh) it->second += add;
    }
    return t;
}

TargetFunction TargetFunction::from_coordinate_change(const std::vector<Poly>& y_inverse) {
    TargetFunction t;
    t.y_dim = y_inverse.empty() ? 0 : y_inverse[0].dim;
    t.mom_dim = (int)y_inverse.size();
    for (int a = 1; a <= (int)y_inverse.size(); ++a)
        if (!y_inverse[a - 1].is_zero()) t.parts[{{a}, 0}] = y_inverse[a - 1];
    return t;
}

namespace {

// eps * dG/dy^alpha evaluated at the series point ybar.
Series target_derivative(const TargetFunction& G, int alpha0, const std::vector<Series>& ybar,
                         Trunc tr, bool allow_lam) {
    Series r(tr);
    for (auto& [k, p] : G.parts) {
        auto& [J, h] = k;
        if (h != 0 && !allow_lam) throw std::invalid_argument("classical oracle requires hbar-free target");
        Poly dp = p.diff(alpha0);
        if (dp.is_zero()) continue;
        Series s = poly_substitute(dp, ybar, tr);
        SKey shift;
        shift.eps = 1;
        shift.lam = h;
        shift.mom = J;
        Series mono(tr);
        mono.add_term(shift, Scalar(1));
        r += s * mono;
    }
    return r;
}

Series target_value(const TargetFunction& G, const std::vector<Series>& ybar, Trunc tr,
                    bool allow_lam) {
    Series r(tr);
    for (auto& [k, p] : G.parts) {
        auto& [J, h] = k;
        if (h != 0 && !allow_lam) throw std::invalid_argument("classical oracle requires hbar-free target");
        Series s = poly_substitute(p, ybar, tr);
        SKey shift;
        shift.eps = 1;
        shift.lam = h;
        shift.mom = J;
        Series mono(tr);
        mono.add_term(shift, Scalar(1));
        r += s * mono;
    }
    return r;
}

} // namespace

FixedPoint solve_fixed_point(const GenFun& S, const TargetFunction& G, int eps_order,
                             int mom_order) {
    if (S.source_dim != 0) throw std::invalid_argument("oracle requires constant coefficients");
    if (G.y_dim != S.dim) throw std::invalid_argument("target dimension mismatch");
    Trunc tr{eps_order, 0, mom_order};
    int d = S.dim;
    Poly Sq = S.momentum_poly(0); // classical slice

    std::vector<Series> qbar(d, Series(tr)), ybar(d, Series(tr));
    auto step = [&](const std::vector<Series>& q) {
        std::vector<Series> y(d, Series(tr));
        for (int a = 0; a < d; ++a) y[a] = poly_substitute(Sq.diff(a), q, tr);
        std::vector<Series> q2(d, Series(tr));
        for (int a = 0; a < d; ++a) q2[a] = target_derivative(G, a, y, tr, false);
        return std::pair{q2, y};
    };

    bool stable = false;
    for (int it = 0; it <= eps_order + 2; ++it) {
        auto [q2, y2] = step(qbar);
        if (q2 == qbar && it > 0) {
            ybar = y2;
            stable = true;
            break;
        }
        qbar = q2;
        ybar = y2;
    }
    if (!stable) {
        auto [q2, y2] = step(qbar);
        if (q2 != qbar)
            throw std::runtime_error("fixed-point iteration failed to converge: grading bug");
        ybar = y2;
    }

    Series R = poly_substitute(Sq, qbar, tr) + target_value(G, ybar, tr, false);
    for (int a = 0; a < d; ++a) R -= ybar[a] * qbar[a];

    return FixedPoint{qbar, ybar, R};
}

Series general_R(const GenFun& S, const TargetFunction& G, int eps_order, int mom_order) {
    return solve_fixed_point(S, G, eps_order, mom_order).R;
}

std::pair<std::vector<Series>, std::vector<Series>> fixed_point_residuals(
    const GenFun& S, const TargetFunction& G, const FixedPoint& fp, int eps_order,
    int mom_order) {
    Trunc tr{eps_order, 0, mom_order};
    int d = S.dim;
    Poly Sq = S.momentum_poly(0);
    std::vector<Series> rq, ry;
    for (int a = 0; a < d; ++a) {
        rq.push_back(fp.qbar[a] - target_derivative(G, a, fp.ybar, tr, false));
        ry.push_back(fp.ybar[a] - poly_substitute(Sq.diff(a), fp.qbar, tr));
    }
    return {rq, ry};
}

// ---------------------------------------------------------------------------
// quantum oracle
// ---------------------------------------------------------------------------

namespace {

// State of the operator expansion: P(y) * exp((i/hb) eps G(y)) with P kept as
// polynomial buckets over (eps, lam, mom).
struct OpState {
    int y_dim;
    int eps_max;
    int lam_budget; // lam <= hbar_order + (eps_max - eps)
    int hbar_order;
    int mom_max;
    std::map<SKey, Poly> buckets;

    void add(SKey k, const Poly& p) {
        if (p.is_zero()) return;
        if (k.eps > eps_max || (int)k.mom.size() > mom_max) return;
        if (k.lam > hbar_order + (eps_max - k.eps)) return;
        std::sort(k.mom.begin(), k.mom.end());
        auto [it, fresh] = buckets.try_emplace(std::move(k), p);
        if (!fresh) {
            it->second += p;
            if (it->second.is_zero()) buckets.erase(it);
        }
    }
};

// d/dy^a acting on P * exp((i/hb) eps G): new P = dP/dy^a + sum over target
// parts of eps (hb/i)^{h-1} * i * ... concretely (i/hb) eps dG * P, with the
// 1/hb realized as lam -1 and the i folded into the scalar.
OpState apply_derivative(const OpState& s, int a0, const TargetFunction& G) {
    OpState r = s;
    r.buckets.clear();
    for (auto& [k, p] : s.buckets) {
        Poly dp = p.diff(a0);
        if (!dp.is_zero()) r.add(k, dp);
        for (auto& [gk, gp] : G.parts) {
            auto& [J, h] = gk;
            Poly dg = gp.diff(a0);
            if (dg.is_zero()) continue;
            SKey k2 = k;
            k2.eps += 1;
            k2.lam += h - 1;
            k2.mom.insert(k2.mom.end(), J.begin(), J.end());
            // (i/hb) is exactly (hb/i)^{-1}: a pure lam shift
            r.add(std::move(k2), dg * p);
        }
    }
    return r;
}

} // namespace

Series quantum_oracle(const GenFun& S, const TargetFunction& G, int eps_order, int hbar_order,
                      int mom_order) {
    if (S.source_dim != 0) throw std::invalid_argument("oracle requires constant coefficients");
    if (G.y_dim != S.dim) throw std::invalid_argument("target dimension mismatch");
    int d = S.dim;
    int lam_internal = hbar_order + eps_order;
    Trunc tri{eps_order, lam_internal, mom_order};

    OpState init{d, eps_order, lam_internal, hbar_order, mom_order, {}};
    init.add(SKey{}, Poly::constant(d, Scalar(1)));

    // operator pieces: for each hbar level h and momentum monomial of S of
    // order m >= 2, a factor (hb/i)^{m-1+h} c i^{-h}? The file-to-internal
    // conversion already folded i powers into coefficients, so the entry is
    // taken as is: (i/hb) S^+((hb/i) d) contributes lam^(m-1+h) c D^m.
    struct Piece {
        int lam;
        Scalar c;
        std::vector<int> deriv; // 0-based coordinate list
    };
    std::vector<Piece> pieces;
    for (int h : S.lam_levels()) {
        Poly Sq = S.momentum_poly(h);
        for (auto& [e, c] : Sq.ms) {
            int m = 0;
            for (int x : e) m += x;
            if (m < 2) continue;
            Piece p;
            p.lam = m - 1 + h;
            p.c = c;
            for (int i = 0; i < d; ++i)
                for (int k = 0; k < e[i]; ++k) p.deriv.push_back(i);
            pieces.push_back(std::move(p));
        }
    }

    auto apply_op = [&](const OpState& s) {
        OpState out = s;
        out.buckets.clear();
        for (const Piece& pc : pieces) {
            OpState cur = s;
            for (int a0 : pc.deriv) cur = apply_derivative(cur, a0, G);
            for (auto& [k, p] : cur.buckets) {
                SKey k2 = k;
                k2.lam += pc.lam;
                out.add(std::move(k2), p.scaled(pc.c));
            }
        }
        return out;
    };

    OpState total = init;
    OpState cur = init;
    int n_max = eps_order + hbar_order + 1;
    for (int n = 1; n <= n_max + 1; ++n) {
        cur = apply_op(cur);
        if (cur.buckets.empty()) break;
        // divide by n
        Scalar inv(Rational(1, n));
        OpState scaled = cur;
        scaled.buckets.clear();
        for (auto& [k, p] : cur.buckets) scaled.add(k, p.scaled(inv));
        cur = scaled;
        for (auto& [k, p] : cur.buckets) total.add(k, p);
    }

    // evaluate buckets at phi (lam-graded constants)
    std::vector<LamPoly> phi = S.phi();
    std::vector<std::map<int, Scalar>> phis(d);
    for (int a = 0; a < d; ++a)
        for (auto& [l, p] : phi[a]) phis[a][l] = p.constant_term();

    auto eval_at_phi = [&](const Poly& p) {
        // lam-graded scalar result
        std::map<int, Scalar> r;
        for (auto& [e, c] : p.ms) {
            std::map<int, Scalar> t{{0, c}};
            for (int i = 0; i < d; ++i)
                for (int k = 0; k < e[i]; ++k) {
                    std::map<int, Scalar> t2;
                    for (auto& [l1, c1] : t)
                        for (auto& [l2, c2] : phis[i]) {
                            if (l1 + l2 > lam_internal) continue;
                            Scalar v = c1 * c2;
                            if (!v.is_zero()) {
                                auto [it, fresh] = t2.try_emplace(l1 + l2, v);
                                if (!fresh) it->second += v;
                            }
                        }
                    t = std::move(t2);
                }
            for (auto& [l, c2] : t) {
                if (c2.is_zero()) continue;
                auto [it, fresh] = r.try_emplace(l, c2);
                if (!fresh) it->second += c2;
            }
        }
        return r;
    };

    Series V(tri);
    for (auto& [k, p] : total.buckets) {
        auto vals = eval_at_phi(p);
        for (auto& [l, c] : vals) {
            SKey k2 = k;
            k2.lam += l;
            V.add_term(std::move(k2), c);
        }
    }

    // exponent: S^0 + eps G(phi) + (hb/i) log V
    Series A = V.log().shifted(0, 1);
    for (auto& [l, p] : S.coeff_lam({})) A.add_term(SKey{0, l, {}}, p.constant_term());
    std::vector<Series> phi_series(d, Series(tri));
    for (int a = 0; a < d; ++a)
        for (auto& [l, c] : phis[a]) phi_series[a].add_term(SKey{0, l, {}}, c);
    for (auto& [gk, gp] : G.parts) {
        auto& [J, h] = gk;
        Series s = poly_substitute(gp, phi_series, tri);
        SKey shift;
        shift.eps = 1;
        shift.lam = h;
        shift.mom = J;
        Series mono(tri);
        mono.add_term(shift, Scalar(1));
        A += s * mono;
    }

    return A.lam_slice_checked(hbar_order);
}

// ---------------------------------------------------------------------------

namespace {

void set_partitions(int m, const std::function<void(const std::vector<std::vector<int>>&)>& f) {
    std::vector<std::vector<int>> blocks;
    std::function<void(int)> rec = [&](int i) {
        if (i == m) {
            f(blocks);
            return;
        }
        // recursion grows and shrinks `blocks`, so index, never hold a
        // reference across the call
        size_t n = blocks.size();
        for (size_t j = 0; j < n; ++j) {
            blocks[j].push_back(i);
            rec(i + 1);
            blocks[j].pop_back();
        }
        blocks.push_back({i});
        rec(i + 1);
        blocks.pop_back();
    };
    rec(0);
}

} // namespace

bool faa_di_bruno_check(const std::vector<int>& indices, const Poly& g) {
    if (indices.size() > 6) throw std::invalid_argument("too many indices for partition check");
    int d = g.dim;
    TargetFunction G = TargetFunction::plain(g);
    int m = (int)indices.size();

    OpState st{d, m, m, m, 0, {}};
    st.add(SKey{}, Poly::constant(d, Scalar(1)));
    for (int i : indices) st = apply_derivative(st, i, G);

    // partition sum: for each partition of positions, product over blocks of
    // (i/hb) eps d_(B) g
    std::map<SKey, Poly> expect;
    set_partitions(m, [&](const std::vector<std::vector<int>>& blocks) {
        Poly prod = Poly::constant(d, Scalar(1));
        for (auto& b : blocks) {
            std::vector<int> idx;
            for (int pos : b) idx.push_back(indices[pos]);
            prod = prod * g.diff_seq(idx);
            if (prod.is_zero()) break;
        }
        if (prod.is_zero()) return;
        SKey k;
        k.eps = (int)blocks.size();
        k.lam = -(int)blocks.size();
        auto [it, fresh] = expect.try_emplace(k, prod);
        if (!fresh) {
            it->second += prod;
            if (it->second.is_zero()) expect.erase(it);
        }
    });

    return st.buckets == expect;
}

} // namespace microform
