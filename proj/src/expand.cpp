#include "microform/expand.hpp"

#include <algorithm>
#include <stdexcept>

namespace microform {

Series Expansion::to_series() const {
    Trunc tr{g_order, hbar_order, mom_order};
    Series s(tr);
    for (const Term& t : terms) {
        for (auto& [key, lp] : t.values) {
            for (auto& [lam, p] : lp) {
                if (!p.is_constant())
                    throw std::logic_error("to_series requires scalar-valued terms");
                SKey k;
                k.eps = t.g.nw;
                k.lam = t.lam_power + lam;
                k.mom = key;
                s.add_term(std::move(k), p.constant_term() * Scalar(t.coefficient));
            }
        }
    }
    return s;
}

namespace {

int max_black_degree_of(const Graph& g) {
    int d = 0;
    for (int b = 0; b < g.nb; ++b) d = std::max(d, g.black_degree(b));
    return d;
}

void sort_terms(std::vector<Term>& terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        if (a.g.nw != b.g.nw) return a.g.nw < b.g.nw;
        if (a.lam_power != b.lam_power) return a.lam_power < b.lam_power;
        std::string ka = a.weights.empty() ? canonical_form(a.g) : canonical_form(WGraph{a.g, a.weights});
        std::string kb = b.weights.empty() ? canonical_form(b.g) : canonical_form(WGraph{b.g, b.weights});
        return ka < kb;
    });
}

Expansion pullback_impl(const GenFun& S, const Poly& target, int g_order, int hbar_order,
                        bool quantum) {
    if (g_order < 0 || hbar_order < 0) throw std::invalid_argument("negative order bound");
    if (!S.symmetric) throw std::invalid_argument("pullback requires symmetric coefficients");
    GenFun Suse = quantum ? S : S.h0();
    Expansion e;
    e.op = Expansion::Op::pullback;
    e.quantum = quantum;
    e.g_order = g_order;
    e.hbar_order = hbar_order;
    e.mom_order = 0;
    e.out_dim = 0;
    for (int w = 0; w <= g_order; ++w) {
        for (int b = 0; b <= (quantum ? hbar_order : 0); ++b) {
            for (const Graph& g : enumerate_graphs(w, b, std::max(2, Suse.max_order))) {
                if (max_black_degree_of(g) > Suse.max_order && g.nb > 0 && g.n_edges() > 0) continue;
                Term t;
                t.g = g;
                t.sym = automorphism_count(g);
                t.lam_power = b;
                Rational qw = quantum_weight(g);
                t.coefficient = qw / Rational(t.sym);
                auto raw = contract_pullback(g, Suse, target, hbar_order - b);
                for (auto& [key, lp] : raw)
                    if (!lp.empty()) t.values[key] = lp;
                e.terms.push_back(std::move(t));
            }
        }
    }
    sort_terms(e.terms);
    return e;
}

} // namespace

Expansion classical_pullback(const GenFun& S, const Poly& target, int g_order) {
    return pullback_impl(S, target, g_order, 0, false);
}

Expansion quantum_pullback(const GenFun& S, const Poly& target, int g_order, int hbar_order) {
    return pullback_impl(S, target, g_order, hbar_order, true);
}

namespace {

ComposeResult compose_impl(const GenFun& F, const GenFun& G, int g_order, int hbar_order,
                           int mom_order, bool quantum) {
    if (F.dim != G.source_dim)
        throw std::invalid_argument("target dimension of F must equal source dimension of G");
    if (!F.symmetric || !G.symmetric)
        throw std::invalid_argument("composition requires symmetric coefficients");
    GenFun Fu = quantum ? F : F.h0();
    GenFun Gu = quantum ? G : G.h0();

    ComposeResult res;
    Expansion& e = res.expansion;
    e.op = Expansion::Op::compose;
    e.quantum = quantum;
    e.g_order = g_order;
    e.hbar_order = hbar_order;
    e.mom_order = mom_order;
    e.out_dim = Gu.dim;

    for (int w = 0; w <= g_order; ++w) {
        for (int b = 0; b <= (quantum ? hbar_order : 0); ++b) {
            std::vector<Graph> classes = enumerate_graphs(w, b, std::max(2, Fu.max_order));
            std::erase_if(classes, [&](const Graph& g) {
                return max_black_degree_of(g) > Fu.max_order && g.n_edges() > 0;
            });
            for (const WGraph& wg : enumerate_weighted(classes, Gu.max_order, mom_order)) {
                Term t;
                t.g = wg.g;
                t.weights = wg.wt;
                t.sym = automorphism_count(wg);
                t.lam_power = b;
                Rational qw = quantum_weight(wg.g);
                t.coefficient = qw / Rational(t.sym);
                auto raw = contract_compose(wg, Fu, Gu, hbar_order - b);
                for (auto& [key, lp] : raw)
                    if (!lp.empty()) t.values[key] = lp;
                e.terms.push_back(std::move(t));
            }
        }
    }
    sort_terms(e.terms);

    GenFun H(Fu.source_dim, Gu.dim, mom_order, true);
    for (const Term& t : e.terms) {
        for (auto& [key, lp] : t.values) {
            Scalar norm = Scalar(Rational(1) / tuple_orderings(key)) * Scalar(t.coefficient);
            for (auto& [lam, p] : lp) {
                int lt = lam + t.lam_power;
                Poly add = p.scaled(norm);
                Poly cur = H.coeff(lt, key);
                H.set_coeff(lt, key, cur + add);
            }
        }
    }
    res.H = std::move(H);
    return res;
}

// Verify that forward(inverse(y)) = y to the stated order around phi.
void verify_inverse(const std::vector<Poly>& y_forward, const std::vector<Poly>& y_inverse,
                    const std::vector<Scalar>& phi0, int order) {
    int d = (int)y_inverse.size();
    if ((int)y_forward.size() != d)
        throw std::invalid_argument("coordinate change component count mismatch");
    // composite_i(y) = y_forward_i(y_inverse(y)), a polynomial in y
    std::vector<Poly> composite;
    for (auto& f : y_forward) composite.push_back(f.compose(y_inverse));
    // expand around phi0: substitute y = phi0 + u and compare with phi0 + u
    int yd = y_inverse.empty() ? 0 : y_inverse[0].dim;
    if (yd != d) throw std::invalid_argument("coordinate change must be square");
    std::vector<Poly> shift;
    for (int i = 0; i < d; ++i)
        shift.push_back(Poly::constant(d, phi0[i]) + Poly::variable(d, i));
    for (int i = 0; i < d; ++i) {
        Poly expanded = composite[i].compose(shift); // in u
        Poly expected = Poly::constant(d, phi0[i]) + Poly::variable(d, i);
        Poly diff = expanded - expected;
        for (auto& [e, c] : diff.ms) {
            int deg = 0;
            for (int x : e) deg += x;
            if (deg <= order)
                throw std::invalid_argument(
                    "coordinate change surrogate fails y(y'(.)) = id to the stated order");
        }
    }
}

TransformResult transform_impl(const GenFun& S, const std::vector<Poly>& y_forward,
                               const std::vector<Poly>& y_inverse, int validity_order,
                               int hbar_order, int mom_order, bool quantum) {
    if (!S.symmetric) throw std::invalid_argument("transformation requires symmetric coefficients");
    if (S.source_dim != 0)
        throw std::invalid_argument("transformation expects constant coefficients");
    if ((int)y_inverse.size() == 0) throw std::invalid_argument("empty coordinate change");
    for (auto& p : y_inverse)
        if (p.dim != S.dim) throw std::invalid_argument("inverse map dimension mismatch");
    GenFun Su = quantum ? S : S.h0();

    // evaluation point at hbar^0
    std::vector<Scalar> phi0(S.dim);
    for (int a = 1; a <= S.dim; ++a) phi0[a - 1] = S.coeff(0, {a}).constant_term();
    verify_inverse(y_forward, y_inverse, phi0, validity_order);
    if (mom_order > validity_order)
        throw std::invalid_argument("requested order exceeds surrogate validity order");

    TransformResult res;
    Expansion& e = res.expansion;
    e.op = Expansion::Op::transform;
    e.quantum = quantum;
    e.g_order = mom_order; // one q' per white vertex
    e.hbar_order = hbar_order;
    e.mom_order = mom_order;
    int d_new = (int)y_inverse.size();
    e.out_dim = d_new;

    for (int w = 0; w <= mom_order; ++w) {
        for (int b = 0; b <= (quantum ? hbar_order : 0); ++b) {
            for (const Graph& g : enumerate_graphs(w, b, std::max(2, Su.max_order))) {
                if (max_black_degree_of(g) > Su.max_order && g.n_edges() > 0) continue;
                Term t;
                t.g = g;
                t.sym = automorphism_count(g);
                t.lam_power = b;
                Rational qw = quantum_weight(g);
                t.coefficient = qw / Rational(t.sym);
                auto raw = contract_transform(g, Su, y_inverse, hbar_order - b);
                for (auto& [key, lp] : raw)
                    if (!lp.empty()) t.values[key] = lp;
                e.terms.push_back(std::move(t));
            }
        }
    }
    sort_terms(e.terms);

    GenFun Sn(0, d_new, mom_order, true);
    for (const Term& t : e.terms) {
        for (auto& [key, lp] : t.values) {
            Scalar norm = Scalar(Rational(1) / tuple_orderings(key)) * Scalar(t.coefficient);
            for (auto& [lam, p] : lp) {
                int lt = lam + t.lam_power;
                Poly add = p.scaled(norm);
                Poly cur = Sn.coeff(lt, key);
                Sn.set_coeff(lt, key, cur + add);
            }
        }
    }
    res.S_new = std::move(Sn);
    return res;
}

} // namespace

ComposeResult classical_compose(const GenFun& F, const GenFun& G, int g_order, int mom_order) {
    return compose_impl(F, G, g_order, 0, mom_order, false);
}

ComposeResult quantum_compose(const GenFun& F, const GenFun& G, int g_order, int hbar_order,
                              int mom_order) {
    return compose_impl(F, G, g_order, hbar_order, mom_order, true);
}

TransformResult classical_transform(const GenFun& S, const std::vector<Poly>& y_forward,
                                    const std::vector<Poly>& y_inverse, int validity_order,
                                    int mom_order) {
    return transform_impl(S, y_forward, y_inverse, validity_order, 0, mom_order, false);
}

TransformResult quantum_transform(const GenFun& S, const std::vector<Poly>& y_forward,
                                  const std::vector<Poly>& y_inverse, int validity_order,
                                  int hbar_order, int mom_order) {
    return transform_impl(S, y_forward, y_inverse, validity_order, hbar_order, mom_order, true);
}

GenFun lam0_slice(const GenFun& g) { return g.h0(); }

} // namespace microform
