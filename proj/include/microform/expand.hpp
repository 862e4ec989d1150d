#ifndef MICROFORM_EXPAND_HPP
#define MICROFORM_EXPAND_HPP

#include "microform/term.hpp"

namespace microform {

// A complete expansion: classical or quantum pullback/composition/
// transformation, as a deterministically sorted list of weighted terms over
// canonical graph classes.
struct Expansion {
    enum class Op { pullback, compose, transform };
    Op op = Op::pullback;
    bool quantum = false;
    int g_order = 0;
    int hbar_order = 0;
    int mom_order = 0;
    int out_dim = 0; // free momentum index dimension (0 for pullbacks)
    std::vector<Term> terms;

    // Total as a formal series: eps = white count, lam = loops + coefficient
    // hbar powers, momenta = free indices. Requires scalar-valued terms.
    Series to_series() const;

    // Number of distinct graph classes.
    size_t n_classes() const { return terms.size(); }
};

// Pullback of the target polynomial by the thick morphism with generating
// function S. The quantum result is the exponent (the connected-graph sum);
// exponentiate with Series::exp when the full amplitude is needed.
Expansion classical_pullback(const GenFun& S, const Poly& target, int g_order);
Expansion quantum_pullback(const GenFun& S, const Poly& target, int g_order, int hbar_order);

// Composition: generating function H(x,r) of the composite morphism,
// assembled from white-weighted graph classes. g_order bounds the white
// count (the functional order in G), mom_order the r-order.
struct ComposeResult {
    Expansion expansion;
    GenFun H;
};
ComposeResult classical_compose(const GenFun& F, const GenFun& G, int g_order, int mom_order);
ComposeResult quantum_compose(const GenFun& F, const GenFun& G, int g_order, int hbar_order,
                              int mom_order);

// Coordinate transformation: generating function S'(x',q') in the new
// coordinates. y_forward maps new to old coordinates, y_inverse is its
// polynomial inverse surrogate, valid to `validity_order` around phi; the
// pair is verified and rejected otherwise.
struct TransformResult {
    Expansion expansion;
    GenFun S_new;
};
TransformResult classical_transform(const GenFun& S, const std::vector<Poly>& y_forward,
                                    const std::vector<Poly>& y_inverse, int validity_order,
                                    int mom_order);
TransformResult quantum_transform(const GenFun& S, const std::vector<Poly>& y_forward,
                                  const std::vector<Poly>& y_inverse, int validity_order,
                                  int hbar_order, int mom_order);

// lam-power-0 slice of a generating function (classical limit helper).
GenFun lam0_slice(const GenFun& g);

} // namespace microform

#endif
