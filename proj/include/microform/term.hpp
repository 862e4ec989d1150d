#ifndef MICROFORM_TERM_HPP
#define MICROFORM_TERM_HPP

#include "microform/genfun.hpp"
#include "microform/graph.hpp"

namespace microform {

// Combinatorial prefactor of the quantum Feynman rules:
// prod_v m_v! / prod_{(v,w)} mult(v,w)!  (hook counted in m_v).
// Reduces to prod_v m_v! on trees.
Rational quantum_weight(const Graph& g);

// One summand of an expansion: canonical graph class, its exact rational
// coefficient (quantum weight / |sym|, or the labeled weight in ordered
// mode), the hbar/i power from loops, and the numeric contraction values
// keyed by the free momentum multi-index (sorted; empty for pullbacks).
struct Term {
    Graph g;
    std::vector<int> weights; // white weights (compositions only)
    Rational coefficient;
    int lam_power = 0;
    std::map<std::vector<int>, LamPoly> values; // without the lam_power shift
    long long sym = 1;
};

// --- raw contractions (no combinatorial prefactor) -------------------------
// Each returns the Einstein-summed product of black tensor entries and
// differentiated white factors evaluated at phi, keyed by the free index
// assignment. lam_max truncates the hbar/i powers coming from coefficient
// series of S (the loop factor is NOT included here).

// white factor: derivatives of the target polynomial. Hooked graphs produce
// one free index (key {a}); plain graphs the empty key.
std::map<std::vector<int>, LamPoly> contract_pullback(const Graph& g, const GenFun& S,
                                                      const Poly& target, int lam_max);

// white vertex w of weight l_w contributes the weight-l_w coefficient tensor
// of G, differentiated along its edges; keys are the sorted momentum
// multi-indices I_t (monomial accumulation over ordered assignments).
std::map<std::vector<int>, LamPoly> contract_compose(const WGraph& wg, const GenFun& F,
                                                     const GenFun& G, int lam_max);

// white vertex w contributes one component of the inverse coordinate change,
// differentiated along its edges; keys are sorted q'-indices (length nw).
std::map<std::vector<int>, LamPoly> contract_transform(const Graph& g, const GenFun& S,
                                                       const std::vector<Poly>& y_inverse,
                                                       int lam_max);

// --- contraction operations with combinatorial prefactors ------------------

// <S,G>_t for a white-leaved bipartite tree; exact scalar (values keyed by
// the hook index when hooked). Classical: lam-power-0 slice of S.
std::map<std::vector<int>, Scalar> classical_term(const Graph& t, const GenFun& S,
                                                  const Poly& target);

// <S,G>_gamma with the quantum prefactor; returns the lam-graded value (from
// S's own hbar series) and the loop power of hbar/i separately.
std::pair<LamPoly, int> quantum_term(const Graph& g, const GenFun& S, const Poly& target,
                                     int lam_max);

} // namespace microform

#endif
