#ifndef MICROFORM_GENFUN_HPP
#define MICROFORM_GENFUN_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "microform/series.hpp"

namespace microform {

// Generating function S(x,q) = S0(x) + phi^i(x) q_i + S^{ij}(x) q_i q_j + ...
// of a (quantum) thick morphism. Coefficient tensors may depend polynomially
// on source_dim variables; source_dim 0 means constant coefficients (the
// source position is a spectator). The hbar key is the internal power of
// hbar/i; file IO converts from powers of hbar.
//
// Symmetric mode stores one entry per sorted index tuple; non-symmetric mode
// stores tuples verbatim and lookups are positional.
struct GenFun {
    int source_dim = 0;
    int dim = 0;       // momentum index dimension
    int max_order = 0; // highest momentum order carried
    bool symmetric = true;
    std::map<std::pair<int, std::vector<int>>, Poly> coeffs; // (lam power, idx tuple) -> poly
    std::optional<std::vector<int>> parities;                // per coordinate, for the super case

    GenFun() = default;
    GenFun(int src, int d, int mo, bool sym) : source_dim(src), dim(d), max_order(mo), symmetric(sym) {}

    void set_coeff(int lam, std::vector<int> idx, Poly p);

    // Tensor entry S^{idx} at the given hbar/i power; idx entries are 1-based.
    Poly coeff(int lam, std::vector<int> idx) const;

    // All hbar/i levels of the tensor entry S^{idx}.
    LamPoly coeff_lam(const std::vector<int>& idx) const;

    // Order-1 coefficients phi^i as a lam-graded point (evaluation point for
    // the white-vertex factors).
    std::vector<LamPoly> phi() const;

    // Classical slice: lam-power-0 coefficients only.
    GenFun h0() const;

    // S_h(q) as a polynomial in the momentum variables for the given hbar/i
    // power. Monomial coefficients absorb index-permutation multiplicity.
    // Requires constant coefficients (source_dim == 0).
    Poly momentum_poly(int lam) const;

    std::vector<int> lam_levels() const;

    // Identity morphism S(x,q) = x^i q_i: phi^i is the i-th coordinate
    // function, every other coefficient zero.
    static GenFun identity(int d);

    bool has_positive_lam() const;
};

// Number of distinct orderings of a sorted index tuple.
Rational tuple_orderings(const std::vector<int>& sorted_idx);

} // namespace microform

#endif
