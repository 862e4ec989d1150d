#ifndef MICROFORM_ORACLE_HPP
#define MICROFORM_ORACLE_HPP

#include "microform/genfun.hpp"

namespace microform {

// Target-side function for the defining equations: a polynomial in y whose
// coefficients may carry momentum monomials (compositions, transformations)
// and hbar/i powers. parts[(J, h)] is the monomial coefficient of r^J hb^h.
struct TargetFunction {
    int y_dim = 0;
    int mom_dim = 0;
    std::map<std::pair<std::vector<int>, int>, Poly> parts;

    static TargetFunction plain(const Poly& g) {
        TargetFunction t;
        t.y_dim = g.dim;
        t.mom_dim = 0;
        if (!g.is_zero()) t.parts[{{}, 0}] = g;
        return t;
    }

    // G(y, r) from a generating function whose coefficients are polynomials
    // in y; monomial coefficients absorb index-permutation multiplicity.
    static TargetFunction from_genfun(const GenFun& G);

    // y'^{a}(y) q'_{a} for a coordinate change.
    static TargetFunction from_coordinate_change(const std::vector<Poly>& y_inverse);

    TargetFunction h0() const {
        TargetFunction t;
        t.y_dim = y_dim;
        t.mom_dim = mom_dim;
        for (auto& [k, p] : parts)
            if (k.second == 0) t.parts.emplace(k, p);
        return t;
    }
};

// Solution of the defining fixed-point system: qbar = eps dG(ybar),
// ybar = dS/dq(qbar), component series graded by eps.
struct FixedPoint {
    std::vector<Series> qbar;
    std::vector<Series> ybar;
    Series R;
};

// Classical general equation solved by iteration from qbar = 0; converges in
// at most eps_order + 1 passes because every pass raises the minimal
// correction's eps-order. Requires constant coefficients and the classical
// (hbar-power-0) slices.
FixedPoint solve_fixed_point(const GenFun& S, const TargetFunction& G, int eps_order,
                             int mom_order = 0);

Series general_R(const GenFun& S, const TargetFunction& G, int eps_order, int mom_order = 0);

// Residuals of the two defining equations after substitution; all-zero series
// on success.
std::pair<std::vector<Series>, std::vector<Series>> fixed_point_residuals(
    const GenFun& S, const TargetFunction& G, const FixedPoint& fp, int eps_order,
    int mom_order = 0);

// Quantum general equation via the operator exponential: expands
// exp((i/hb) S^+((hb/i) d)) applied to exp((i/hb) eps G(y)) with the state
// kept as polynomial-coefficient buckets over (eps, hbar/i power, momenta),
// evaluates at phi, multiplies by exp((i/hb) S^0) and returns hb/i times the
// logarithm. Negative intermediate hbar powers must cancel in the output.
Series quantum_oracle(const GenFun& S, const TargetFunction& G, int eps_order, int hbar_order,
                      int mom_order = 0);

// Partition-sum expansion of iterated derivatives of exp((i/hb) eps G(y))
// equals direct differentiation; indices are 0-based coordinates, at most 6.
bool faa_di_bruno_check(const std::vector<int>& indices, const Poly& g);

} // namespace microform

#endif
