#ifndef MICROFORM_INSTANCES_HPP
#define MICROFORM_INSTANCES_HPP

#include <cstdint>

#include "microform/genfun.hpp"

namespace microform {

// Deterministic cross-platform generator for seeded verification instances.
struct Rng {
    uint64_t state;

    explicit Rng(uint64_t seed) : state(seed) {}

    uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    int below(int n) { return (int)(next() % (uint64_t)n); }
    int range(int lo, int hi) { return lo + below(hi - lo + 1); } // inclusive
};

struct InstanceOptions {
    int max_numerator = 9; // bounded rational entries keep magnitudes readable
    int max_denominator = 9;
    bool gaussian = false;   // allow imaginary parts
    bool zero_order0 = false;
    bool nonzero_phi = true;
    int hbar_levels = 0;     // extra hbar powers on coefficients
    int sparsity = 2;        // 1 in `sparsity` coefficients kept
};

Rational random_rational(Rng& rng, const InstanceOptions& opt, bool allow_zero = true);
Scalar random_scalar(Rng& rng, const InstanceOptions& opt, bool allow_zero = true);

// Random polynomial in `dim` variables of total degree <= deg.
Poly random_poly(Rng& rng, int dim, int deg, const InstanceOptions& opt);

// Random symmetric generating function with constant coefficients.
GenFun random_genfun(Rng& rng, int dim, int max_order, const InstanceOptions& opt);

// Random generating function whose coefficients are polynomials in
// source_dim variables of degree <= coeff_deg (composition targets).
GenFun random_genfun_field(Rng& rng, int source_dim, int dim, int max_order, int coeff_deg,
                           const InstanceOptions& opt);

// Random non-symmetric generating function (super/ordered mode).
GenFun random_genfun_nonsym(Rng& rng, int dim, int max_order, const InstanceOptions& opt);

// Drop monomials of total degree above `deg`.
Poly truncate_degree(const Poly& p, int deg);

// Random invertible polynomial coordinate change around the point phi:
// inv has a unitriangular linear part plus random higher terms, fwd is its
// compositional inverse surrogate, valid to `order` (fwd after inv is the
// identity to that order around phi).
struct CoordinatePair {
    std::vector<Poly> fwd;
    std::vector<Poly> inv;
};
CoordinatePair random_coordinate_pair(Rng& rng, int dim, int order,
                                      const std::vector<Scalar>& phi,
                                      const InstanceOptions& opt);

} // namespace microform

#endif
