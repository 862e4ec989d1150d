#include "microform/instances.hpp"

#include <functional>

namespace microform {

Rational random_rational(Rng& rng, const InstanceOptions& opt, bool allow_zero) {
    int num = rng.range(allow_zero ? -opt.max_numerator : 1, opt.max_numerator);
    if (!allow_zero && num == 0) num = 1;
    int den = rng.range(1, opt.max_denominator);
    return Rational(num, den);
}

Scalar random_scalar(Rng& rng, const InstanceOptions& opt, bool allow_zero) {
    Rational re = random_rational(rng, opt, allow_zero);
    Rational im = opt.gaussian ? random_rational(rng, opt, true) : Rational(0);
    if (!allow_zero && re.is_zero() && im.is_zero()) re = Rational(1);
    return Scalar(re, im);
}

Poly random_poly(Rng& rng, int dim, int deg, const InstanceOptions& opt) {
    Poly p(dim);
    std::vector<int> e(dim, 0);
    std::function<void(int, int)> rec = [&](int i, int remaining) {
        if (i == dim) {
            if (rng.below(opt.sparsity) == 0) p.add_monomial(e, random_scalar(rng, opt));
            return;
        }
        for (int k = 0; k <= remaining; ++k) {
            e[i] = k;
            rec(i + 1, remaining - k);
        }
        e[i] = 0;
    };
    rec(0, deg);
    return p;
}

namespace {

void fill_sorted_tuples(int dim, int order, std::vector<std::vector<int>>& out) {
    std::vector<int> t(order);
    std::function<void(int, int)> rec = [&](int i, int lo) {
        if (i == order) {
            out.push_back(t);
            return;
        }
        for (int a = lo; a <= dim; ++a) {
            t[i] = a;
            rec(i + 1, a);
        }
    };
    rec(0, 1);
}

} // namespace

GenFun random_genfun(Rng& rng, int dim, int max_order, const InstanceOptions& opt) {
    GenFun g(0, dim, max_order, true);
    for (int h = 0; h <= opt.hbar_levels; ++h) {
        if (!opt.zero_order0) {
            Scalar s0 = random_scalar(rng, opt);
            if (!s0.is_zero())
                g.set_coeff(h, {}, Poly::constant(0, s0 * Scalar::i_pow(h)));
        }
        for (int a = 1; a <= dim; ++a) {
            Scalar v = (h == 0 && opt.nonzero_phi) ? random_scalar(rng, opt, false)
                                                   : random_scalar(rng, opt);
            if (!v.is_zero()) g.set_coeff(h, {a}, Poly::constant(0, v * Scalar::i_pow(h)));
        }
        for (int m = 2; m <= max_order; ++m) {
            std::vector<std::vector<int>> tuples;
            fill_sorted_tuples(dim, m, tuples);
            for (auto& t : tuples) {
                if (rng.below(opt.sparsity) != 0) continue;
                Scalar v = random_scalar(rng, opt);
                if (!v.is_zero()) g.set_coeff(h, t, Poly::constant(0, v * Scalar::i_pow(h)));
            }
        }
    }
    return g;
}

GenFun random_genfun_field(Rng& rng, int source_dim, int dim, int max_order, int coeff_deg,
                           const InstanceOptions& opt) {
    GenFun g(source_dim, dim, max_order, true);
    for (int h = 0; h <= opt.hbar_levels; ++h) {
        if (!opt.zero_order0) {
            Poly p = random_poly(rng, source_dim, coeff_deg, opt).scaled(Scalar::i_pow(h));
            if (!p.is_zero()) g.set_coeff(h, {}, p);
        }
        for (int m = 1; m <= max_order; ++m) {
            std::vector<std::vector<int>> tuples;
            fill_sorted_tuples(dim, m, tuples);
            for (auto& t : tuples) {
                if (m > 1 && rng.below(opt.sparsity) != 0) continue;
                Poly p = random_poly(rng, source_dim, coeff_deg, opt).scaled(Scalar::i_pow(h));
                if (!p.is_zero()) g.set_coeff(h, t, p);
            }
        }
    }
    return g;
}

GenFun random_genfun_nonsym(Rng& rng, int dim, int max_order, const InstanceOptions& opt) {
    GenFun g(0, dim, max_order, false);
    for (int h = 0; h <= opt.hbar_levels; ++h) {
        if (!opt.zero_order0) {
            Scalar s0 = random_scalar(rng, opt);
            if (!s0.is_zero()) g.set_coeff(h, {}, Poly::constant(0, s0 * Scalar::i_pow(h)));
        }
        for (int a = 1; a <= dim; ++a) {
            Scalar v = (h == 0 && opt.nonzero_phi) ? random_scalar(rng, opt, false)
                                                   : random_scalar(rng, opt);
            if (!v.is_zero()) g.set_coeff(h, {a}, Poly::constant(0, v * Scalar::i_pow(h)));
        }
        // all ordered tuples
        for (int m = 2; m <= max_order; ++m) {
            std::vector<int> t(m, 1);
            std::function<void(int)> rec = [&](int i) {
                if (i == m) {
                    if (rng.below(opt.sparsity) == 0) {
                        Scalar v = random_scalar(rng, opt);
                        if (!v.is_zero()) g.set_coeff(h, t, Poly::constant(0, v * Scalar::i_pow(h)));
                    }
                    return;
                }
                for (int a = 1; a <= dim; ++a) {
                    t[i] = a;
                    rec(i + 1);
                }
            };
            rec(0);
        }
    }
    return g;
}

Poly truncate_degree(const Poly& p, int deg) {
    Poly r(p.dim);
    for (auto& [e, c] : p.ms) {
        int t = 0;
        for (int x : e) t += x;
        if (t <= deg) r.ms.emplace(e, c);
    }
    return r;
}

namespace {

// centered polynomial maps u -> v, as vectors of Poly in u
std::vector<Poly> compose_map(const std::vector<Poly>& outer, const std::vector<Poly>& inner,
                              int deg) {
    std::vector<Poly> r;
    for (auto& p : outer) r.push_back(truncate_degree(p.compose(inner), deg));
    return r;
}

} // namespace

CoordinatePair random_coordinate_pair(Rng& rng, int dim, int order,
                                      const std::vector<Scalar>& phi,
                                      const InstanceOptions& opt) {
    // centered inverse map M(u) = L u + N(u), L unitriangular, N random of
    // degrees 2..order
    std::vector<std::vector<Rational>> L(dim, std::vector<Rational>(dim, Rational(0)));
    for (int a = 0; a < dim; ++a) {
        L[a][a] = Rational(1);
        for (int b = a + 1; b < dim; ++b) L[a][b] = random_rational(rng, opt);
    }
    std::vector<std::vector<Rational>> Linv(dim, std::vector<Rational>(dim, Rational(0)));
    for (int a = 0; a < dim; ++a) Linv[a][a] = Rational(1);
    for (int a = dim - 1; a >= 0; --a)
        for (int b = a + 1; b < dim; ++b) {
            Rational s(0);
            for (int k = a + 1; k <= b; ++k) s += L[a][k] * Linv[k][b];
            Linv[a][b] = -s;
        }

    std::vector<Poly> M, W;
    for (int a = 0; a < dim; ++a) {
        Poly m(dim), w(dim);
        for (int b = 0; b < dim; ++b) {
            m += Poly::variable(dim, b).scaled(Scalar(L[a][b]));
            w += Poly::variable(dim, b).scaled(Scalar(Linv[a][b]));
        }
        // higher-order part with no constant or linear monomials
        Poly n = random_poly(rng, dim, order, opt);
        Poly n2(dim);
        for (auto& [e, c] : n.ms) {
            int t = 0;
            for (int x : e) t += x;
            if (t >= 2) n2.ms.emplace(e, c);
        }
        m += n2;
        M.push_back(m);
        W.push_back(w);
    }

    // Newton-style compositional inversion: E = W o M - id has degree >= 2;
    // W <- W - E o W raises the error degree each pass
    for (int pass = 0; pass < order + 1; ++pass) {
        std::vector<Poly> WM = compose_map(W, M, order);
        std::vector<Poly> E;
        bool zero = true;
        for (int a = 0; a < dim; ++a) {
            Poly e = WM[a] - Poly::variable(dim, a);
            zero = zero && e.is_zero();
            E.push_back(e);
        }
        if (zero) break;
        std::vector<Poly> EW = compose_map(E, W, order);
        for (int a = 0; a < dim; ++a) W[a] = truncate_degree(W[a] - EW[a], order);
    }

    // un-center: inv(y) = c0 + M(y - phi), fwd(z) = phi + W(z - c0) with
    // c0 the image of phi (keep it zero so both maps stay small)
    std::vector<Poly> shift_y, shift_z;
    for (int a = 0; a < dim; ++a) {
        shift_y.push_back(Poly::variable(dim, a) - Poly::constant(dim, phi[a]));
        shift_z.push_back(Poly::variable(dim, a));
    }
    CoordinatePair cp;
    for (int a = 0; a < dim; ++a) {
        cp.inv.push_back(M[a].compose(shift_y));
        Poly w = W[a].compose(shift_z);
        cp.fwd.push_back(w + Poly::constant(dim, phi[a]));
    }
    return cp;
}

} // namespace microform
