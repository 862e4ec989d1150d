#include <doctest.h>

#include "microform/instances.hpp"
#include "microform/series.hpp"

using namespace microform;

namespace {

Poly y_squared() {
    Poly p(1);
    p.add_monomial({2}, Scalar(1));
    return p;
}

} // namespace

TEST_CASE("polynomial differentiation") {
    // d/dy1 (y1)^2 = 2 y1
    Poly p = y_squared();
    Poly d = p.diff(0);
    Poly expect(1);
    expect.add_monomial({1}, Scalar(2));
    CHECK(d == expect);

    // mixed partials commute on random polynomials
    Rng rng(1);
    InstanceOptions opt;
    for (int t = 0; t < 20; ++t) {
        Poly f = random_poly(rng, 3, 4, opt);
        CHECK(f.diff(0).diff(1) == f.diff(1).diff(0));
        CHECK(f.diff(2).diff(0) == f.diff(0).diff(2));
    }
    CHECK_THROWS(p.diff(3));
}

TEST_CASE("polynomial evaluation and composition") {
    // f = y1 y2 at (2, 3) -> 6
    Poly f(2);
    f.add_monomial({1, 1}, Scalar(1));
    CHECK(f.eval({Scalar(2), Scalar(3)}) == Scalar(6));
    // f(0) = constant term
    Poly g(2);
    g.add_monomial({0, 0}, Scalar(Rational(7, 3)));
    g.add_monomial({2, 1}, Scalar(5));
    CHECK(g.eval({Scalar(0), Scalar(0)}) == Scalar(Rational(7, 3)));
    CHECK(g.constant_term() == Scalar(Rational(7, 3)));
}

TEST_CASE("taylor expansion through substitution") {
    // substituting y = phi + eps v reproduces Taylor's formula for a random
    // quadratic
    Rng rng(7);
    InstanceOptions opt;
    for (int trial = 0; trial < 10; ++trial) {
        Poly f = random_poly(rng, 2, 2, opt);
        Scalar phi1 = random_scalar(rng, opt), phi2 = random_scalar(rng, opt);
        Scalar v1 = random_scalar(rng, opt), v2 = random_scalar(rng, opt);
        Trunc tr{3, 0, 0};
        Series eps(tr);
        eps.add_term(SKey{1, 0, {}}, Scalar(1));
        std::vector<Series> point{Series::constant(tr, phi1) + eps.scaled(v1),
                                  Series::constant(tr, phi2) + eps.scaled(v2)};
        Series got = poly_substitute(f, point, tr);
        // brute-force Taylor: f(phi) + sum df v eps + 1/2 sum ddf v v eps^2
        Series expect = Series::constant(tr, f.eval({phi1, phi2}));
        std::vector<Scalar> phi{phi1, phi2}, v{v1, v2};
        for (int a = 0; a < 2; ++a)
            expect.add_term(SKey{1, 0, {}}, f.diff(a).eval(phi) * v[a]);
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                expect.add_term(SKey{2, 0, {}},
                                f.diff(a).diff(b).eval(phi) * v[a] * v[b] * Scalar(Rational(1, 2)));
        CHECK(got == expect);
    }
}

TEST_CASE("series arithmetic and truncation") {
    Trunc tr{2, 0, 2};
    // a*1 = a
    Series a(tr);
    a.add_term(SKey{1, 0, {1}}, Scalar(3));
    a.add_term(SKey{2, 0, {}}, Scalar(Rational(1, 2)));
    CHECK(a * Series::constant(tr, Scalar(1)) == a);

    // (eps q1)(eps q1) at eps-truncation 1 -> 0
    Trunc t1{1, 0, 2};
    Series eq(t1);
    eq.add_term(SKey{1, 0, {1}}, Scalar(1));
    CHECK((eq * eq).is_zero());

    // (1 + eps x)(1 - eps x) at eps-truncation 2 -> 1 - eps^2 x^2
    Trunc t2{2, 0, 0};
    Series one = Series::constant(t2, Scalar(1));
    Series ex(t2);
    ex.add_term(SKey{1, 0, {}}, Scalar(5));
    Series prod = (one + ex) * (one - ex);
    Series expect = one;
    expect.add_term(SKey{2, 0, {}}, Scalar(-25));
    CHECK(prod == expect);

    Trunc other{3, 0, 0};
    CHECK_THROWS(void(a + Series(other)));
}

TEST_CASE("series ring axioms on random values") {
    Rng rng(99);
    InstanceOptions opt;
    Trunc tr{3, 1, 2};
    auto rand_series = [&]() {
        Series s(tr);
        for (int t = 0; t < 6; ++t) {
            SKey k;
            k.eps = rng.below(4);
            k.lam = rng.below(2);
            int nm = rng.below(3);
            for (int j = 0; j < nm; ++j) k.mom.push_back(rng.range(1, 2));
            s.add_term(std::move(k), random_scalar(rng, opt));
        }
        return s;
    };
    for (int t = 0; t < 15; ++t) {
        Series x = rand_series(), y = rand_series(), z = rand_series();
        CHECK((x + y) * z == x * z + y * z);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * y == y * x);
    }
}

TEST_CASE("series exp and log") {
    Trunc tr{5, 0, 0};
    // exp(0) = 1
    CHECK(Series(tr).exp() == Series::constant(tr, Scalar(1)));
    // log(exp(eps s)) = eps s for random s
    Rng rng(3);
    InstanceOptions opt;
    for (int t = 0; t < 10; ++t) {
        Series a(tr);
        for (int e = 1; e <= 5; ++e) a.add_term(SKey{e, 0, {}}, random_scalar(rng, opt));
        CHECK(a.exp().log() == a);
    }
    // precondition: nonzero constant term rejected
    Series bad = Series::constant(tr, Scalar(2));
    CHECK_THROWS(bad.exp());
}

TEST_CASE("exp over connected sums reproduces disjoint-union weights") {
    // exp(sum over two distinct connected pieces x, y with weights 1/|sym|)
    // produces the disjoint-union sum: coefficient of x^a y^b must equal
    // 1/(a! b!), the 1/|sym| of the disjoint union with a + b components.
    Trunc tr{4, 0, 0};
    Series conn(tr);
    // x at eps^1, y at eps^2 as stand-ins for two connected classes
    conn.add_term(SKey{1, 0, {}}, Scalar(Rational(1, 2))); // weight 1/2
    conn.add_term(SKey{2, 0, {}}, Scalar(Rational(1, 3))); // weight 1/3
    Series full = conn.exp();
    // eps^4 coefficient: x^4/(4! 2^4) + x^2 y /(2! 1! 2^2 3) + y^2/(2! 3^2)
    Scalar expect = Scalar(Rational(1, 24) * Rational(1, 16)) +
                    Scalar(Rational(1, 2) * Rational(1, 4) * Rational(1, 3)) +
                    Scalar(Rational(1, 2) * Rational(1, 9));
    CHECK(full.coeff(SKey{4, 0, {}}) == expect);
}

TEST_CASE("negative hbar powers rejected on output") {
    Trunc tr{2, 2, 0};
    Series s(tr);
    s.add_term(SKey{1, -1, {}}, Scalar(1));
    CHECK_THROWS(s.lam_slice_checked(2));
    Series ok(tr);
    ok.add_term(SKey{1, 1, {}}, Scalar(1));
    CHECK(ok.lam_slice_checked(2) == ok);
}
