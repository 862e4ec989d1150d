#ifndef MICROFORM_SERIES_HPP
#define MICROFORM_SERIES_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "microform/poly.hpp"

namespace microform {

// Exponent key of a truncated formal series: power of the bookkeeping
// variable eps (order in G), power of hbar/i (may be negative in
// intermediates), and a sorted momentum multi-index (1-based indices).
struct SKey {
    int eps = 0;
    int lam = 0;
    std::vector<int> mom;

    auto operator<=>(const SKey&) const = default;
};

struct Trunc {
    int eps_max = 0;
    int lam_max = 0;
    int mom_max = 0;

    bool operator==(const Trunc&) const = default;
};

// Truncated multivariate formal power series with exact coefficients.
// Momenta commute; multi-indices are kept sorted. Zero coefficients are
// never stored, and truncation is re-enforced on every insertion.
struct Series {
    Trunc tr;
    std::map<SKey, Scalar> terms;

    Series() = default;
    explicit Series(Trunc t) : tr(t) {}

    static Series constant(Trunc t, Scalar c) {
        Series s(t);
        s.add_term({}, c);
        return s;
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(SKey k, const Scalar& c) {
        if (c.is_zero()) return;
        if (k.eps > tr.eps_max || (int)k.mom.size() > tr.mom_max || k.lam > tr.lam_max) return;
        std::sort(k.mom.begin(), k.mom.end());
        auto [it, fresh] = terms.try_emplace(std::move(k), c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    Scalar coeff(SKey k) const {
        std::sort(k.mom.begin(), k.mom.end());
        auto it = terms.find(k);
        return it == terms.end() ? Scalar() : it->second;
    }

    friend Series operator+(const Series& a, const Series& b) {
        if (a.tr != b.tr) throw std::invalid_argument("series truncation mismatch");
        Series r = a;
        for (auto& [k, c] : b.terms) r.add_term(k, c);
        return r;
    }
    friend Series operator-(const Series& a, const Series& b) {
        if (a.tr != b.tr) throw std::invalid_argument("series truncation mismatch");
        Series r = a;
        for (auto& [k, c] : b.terms) r.add_term(k, -c);
        return r;
    }
    friend Series operator*(const Series& a, const Series& b) {
        if (a.tr != b.tr) throw std::invalid_argument("series truncation mismatch");
        Series r(a.tr);
        for (auto& [ka, ca] : a.terms)
            for (auto& [kb, cb] : b.terms) {
                SKey k;
                k.eps = ka.eps + kb.eps;
                k.lam = ka.lam + kb.lam;
                if (k.eps > a.tr.eps_max) continue;
                if ((int)(ka.mom.size() + kb.mom.size()) > a.tr.mom_max) continue;
                k.mom = ka.mom;
                k.mom.insert(k.mom.end(), kb.mom.begin(), kb.mom.end());
                r.add_term(std::move(k), ca * cb);
            }
        return r;
    }
    Series& operator+=(const Series& b) { *this = *this + b; return *this; }
    Series& operator-=(const Series& b) { *this = *this - b; return *this; }
    Series& operator*=(const Series& b) { *this = *this * b; return *this; }

    friend bool operator==(const Series& a, const Series& b) { return a.terms == b.terms; }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    Series scaled(const Scalar& c) const {
        Series r(tr);
        if (c.is_zero()) return r;
        for (auto& [k, v] : terms) r.terms.emplace(k, v * c);
        return r;
    }

    // Multiply by eps^de * lam^dl, re-truncating.
    Series shifted(int de, int dl) const {
        Series r(tr);
        for (auto& [k, v] : terms) {
            SKey k2 = k;
            k2.eps += de;
            k2.lam += dl;
            r.add_term(std::move(k2), v);
        }
        return r;
    }

    // Grade used to decide exp/log termination: every term of the argument
    // must have positive grade so that high powers eventually truncate away.
    static int grade(const SKey& k) { return k.eps + k.lam + (int)k.mom.size(); }

    int min_grade() const {
        int g = 1 << 30;
        for (auto& [k, c] : terms) g = std::min(g, grade(k));
        return g;
    }

    // exp(a) with a having no grade-0 part.
    Series exp() const {
        if (!terms.empty() && min_grade() <= 0)
            throw std::domain_error("exp requires argument with positive grade");
        Series r = Series::constant(tr, Scalar(1));
        Series pow = Series::constant(tr, Scalar(1));
        Rational fact(1);
        int nmax = tr.eps_max + tr.mom_max + std::max(tr.lam_max, 0) + 1;
        for (int n = 1; n <= nmax; ++n) {
            pow = pow * (*this);
            if (pow.is_zero()) break;
            fact = fact * Rational(n);
            Series term = pow.scaled(Scalar(Rational(1) / fact));
            r += term;
        }
        return r;
    }

    // log(1 + x) for a series with constant term exactly 1.
    Series log() const {
        Series x = *this;
        auto it = x.terms.find(SKey{});
        if (it == x.terms.end() || it->second != Scalar(1))
            throw std::domain_error("log requires constant term 1");
        x.terms.erase(SKey{});
        if (!x.terms.empty() && x.min_grade() <= 0)
            throw std::domain_error("log requires remainder with positive grade");
        Series r(tr);
        Series pow = Series::constant(tr, Scalar(1));
        int nmax = tr.eps_max + tr.mom_max + std::max(tr.lam_max, 0) + 1;
        for (int n = 1; n <= nmax; ++n) {
            pow = pow * x;
            if (pow.is_zero()) break;
            Scalar sign = (n % 2 == 1) ? Scalar(1) : Scalar(-1);
            r += pow.scaled(sign * Scalar(Rational(1, n)));
        }
        return r;
    }

    int min_lam() const {
        int l = 0;
        bool first = true;
        for (auto& [k, c] : terms) {
            if (first || k.lam < l) l = k.lam;
            first = false;
        }
        return l;
    }

    // Keep only 0 <= lam <= lmax; throws if a negative power survived.
    Series lam_slice_checked(int lmax) const {
        Series r(tr);
        r.tr.lam_max = lmax;
        for (auto& [k, c] : terms) {
            if (k.lam < 0)
                throw std::logic_error("residual negative hbar power: grading violation");
            if (k.lam <= lmax) r.terms.emplace(k, c);
        }
        return r;
    }

    std::string str() const {
        if (terms.empty()) return "0";
        std::string s;
        for (auto& [k, c] : terms) {
            if (!s.empty()) s += " + ";
            s += "(" + c.str() + ")";
            if (k.eps) s += "*eps^" + std::to_string(k.eps);
            if (k.lam) s += "*hb^" + std::to_string(k.lam);
            for (int m : k.mom) s += "*r" + std::to_string(m);
        }
        return s;
    }
};

// Substitute a series for each coordinate of a polynomial.
inline Series poly_substitute(const Poly& p, const std::vector<Series>& point, Trunc tr) {
    if ((int)point.size() != p.dim) throw std::invalid_argument("substitute dimension mismatch");
    Series r(tr);
    for (auto& [e, c] : p.ms) {
        Series t = Series::constant(tr, c);
        for (int i = 0; i < p.dim; ++i)
            for (int k = 0; k < e[i]; ++k) t = t * point[i];
        r += t;
    }
    return r;
}

// hbar/i-graded polynomial values: exponent of hbar/i -> polynomial part.
// Used for generating-function coefficients and term values; dim 0 collapses
// to plain scalars.
using LamPoly = std::map<int, Poly>;

inline LamPoly lam_const(int dim, Scalar c, int lam = 0) {
    LamPoly r;
    if (!c.is_zero()) r.emplace(lam, Poly::constant(dim, c));
    return r;
}

inline void lam_add(LamPoly& a, const LamPoly& b) {
    for (auto& [l, p] : b) {
        auto [it, fresh] = a.try_emplace(l, p);
        if (!fresh) {
            it->second += p;
            if (it->second.is_zero()) a.erase(it);
        }
    }
}

inline LamPoly lam_mul(const LamPoly& a, const LamPoly& b, int lam_max) {
    LamPoly r;
    for (auto& [la, pa] : a)
        for (auto& [lb, pb] : b) {
            if (la + lb > lam_max) continue;
            Poly prod = pa * pb;
            if (prod.is_zero()) continue;
            auto [it, fresh] = r.try_emplace(la + lb, prod);
            if (!fresh) {
                it->second += prod;
                if (it->second.is_zero()) r.erase(it);
            }
        }
    return r;
}

inline LamPoly lam_scale(const LamPoly& a, const Scalar& c) {
    LamPoly r;
    if (c.is_zero()) return r;
    for (auto& [l, p] : a) {
        Poly q = p.scaled(c);
        if (!q.is_zero()) r.emplace(l, std::move(q));
    }
    return r;
}

inline LamPoly lam_shift(const LamPoly& a, int dl, int lam_max) {
    LamPoly r;
    for (auto& [l, p] : a)
        if (l + dl <= lam_max) r.emplace(l + dl, p);
    return r;
}

// Evaluate a polynomial at a lam-graded point (one LamPoly per coordinate).
inline LamPoly lam_eval(const Poly& p, const std::vector<LamPoly>& point, int out_dim, int lam_max) {
    LamPoly r;
    for (auto& [e, c] : p.ms) {
        LamPoly t = lam_const(out_dim, c);
        for (int i = 0; i < p.dim; ++i)
            for (int k = 0; k < e[i]; ++k) t = lam_mul(t, point[i], lam_max);
        lam_add(r, t);
    }
    return r;
}

} // namespace microform

#endif
