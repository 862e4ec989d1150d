#ifndef MICROFORM_POLY_HPP
#define MICROFORM_POLY_HPP

#include <map>
#include <vector>
#include <stdexcept>

#include "microform/rational.hpp"

namespace microform {

// Sparse polynomial over dim variables with exact Gaussian-rational
// coefficients. Monomial key = exponent vector of length dim. Zero
// coefficients are never stored.
struct Poly {
    int dim = 0;
    std::map<std::vector<int>, Scalar> ms;

    Poly() = default;
    explicit Poly(int d) : dim(d) {}

    static Poly constant(int d, Scalar c) {
        Poly p(d);
        if (!c.is_zero()) p.ms.emplace(std::vector<int>(d, 0), std::move(c));
        return p;
    }
    static Poly variable(int d, int idx) { // idx is 0-based
        Poly p(d);
        std::vector<int> e(d, 0);
        e.at(idx) = 1;
        p.ms.emplace(std::move(e), Scalar(1));
        return p;
    }

    bool is_zero() const { return ms.empty(); }

    bool is_constant() const {
        if (ms.empty()) return true;
        if (ms.size() > 1) return false;
        for (int e : ms.begin()->first) if (e != 0) return false;
        return true;
    }

    Scalar constant_term() const {
        auto it = ms.find(std::vector<int>(dim, 0));
        return it == ms.end() ? Scalar() : it->second;
    }

    int degree() const {
        int d = 0;
        for (auto& [e, c] : ms) {
            int t = 0;
            for (int x : e) t += x;
            if (t > d) d = t;
        }
        return d;
    }

    void add_monomial(const std::vector<int>& e, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = ms.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) ms.erase(it);
        }
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        if (a.dim != b.dim) throw std::invalid_argument("poly dim mismatch");
        Poly r = a;
        for (auto& [e, c] : b.ms) r.add_monomial(e, c);
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        if (a.dim != b.dim) throw std::invalid_argument("poly dim mismatch");
        Poly r = a;
        for (auto& [e, c] : b.ms) r.add_monomial(e, -c);
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.dim != b.dim) throw std::invalid_argument("poly dim mismatch");
        Poly r(a.dim);
        for (auto& [ea, ca] : a.ms)
            for (auto& [eb, cb] : b.ms) {
                std::vector<int> e(a.dim);
                for (int i = 0; i < a.dim; ++i) e[i] = ea[i] + eb[i];
                r.add_monomial(e, ca * cb);
            }
        return r;
    }
    Poly& operator+=(const Poly& b) { *this = *this + b; return *this; }
    Poly& operator-=(const Poly& b) { *this = *this - b; return *this; }
    Poly& operator*=(const Poly& b) { *this = *this * b; return *this; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.dim == b.dim && a.ms == b.ms; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly scaled(const Scalar& c) const {
        Poly r(dim);
        if (c.is_zero()) return r;
        for (auto& [e, v] : ms) r.ms.emplace(e, v * c);
        return r;
    }

    // Partial derivative with respect to variable idx (0-based).
    Poly diff(int idx) const {
        if (idx < 0 || idx >= dim) throw std::out_of_range("diff index out of range");
        Poly r(dim);
        for (auto& [e, c] : ms) {
            if (e[idx] == 0) continue;
            std::vector<int> e2 = e;
            e2[idx] -= 1;
            r.add_monomial(e2, c * Scalar(Rational(e[idx])));
        }
        return r;
    }

    // Iterated partial derivative; indices are 0-based coordinates.
    Poly diff_seq(const std::vector<int>& idxs) const {
        Poly r = *this;
        for (int i : idxs) {
            if (r.is_zero()) break;
            r = r.diff(i);
        }
        return r;
    }

    Scalar eval(const std::vector<Scalar>& point) const {
        if ((int)point.size() != dim) throw std::invalid_argument("eval dimension mismatch");
        Scalar acc;
        for (auto& [e, c] : ms) {
            Scalar t = c;
            for (int i = 0; i < dim; ++i)
                for (int k = 0; k < e[i]; ++k) t *= point[i];
            acc += t;
        }
        return acc;
    }

    // Composition: substitute args[i] (all of equal dimension) for variable i.
    Poly compose(const std::vector<Poly>& args) const {
        if ((int)args.size() != dim) throw std::invalid_argument("compose dimension mismatch");
        int outd = dim == 0 ? 0 : args[0].dim;
        for (auto& a : args)
            if (a.dim != outd) throw std::invalid_argument("compose argument dim mismatch");
        Poly r(outd);
        for (auto& [e, c] : ms) {
            Poly t = Poly::constant(outd, c);
            for (int i = 0; i < dim; ++i)
                for (int k = 0; k < e[i]; ++k) t = t * args[i];
            r += t;
        }
        return r;
    }
};

} // namespace microform

#endif
