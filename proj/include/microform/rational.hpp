#ifndef MICROFORM_RATIONAL_HPP
#define MICROFORM_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace microform {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number, always normalized: gcd(num, den) = 1, den > 0.
struct Rational {
    BigInt num{0};
    BigInt den{1};

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(BigInt n) : num(std::move(n)), den(1) {}
    Rational(BigInt n, BigInt d) : num(std::move(n)), den(std::move(d)) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        if (num == 0) { den = 1; return; }
        BigInt g = boost::multiprecision::gcd(num < 0 ? BigInt(-num) : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num * b.num, a.den * b.den);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0) throw std::domain_error("rational division by zero");
        return Rational(a.num * b.den, a.den * b.num);
    }
    Rational operator-() const { Rational r; r.num = -num; r.den = den; return r; }
    Rational& operator+=(const Rational& b) { *this = *this + b; return *this; }
    Rational& operator-=(const Rational& b) { *this = *this - b; return *this; }
    Rational& operator*=(const Rational& b) { *this = *this * b; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num * b.den < b.num * a.den;
    }

    std::string str() const {
        std::string s = num.str();
        if (den != 1) s += "/" + den.str();
        return s;
    }

    // Accepts "p", "-p", "p/q".
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(BigInt(s), 1);
        return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    }
};

inline Rational factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return Rational(r);
}

// Gaussian rational a + b*i. The imaginary unit carries all the i-bookkeeping
// of the quantum calculus; hbar exponents are tracked separately.
struct Scalar {
    Rational re;
    Rational im;

    Scalar() = default;
    Scalar(long long n) : re(n) {}
    Scalar(Rational r) : re(std::move(r)) {}
    Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }
    // i^k for any integer k.
    static Scalar i_pow(long long k) {
        long long m = ((k % 4) + 4) % 4;
        switch (m) {
            case 0: return Scalar(1);
            case 1: return Scalar(Rational(0), Rational(1));
            case 2: return Scalar(Rational(-1), Rational(0));
            default: return Scalar(Rational(0), Rational(-1));
        }
    }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    friend Scalar operator+(const Scalar& a, const Scalar& b) { return {a.re + b.re, a.im + b.im}; }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return {a.re - b.re, a.im - b.im}; }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        Rational n = b.re * b.re + b.im * b.im;
        if (n.is_zero()) throw std::domain_error("scalar division by zero");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    Scalar operator-() const { return {-re, -im}; }
    Scalar& operator+=(const Scalar& b) { *this = *this + b; return *this; }
    Scalar& operator-=(const Scalar& b) { *this = *this - b; return *this; }
    Scalar& operator*=(const Scalar& b) { *this = *this * b; return *this; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string str() const {
        if (im.is_zero()) return re.str();
        if (re.is_zero()) return im.str() + "*i";
        return re.str() + (im.num < 0 ? "" : "+") + im.str() + "*i";
    }
};

} // namespace microform

#endif
