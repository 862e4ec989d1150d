#include "microform/genfun.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace microform {

void GenFun::set_coeff(int lam, std::vector<int> idx, Poly p) {
    if ((int)idx.size() > max_order) throw std::invalid_argument("coefficient order exceeds max_order");
    for (int a : idx)
        if (a < 1 || a > dim) throw std::out_of_range("coefficient index out of range");
    if (p.dim != source_dim) throw std::invalid_argument("coefficient poly dimension mismatch");
    if (symmetric) std::sort(idx.begin(), idx.end());
    if (p.is_zero())
        coeffs.erase({lam, idx});
    else
        coeffs[{lam, std::move(idx)}] = std::move(p);
}

Poly GenFun::coeff(int lam, std::vector<int> idx) const {
    if (symmetric) std::sort(idx.begin(), idx.end());
    auto it = coeffs.find({lam, idx});
    return it == coeffs.end() ? Poly(source_dim) : it->second;
}

LamPoly GenFun::coeff_lam(const std::vector<int>& idx) const {
    std::vector<int> key = idx;
    if (symmetric) std::sort(key.begin(), key.end());
    LamPoly r;
    for (auto& [k, p] : coeffs)
        if (k.second == key) r.emplace(k.first, p);
    return r;
}

std::vector<LamPoly> GenFun::phi() const {
    std::vector<LamPoly> r(dim);
    for (int a = 1; a <= dim; ++a) r[a - 1] = coeff_lam({a});
    return r;
}

GenFun GenFun::h0() const {
    GenFun r(source_dim, dim, max_order, symmetric);
    r.parities = parities;
    for (auto& [k, p] : coeffs)
        if (k.first == 0) r.coeffs.emplace(k, p);
    return r;
}

Rational tuple_orderings(const std::vector<int>& sorted_idx) {
    Rational n = factorial((int)sorted_idx.size());
    int run = 1;
    for (size_t i = 1; i <= sorted_idx.size(); ++i) {
        if (i < sorted_idx.size() && sorted_idx[i] == sorted_idx[i - 1]) {
            ++run;
        } else {
            n = n / factorial(run);
            run = 1;
        }
    }
    return n;
}

Poly GenFun::momentum_poly(int lam) const {
    if (source_dim != 0) throw std::logic_error("momentum_poly requires constant coefficients");
    Poly r(dim);
    for (auto& [k, p] : coeffs) {
        if (k.first != lam) continue;
        const std::vector<int>& idx = k.second;
        std::vector<int> e(dim, 0);
        for (int a : idx) e[a - 1] += 1;
        Scalar c = p.constant_term();
        if (symmetric)
            c = c * Scalar(tuple_orderings(idx));
        r.add_monomial(e, c);
    }
    return r;
}

std::vector<int> GenFun::lam_levels() const {
    std::set<int> ls;
    for (auto& [k, p] : coeffs) ls.insert(k.first);
    return {ls.begin(), ls.end()};
}

GenFun GenFun::identity(int d) {
    GenFun g(d, d, 1, true);
    for (int a = 1; a <= d; ++a) g.set_coeff(0, {a}, Poly::variable(d, a - 1));
    return g;
}

bool GenFun::has_positive_lam() const {
    for (auto& [k, p] : coeffs)
        if (k.first > 0) return true;
    return false;
}

} // namespace microform
