#include "microform/latex.hpp"

#include <algorithm>

namespace microform {

namespace {

std::string index_letter(int k) {
    static const char* alphabet = "abcdefghijklmnopqrstuvwxyz";
    if (k < 26) return std::string(1, alphabet[k]);
    return std::string(1, alphabet[k % 26]) + "_{" + std::to_string(k / 26) + "}";
}

std::string rational_latex(const Rational& r) {
    if (r.den == 1) return r.num.str();
    return "\\frac{" + r.num.str() + "}{" + r.den.str() + "}";
}

struct IndexLayout {
    std::vector<std::vector<std::string>> black_idx; // per black: tensor indices
    std::vector<std::vector<std::string>> white_idx; // per white: derivative indices
    std::vector<std::vector<std::string>> white_free; // per white: free indices
    int next = 0;

    std::string fresh() { return index_letter(next++); }
};

IndexLayout layout(const Term& t, Expansion::Op op) {
    IndexLayout L;
    L.black_idx.resize(t.g.nb);
    L.white_idx.resize(t.g.nw);
    L.white_free.resize(t.g.nw);
    for (auto& [k, m] : t.g.edges)
        for (int c = 0; c < m; ++c) {
            std::string l = L.fresh();
            L.black_idx[k.first].push_back(l);
            L.white_idx[k.second].push_back(l);
        }
    for (int w = 0; w < t.g.nw; ++w) {
        int nf = 0;
        if (op == Expansion::Op::compose) nf = t.weights.empty() ? 0 : t.weights[w];
        if (op == Expansion::Op::transform) nf = 1;
        for (int j = 0; j < nf; ++j) L.white_free[w].push_back(L.fresh());
    }
    return L;
}

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (auto& x : v) s += x;
    return s;
}

} // namespace

std::string latex_term(const Term& t, Expansion::Op op, const std::string& target_symbol,
                       const std::string& source_symbol) {
    IndexLayout L = layout(t, op);
    std::string s;
    if (!(t.coefficient == Rational(1))) s += rational_latex(t.coefficient) + " ";
    if (t.lam_power == 1)
        s += "\\frac{\\hbar}{i} ";
    else if (t.lam_power > 1)
        s += "\\left(\\frac{\\hbar}{i}\\right)^{" + std::to_string(t.lam_power) + "} ";

    // momentum pairing prefix
    if (op == Expansion::Op::compose) {
        std::vector<std::string> free;
        for (auto& f : L.white_free) free.insert(free.end(), f.begin(), f.end());
        if (!free.empty()) s += "r_{" + join(free) + "} ";
    } else if (op == Expansion::Op::transform) {
        std::vector<std::string> free;
        for (auto& f : L.white_free) free.insert(free.end(), f.begin(), f.end());
        if (!free.empty()) s += "q'_{" + join(free) + "} ";
    }

    for (int b = 0; b < t.g.nb; ++b) {
        s += source_symbol;
        if (!L.black_idx[b].empty()) s += "^{" + join(L.black_idx[b]) + "}";
        else if (t.g.nb == 1 && t.g.nw == 0) s += "^{0}";
        s += " ";
    }
    for (int w = 0; w < t.g.nw; ++w) {
        for (auto& l : L.white_idx[w]) s += "\\partial_{" + l + "} ";
        if (op == Expansion::Op::compose) {
            s += target_symbol;
            if (!L.white_free[w].empty()) s += "^{" + join(L.white_free[w]) + "}";
            else s += "^{0}";
            s += "(\\varphi) ";
        } else if (op == Expansion::Op::transform) {
            s += "y'^{" + join(L.white_free[w]) + "}(\\varphi) ";
        } else {
            s += target_symbol + "(\\varphi) ";
        }
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
}

std::string latex_expansion(const Expansion& e, const std::string& target_symbol,
                            const std::string& source_symbol) {
    std::string s;
    for (const Term& t : e.terms) {
        if (!s.empty()) s += " + ";
        s += latex_term(t, e.op, target_symbol, source_symbol);
    }
    return s;
}

std::string text_term(const Term& t, Expansion::Op op, const std::string& target_symbol,
                      const std::string& source_symbol) {
    IndexLayout L = layout(t, op);
    std::string s;
    if (!(t.coefficient == Rational(1))) s += t.coefficient.str() + " ";
    if (t.lam_power == 1)
        s += "(hb/i) ";
    else if (t.lam_power > 1)
        s += "(hb/i)^" + std::to_string(t.lam_power) + " ";
    if (op == Expansion::Op::compose || op == Expansion::Op::transform) {
        std::vector<std::string> free;
        for (auto& f : L.white_free) free.insert(free.end(), f.begin(), f.end());
        if (!free.empty())
            s += std::string(op == Expansion::Op::compose ? "r[" : "q'[") + join(free) + "] ";
    }
    for (int b = 0; b < t.g.nb; ++b) {
        s += source_symbol;
        if (!L.black_idx[b].empty()) s += "^" + join(L.black_idx[b]);
        else if (t.g.nb == 1 && t.g.nw == 0) s += "0";
        s += " ";
    }
    for (int w = 0; w < t.g.nw; ++w) {
        if (!L.white_idx[w].empty()) s += "d_" + join(L.white_idx[w]) + " ";
        if (op == Expansion::Op::compose)
            s += target_symbol + "^" + (L.white_free[w].empty() ? "0" : join(L.white_free[w])) +
                 "(phi) ";
        else if (op == Expansion::Op::transform)
            s += "y'^" + join(L.white_free[w]) + "(phi) ";
        else
            s += target_symbol + "(phi) ";
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
}

std::string text_expansion(const Expansion& e, const std::string& target_symbol,
                           const std::string& source_symbol) {
    std::string s;
    for (const Term& t : e.terms) {
        if (!s.empty()) s += "\n";
        s += text_term(t, e.op, target_symbol, source_symbol);
    }
    return s;
}

} // namespace microform
