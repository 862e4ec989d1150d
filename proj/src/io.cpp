#include "microform/io.hpp"

#include <stdexcept>

namespace microform {

namespace {

json rational_str(const Rational& r) { return r.str(); }

Rational rational_from(const json& j) {
    if (j.is_number_integer()) return Rational((long long)j.get<long long>());
    return Rational::parse(j.get<std::string>());
}

} // namespace

std::string scalar_to_string(const Scalar& s) { return s.str(); }

json poly_to_json(const Poly& p) {
    json j;
    j["dim"] = p.dim;
    json ms = json::array();
    for (auto& [e, c] : p.ms) {
        json m;
        m["exp"] = e;
        m["re"] = rational_str(c.re);
        if (!c.im.is_zero()) m["im"] = rational_str(c.im);
        ms.push_back(m);
    }
    j["monomials"] = ms;
    return j;
}

Poly poly_from_json(const json& j) {
    Poly p(j.at("dim").get<int>());
    for (auto& m : j.at("monomials")) {
        std::vector<int> e = m.at("exp").get<std::vector<int>>();
        if ((int)e.size() != p.dim) throw std::invalid_argument("monomial exponent length mismatch");
        Scalar c(rational_from(m.at("re")), m.contains("im") ? rational_from(m.at("im")) : Rational(0));
        p.add_monomial(e, c);
    }
    return p;
}

json genfun_to_json(const GenFun& g) {
    json j;
    j["dim"] = g.dim;
    j["max_order"] = g.max_order;
    j["symmetric"] = g.symmetric;
    j["source_dim"] = g.source_dim;
    json cs = json::array();
    for (auto& [k, p] : g.coeffs) {
        auto& [h, idx] = k;
        json c;
        c["hbar"] = h;
        c["idx"] = idx;
        // internal entry = file entry * i^h; invert for output
        if (p.is_constant()) {
            Scalar v = p.constant_term() * Scalar::i_pow(-(long long)h);
            c["re"] = rational_str(v.re);
            c["im"] = rational_str(v.im);
        } else {
            Poly q = p.scaled(Scalar::i_pow(-(long long)h));
            c["poly"] = poly_to_json(q);
        }
        cs.push_back(c);
    }
    j["coeffs"] = cs;
    if (g.parities) j["parities"] = *g.parities;
    return j;
}

GenFun genfun_from_json(const json& j) {
    int dim = j.at("dim").get<int>();
    int max_order = j.at("max_order").get<int>();
    bool symmetric = j.value("symmetric", true);
    int source_dim = j.value("source_dim", 0);
    GenFun g(source_dim, dim, max_order, symmetric);
    for (auto& c : j.at("coeffs")) {
        int h = c.value("hbar", 0);
        if (h < 0) throw std::invalid_argument("negative hbar power in file");
        std::vector<int> idx = c.at("idx").get<std::vector<int>>();
        Poly p(source_dim);
        if (c.contains("poly")) {
            p = poly_from_json(c.at("poly"));
        } else {
            Scalar v(rational_from(c.at("re")),
                     c.contains("im") ? rational_from(c.at("im")) : Rational(0));
            p = Poly::constant(source_dim, v);
        }
        p = p.scaled(Scalar::i_pow(h));
        Poly cur = g.coeff(h, idx);
        g.set_coeff(h, idx, cur + p);
    }
    if (j.contains("parities")) g.parities = j.at("parities").get<std::vector<int>>();
    return g;
}

json graph_to_json(const Graph& g) {
    json j;
    j["n_black"] = g.nb;
    j["n_white"] = g.nw;
    json es = json::array();
    for (auto& [k, m] : g.edges) es.push_back(json::array({k.first, k.second, m}));
    j["edges"] = es;
    if (g.root_side != RootSide::none) {
        j["root"] = {{"side", g.root_side == RootSide::black ? "black" : "white"},
                     {"index", g.root}};
        if (g.hooked) j["hooked"] = true;
    }
    return j;
}

Graph graph_from_json(const json& j) {
    Graph g;
    g.nb = j.at("n_black").get<int>();
    g.nw = j.at("n_white").get<int>();
    for (auto& e : j.at("edges")) {
        int b = e.at(0).get<int>(), w = e.at(1).get<int>(), m = e.at(2).get<int>();
        g.edges[{b, w}] += m;
    }
    if (j.contains("root")) {
        std::string side = j.at("root").at("side").get<std::string>();
        g.root_side = side == "black" ? RootSide::black : RootSide::white;
        g.root = j.at("root").at("index").get<int>();
        g.hooked = j.value("hooked", false);
    }
    g.validate();
    return g;
}

json ograph_to_json(const OGraph& g) {
    json j;
    j["n_black"] = g.nb;
    j["n_white"] = g.nw;
    j["slot_order"] = g.slots;
    return j;
}

OGraph ograph_from_json(const json& j) {
    OGraph g;
    g.nb = j.at("n_black").get<int>();
    g.nw = j.at("n_white").get<int>();
    g.slots = j.at("slot_order").get<std::vector<std::vector<int>>>();
    if ((int)g.slots.size() != g.nb) throw std::invalid_argument("slot table size mismatch");
    for (auto& row : g.slots)
        for (int w : row)
            if (w < 0 || w >= g.nw) throw std::invalid_argument("slot target out of range");
    return g;
}

CoordinateChange coordinate_change_from_json(const json& j) {
    CoordinateChange c;
    for (auto& p : j.at("y_forward")) c.y_forward.push_back(poly_from_json(p));
    for (auto& p : j.at("y_inverse")) c.y_inverse.push_back(poly_from_json(p));
    c.order = j.at("order").get<int>();
    return c;
}

json term_values_to_json(const Term& t) {
    json vs = json::array();
    for (auto& [key, lp] : t.values) {
        for (auto& [lam, p] : lp) {
            json v;
            v["idx"] = key;
            v["hbar_over_i"] = lam + t.lam_power;
            if (p.is_constant()) {
                Scalar s = p.constant_term();
                v["re"] = rational_str(s.re);
                v["im"] = rational_str(s.im);
            } else {
                v["poly"] = poly_to_json(p);
            }
            vs.push_back(v);
        }
    }
    return vs;
}

json expansion_to_json(const Expansion& e) {
    json j;
    j["op"] = e.op == Expansion::Op::pullback   ? "pullback"
              : e.op == Expansion::Op::compose  ? "compose"
                                                : "transform";
    j["quantum"] = e.quantum;
    j["orders"] = {{"g", e.g_order}, {"hbar", e.hbar_order}, {"momentum", e.mom_order}};
    j["out_dim"] = e.out_dim;
    json ts = json::array();
    for (const Term& t : e.terms) {
        json tj;
        tj["graph"] = graph_to_json(t.g);
        if (!t.weights.empty()) tj["weights"] = t.weights;
        tj["coefficient"] = t.coefficient.str();
        tj["sym"] = t.sym;
        tj["hbar_over_i"] = t.lam_power;
        tj["values"] = term_values_to_json(t);
        ts.push_back(tj);
    }
    j["terms"] = ts;
    return j;
}

Expansion expansion_from_json(const json& j) {
    Expansion e;
    std::string op = j.at("op").get<std::string>();
    e.op = op == "pullback"  ? Expansion::Op::pullback
           : op == "compose" ? Expansion::Op::compose
                             : Expansion::Op::transform;
    e.quantum = j.at("quantum").get<bool>();
    e.g_order = j.at("orders").at("g").get<int>();
    e.hbar_order = j.at("orders").at("hbar").get<int>();
    e.mom_order = j.at("orders").at("momentum").get<int>();
    e.out_dim = j.value("out_dim", 0);
    for (auto& tj : j.at("terms")) {
        Term t;
        t.g = graph_from_json(tj.at("graph"));
        if (tj.contains("weights")) t.weights = tj.at("weights").get<std::vector<int>>();
        t.coefficient = Rational::parse(tj.at("coefficient").get<std::string>());
        t.sym = tj.at("sym").get<long long>();
        t.lam_power = tj.at("hbar_over_i").get<int>();
        for (auto& v : tj.at("values")) {
            std::vector<int> key = v.at("idx").get<std::vector<int>>();
            int lam = v.at("hbar_over_i").get<int>() - t.lam_power;
            Poly p;
            if (v.contains("poly"))
                p = poly_from_json(v.at("poly"));
            else
                p = Poly::constant(0, Scalar(rational_from(v.at("re")),
                                             v.contains("im") ? rational_from(v.at("im"))
                                                              : Rational(0)));
            auto& lp = t.values[key];
            auto [it, fresh] = lp.try_emplace(lam, p);
            if (!fresh) it->second += p;
        }
        e.terms.push_back(std::move(t));
    }
    return e;
}

} // namespace microform
