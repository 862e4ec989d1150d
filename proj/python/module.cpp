#include <pybind11/pybind11.h>

#include "microform/instances.hpp"
#include "microform/io.hpp"
#include "microform/latex.hpp"
#include "microform/oracle.hpp"

namespace py = pybind11;
using namespace microform;

namespace {

std::string pullback_json(const std::string& S_json, const std::string& g_json, int g_order,
                          int hbar_order, bool quantum) {
    GenFun S = genfun_from_json(json::parse(S_json));
    Poly g = poly_from_json(json::parse(g_json));
    Expansion e = quantum ? quantum_pullback(S, g, g_order, hbar_order)
                          : classical_pullback(S, g, g_order);
    return expansion_to_json(e).dump();
}

std::string pullback_latex(const std::string& S_json, const std::string& g_json, int g_order,
                           int hbar_order, bool quantum) {
    GenFun S = genfun_from_json(json::parse(S_json));
    Poly g = poly_from_json(json::parse(g_json));
    Expansion e = quantum ? quantum_pullback(S, g, g_order, hbar_order)
                          : classical_pullback(S, g, g_order);
    return latex_expansion(e);
}

std::string compose_json(const std::string& F_json, const std::string& G_json, int g_order,
                         int hbar_order, int mom_order, bool quantum) {
    GenFun F = genfun_from_json(json::parse(F_json));
    GenFun G = genfun_from_json(json::parse(G_json));
    ComposeResult r = quantum ? quantum_compose(F, G, g_order, hbar_order, mom_order)
                              : classical_compose(F, G, g_order, mom_order);
    json j;
    j["H"] = genfun_to_json(r.H);
    j["expansion"] = expansion_to_json(r.expansion);
    return j.dump();
}

std::string transform_json(const std::string& S_json, const std::string& change_json,
                           int hbar_order, int mom_order, bool quantum) {
    GenFun S = genfun_from_json(json::parse(S_json));
    CoordinateChange cc = coordinate_change_from_json(json::parse(change_json));
    TransformResult r = quantum ? quantum_transform(S, cc.y_forward, cc.y_inverse, cc.order,
                                                    hbar_order, mom_order)
                                : classical_transform(S, cc.y_forward, cc.y_inverse, cc.order,
                                                      mom_order);
    json j;
    j["S_new"] = genfun_to_json(r.S_new);
    j["expansion"] = expansion_to_json(r.expansion);
    return j.dump();
}

py::list enumerate_classes(int n_white, int n_loops, int max_black_degree) {
    py::list out;
    for (int w = 0; w <= n_white; ++w)
        for (int l = 0; l <= n_loops; ++l)
            for (const Graph& g : enumerate_graphs(w, l, max_black_degree)) {
                py::dict row;
                row["graph"] = graph_to_json(g).dump();
                row["sym"] = automorphism_count(g);
                row["weight"] = quantum_weight(g).str();
                row["loops"] = l;
                out.append(row);
            }
    return out;
}

bool verify_pullback(bool quantum, int dim, int g_order, int hbar_order, uint64_t seed,
                     int trials) {
    for (int t = 0; t < trials; ++t) {
        Rng rng(seed + (uint64_t)t);
        InstanceOptions opt;
        opt.hbar_levels = quantum ? 1 : 0;
        GenFun S = random_genfun(rng, dim, 3, opt);
        Poly g = random_poly(rng, dim, 3, opt);
        TargetFunction tf = TargetFunction::plain(g);
        Series expect = quantum ? quantum_oracle(S, tf, g_order, hbar_order)
                                : general_R(S, tf, g_order);
        Expansion e = quantum ? quantum_pullback(S, g, g_order, hbar_order)
                              : classical_pullback(S, g, g_order);
        if (!(e.to_series() == expect)) return false;
    }
    return true;
}

} // namespace

PYBIND11_MODULE(_microform, m) {
    m.doc() = "bipartite-graph expansion engine for thick morphism calculus";
    m.def("pullback_json", &pullback_json, py::arg("S_json"), py::arg("g_json"),
          py::arg("g_order"), py::arg("hbar_order") = 0, py::arg("quantum") = false);
    m.def("pullback_latex", &pullback_latex, py::arg("S_json"), py::arg("g_json"),
          py::arg("g_order"), py::arg("hbar_order") = 0, py::arg("quantum") = false);
    m.def("compose_json", &compose_json, py::arg("F_json"), py::arg("G_json"), py::arg("g_order"),
          py::arg("hbar_order"), py::arg("mom_order"), py::arg("quantum") = false);
    m.def("transform_json", &transform_json, py::arg("S_json"), py::arg("change_json"),
          py::arg("hbar_order"), py::arg("mom_order"), py::arg("quantum") = false);
    m.def("enumerate_classes", &enumerate_classes, py::arg("n_white"), py::arg("n_loops"),
          py::arg("max_black_degree") = 4);
    m.def("verify_pullback", &verify_pullback, py::arg("quantum"), py::arg("dim"),
          py::arg("g_order"), py::arg("hbar_order"), py::arg("seed"), py::arg("trials") = 5);
}
