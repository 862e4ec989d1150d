#ifndef MICROFORM_IO_HPP
#define MICROFORM_IO_HPP

#include <string>

#include <json.hpp>

#include "microform/expand.hpp"
#include "microform/super.hpp"

namespace microform {

using nlohmann::json;

// Polynomial format: {"dim": d, "monomials": [{"exp": [..], "re": "p/q", "im": "p/q"}]}
json poly_to_json(const Poly& p);
Poly poly_from_json(const json& j);

// Generating-function format:
// {"dim": d, "max_order": M, "symmetric": true, "source_dim": 0,
//  "coeffs": [{"hbar": h, "idx": [a1..am], "re": "p/q", "im": "p/q"} |
//             {"hbar": h, "idx": [..], "poly": {...}}],
//  "parities": [0,1,..]?}
// The file-level hbar power is the power of hbar itself; internally the
// entry is stored at hbar/i power h with the scalar multiplied by i^h.
json genfun_to_json(const GenFun& g);
GenFun genfun_from_json(const json& j);

// Graph exchange format:
// {"n_black": n, "n_white": m, "edges": [[b,w,mult]..],
//  "root": {"side": "black"|"white", "index": k}?, "hooked": bool?,
//  "weights": [..]?, "slot_order": [[..]..]?}
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);
json ograph_to_json(const OGraph& g);
OGraph ograph_from_json(const json& j);

// Coordinate-change format:
// {"y_forward": [poly..], "y_inverse": [poly..], "x_map": [poly..]?, "order": k}
struct CoordinateChange {
    std::vector<Poly> y_forward;
    std::vector<Poly> y_inverse;
    int order = 0;
};
CoordinateChange coordinate_change_from_json(const json& j);

// Expansion dump; re-parses to an equal structure.
json expansion_to_json(const Expansion& e);
Expansion expansion_from_json(const json& j);

json term_values_to_json(const Term& t);

std::string scalar_to_string(const Scalar& s);

} // namespace microform

#endif
