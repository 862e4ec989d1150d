#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "microform/instances.hpp"
#include "microform/io.hpp"
#include "microform/latex.hpp"
#include "microform/oracle.hpp"

using namespace microform;

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

int exit_code_for(const std::exception& e) {
    std::string msg = e.what();
    if (msg.find("dimension") != std::string::npos || msg.find("mismatch") != std::string::npos)
        return 3;
    return 2;
}

void print_expansion(const Expansion& e, const std::string& format) {
    if (format == "json") {
        std::cout << expansion_to_json(e).dump(2) << "\n";
    } else if (format == "latex") {
        std::cout << latex_expansion(e) << "\n";
    } else {
        std::cout << text_expansion(e) << "\n";
        Series s = e.to_series();
        std::cout << "total = " << s.str() << "\n";
    }
}

struct VerifyReport {
    bool ok = true;
    std::string detail;
};

VerifyReport verify_pullback(bool quantum, int dim, int g_order, int hbar_order, uint64_t seed) {
    Rng rng(seed);
    InstanceOptions opt;
    opt.hbar_levels = quantum ? 1 : 0;
    GenFun S = random_genfun(rng, dim, 3, opt);
    Poly g = random_poly(rng, dim, 3, opt);
    TargetFunction tf = TargetFunction::plain(g);
    Series expect = quantum ? quantum_oracle(S, tf, g_order, hbar_order)
                            : general_R(S, tf, g_order);
    Expansion e = quantum ? quantum_pullback(S, g, g_order, hbar_order)
                          : classical_pullback(S, g, g_order);
    Series got = e.to_series();
    if (got == expect) return {};
    Series diff = got - expect;
    return {false, "first differing term: " + diff.str().substr(0, 200)};
}

VerifyReport verify_compose(bool quantum, int dim, int g_order, int hbar_order, int mom_order,
                            uint64_t seed) {
    Rng rng(seed);
    InstanceOptions opt;
    opt.hbar_levels = quantum ? 1 : 0;
    GenFun F = random_genfun(rng, dim, 3, opt);
    GenFun G = random_genfun_field(rng, dim, dim, 2, 2, opt);
    TargetFunction tf = TargetFunction::from_genfun(G);
    Series expect = quantum ? quantum_oracle(F, tf, g_order, hbar_order, mom_order)
                            : general_R(F, tf, g_order, mom_order);
    Expansion e = quantum ? quantum_compose(F, G, g_order, hbar_order, mom_order).expansion
                          : classical_compose(F, G, g_order, mom_order).expansion;
    Series got = e.to_series();
    if (got == expect) return {};
    Series diff = got - expect;
    return {false, "first differing term: " + diff.str().substr(0, 200)};
}

VerifyReport verify_transform(bool quantum, int dim, int hbar_order, int mom_order,
                              uint64_t seed) {
    Rng rng(seed);
    InstanceOptions opt;
    opt.hbar_levels = quantum ? 1 : 0;
    GenFun S = random_genfun(rng, dim, 3, opt);
    std::vector<Scalar> phi(dim);
    for (int a = 1; a <= dim; ++a) phi[a - 1] = S.coeff(0, {a}).constant_term();
    CoordinatePair cp = random_coordinate_pair(rng, dim, mom_order, phi, opt);
    TargetFunction tf = TargetFunction::from_coordinate_change(cp.inv);
    Series expect = quantum ? quantum_oracle(S, tf, mom_order, hbar_order, mom_order)
                            : general_R(S, tf, mom_order, mom_order);
    Expansion e = quantum ? quantum_transform(S, cp.fwd, cp.inv, mom_order, hbar_order, mom_order)
                                .expansion
                          : classical_transform(S, cp.fwd, cp.inv, mom_order, mom_order).expansion;
    Series got = e.to_series();
    if (got == expect) return {};
    Series diff = got - expect;
    return {false, "first differing term: " + diff.str().substr(0, 200)};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bipartite-graph expansion engine for thick morphism calculus"};
    app.require_subcommand(1);

    std::string format = "text";
    bool classical = false, quantum = false, super_mode = false, ordered = false;
    int white = 0, loops = 0, g_order = 2, hbar_order = 0, momentum_order = 4;
    int trials = 10, dim = 1;
    uint64_t seed = 1;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_flag("--classical", classical, "classical mode");
        cmd->add_flag("--quantum", quantum, "quantum mode");
        cmd->add_flag("--super", super_mode, "super (ordered, signed) mode");
        cmd->add_flag("--ordered", ordered, "labeled ordered-graph enumeration");
        cmd->add_option("--white", white, "number of white vertices (cumulative bound)");
        cmd->add_option("--loops", loops, "number of loops (cumulative bound)");
        cmd->add_option("--g-order", g_order, "order in the target function");
        cmd->add_option("--hbar-order", hbar_order, "order in hbar");
        cmd->add_option("--momentum-order", momentum_order, "momentum order / max black degree");
        cmd->add_option("--format", format, "latex|json|text");
        cmd->add_option("--trials", trials, "verification trials");
        cmd->add_option("--seed", seed, "verification seed");
        cmd->add_option("--dim", dim, "dimension for generated instances");
    };

    std::vector<std::string> files;
    auto* c_enum = app.add_subcommand("enumerate", "list graph classes");
    add_common(c_enum);
    auto* c_pull = app.add_subcommand("pullback", "expand a pullback");
    add_common(c_pull);
    c_pull->add_option("inputs", files, "S.json g.json")->expected(2);
    auto* c_comp = app.add_subcommand("compose", "compose two generating functions");
    add_common(c_comp);
    c_comp->add_option("inputs", files, "F.json G.json")->expected(2);
    auto* c_tran = app.add_subcommand("transform", "change coordinates");
    add_common(c_tran);
    c_tran->add_option("inputs", files, "S.json change.json")->expected(2);
    auto* c_verify = app.add_subcommand("verify", "compare expansions against the oracles");
    add_common(c_verify);
    std::string verify_op = "pullback";
    c_verify->add_option("--operation", verify_op, "pullback|compose|transform");
    auto* c_sign = app.add_subcommand("sign", "crossing sign of an ordered graph");
    add_common(c_sign);
    c_sign->add_option("inputs", files, "graph.json")->expected(1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_enum->parsed()) {
            json out = json::array();
            for (int w = 0; w <= white; ++w) {
                for (int l = 0; l <= loops; ++l) {
                    if (ordered) {
                        for (const OGraph& g : enumerate_ordered_graphs(w, l, momentum_order)) {
                            json row = ograph_to_json(g);
                            row["loops"] = l;
                            out.push_back(row);
                        }
                    } else {
                        for (const Graph& g : enumerate_graphs(w, l, momentum_order)) {
                            json row = graph_to_json(g);
                            row["loops"] = l;
                            row["sym"] = automorphism_count(g);
                            row["weight"] = quantum_weight(g).str();
                            out.push_back(row);
                        }
                    }
                }
            }
            if (format == "json") {
                std::cout << out.dump(2) << "\n";
            } else {
                for (auto& row : out) std::cout << row.dump() << "\n";
                std::cout << out.size() << " classes\n";
            }
            return 0;
        }

        if (c_pull->parsed()) {
            GenFun S = genfun_from_json(load_json(files[0]));
            Poly g = poly_from_json(load_json(files[1]));
            Expansion e;
            if (super_mode) {
                if (!S.parities) throw std::invalid_argument("parity table incomplete");
                ParityTable pt{*S.parities};
                e = assemble_super(S, g, pt, g_order, hbar_order);
            } else {
                e = quantum ? quantum_pullback(S, g, g_order, hbar_order)
                            : classical_pullback(S, g, g_order);
            }
            print_expansion(e, format);
            return 0;
        }

        if (c_comp->parsed()) {
            GenFun F = genfun_from_json(load_json(files[0]));
            GenFun G = genfun_from_json(load_json(files[1]));
            ComposeResult r = quantum ? quantum_compose(F, G, g_order, hbar_order, momentum_order)
                                      : classical_compose(F, G, g_order, momentum_order);
            if (format == "json") {
                json j;
                j["H"] = genfun_to_json(r.H);
                j["expansion"] = expansion_to_json(r.expansion);
                std::cout << j.dump(2) << "\n";
            } else if (format == "latex") {
                std::cout << latex_expansion(r.expansion, "G", "F") << "\n";
            } else {
                std::cout << text_expansion(r.expansion, "G", "F") << "\n";
            }
            return 0;
        }

        if (c_tran->parsed()) {
            GenFun S = genfun_from_json(load_json(files[0]));
            CoordinateChange cc = coordinate_change_from_json(load_json(files[1]));
            TransformResult r =
                quantum ? quantum_transform(S, cc.y_forward, cc.y_inverse, cc.order, hbar_order,
                                            momentum_order)
                        : classical_transform(S, cc.y_forward, cc.y_inverse, cc.order,
                                              momentum_order);
            if (format == "json") {
                json j;
                j["S_new"] = genfun_to_json(r.S_new);
                j["expansion"] = expansion_to_json(r.expansion);
                std::cout << j.dump(2) << "\n";
            } else if (format == "latex") {
                std::cout << latex_expansion(r.expansion, "y'", "S") << "\n";
            } else {
                std::cout << text_expansion(r.expansion, "y'", "S") << "\n";
            }
            return 0;
        }

        if (c_verify->parsed()) {
            bool q = quantum && !classical;
            for (int t = 0; t < trials; ++t) {
                uint64_t s = seed + (uint64_t)t;
                int d = 1 + (int)(s % (uint64_t)dim);
                VerifyReport rep;
                if (verify_op == "compose")
                    rep = verify_compose(q, d, g_order, hbar_order, momentum_order, s);
                else if (verify_op == "transform")
                    rep = verify_transform(q, d, hbar_order, momentum_order, s);
                else
                    rep = verify_pullback(q, d, g_order, hbar_order, s);
                if (!rep.ok) {
                    std::cout << "trial " << t << " seed " << s << " MISMATCH: " << rep.detail
                              << "\n";
                    return 4;
                }
                std::cout << "trial " << t << " seed " << s << " ok\n";
            }
            return 0;
        }

        if (c_sign->parsed()) {
            json j = load_json(files[0]);
            OGraph g = ograph_from_json(j);
            std::vector<int> parities = j.at("edge_parities").get<std::vector<int>>();
            int s1 = graph_sign_exponent(g, parities);
            int s2 = graph_sign_exponent_partition(g, parities);
            json out;
            out["crossing_parity"] = s1;
            out["partition_parity"] = s2;
            out["sign"] = s1 == 0 ? 1 : -1;
            if (format == "json")
                std::cout << out.dump(2) << "\n";
            else
                std::cout << "sign " << (s1 == 0 ? "+1" : "-1") << " (crossing parity " << s1
                          << ", partition parity " << s2 << ")\n";
            return s1 == s2 ? 0 : 4;
        }
    } catch (const json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
    return 0;
}
