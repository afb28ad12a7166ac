#pragma once

// Command-line front end. run() never calls exit(); it returns the process
// status so tests can drive it in-process.
//
//   0  success (and every requested identity held)
//   1  an identity check failed
//   2  bad input: unreadable file, malformed JSON, invalid values, unknown flags

#include "gammacheb/ce_index.hpp"
#include "gammacheb/chebyshev.hpp"
#include "gammacheb/gamma.hpp"
#include "gammacheb/json_io.hpp"
#include "gammacheb/realroot.hpp"
#include "gammacheb/simplicial.hpp"
#include "gammacheb/sl2.hpp"
#include "gammacheb/sweep.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace gammacheb::cli {

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string subcommand;
    std::string in_path;
    std::string inline_json;
    std::string out_path;
    bool verify = false;
    std::optional<std::size_t> order;
    std::uint64_t seed = 0;
    bool reduce_odd = false;
    std::string edge;
    std::size_t n = 0;
    std::string kind;
    std::size_t count = 0;
};

namespace detail {

inline Json parse_json(const std::string& text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        // e.byte is 1-based and points just past the offending character
        std::size_t line = 1, col = 1;
        const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw input_error("malformed JSON in " + source + " at line " + std::to_string(line) + ", column " +
                          std::to_string(col));
    }
}

inline Json load_input(const Config& cfg) {
    if (!cfg.inline_json.empty()) return parse_json(cfg.inline_json, "--json");
    if (!cfg.in_path.empty()) {
        std::ifstream f(cfg.in_path, std::ios::binary);
        if (!f) throw input_error("cannot open input file '" + cfg.in_path + "'");
        std::stringstream ss;
        ss << f.rdbuf();
        return parse_json(ss.str(), cfg.in_path);
    }
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return parse_json(ss.str(), "standard input");
}

inline ReciprocalPoly load_reciprocal(const Config& cfg) {
    Poly p = poly_from_json(load_input(cfg));
    if (cfg.reduce_odd && p.degree() && *p.degree() % 2 == 1) return reduce_odd_reciprocal(p);
    return ReciprocalPoly(p);
}

inline Edge parse_edge(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw input_error("--edge expects u,v");
    try {
        std::size_t used_u = 0, used_v = 0;
        const std::string su = text.substr(0, comma), sv = text.substr(comma + 1);
        int u = std::stoi(su, &used_u), v = std::stoi(sv, &used_v);
        if (used_u != su.size() || used_v != sv.size()) throw std::invalid_argument("trailing characters");
        return {u, v};
    } catch (const std::logic_error&) {
        throw input_error("--edge expects two integers, got '" + text + "'");
    }
}

inline Json fvector_json(const SimplicialComplex& k) {
    Json arr = Json::array();
    for (auto c : faces(k).counts) arr.push_back(c);
    return arr;
}

struct Result {
    std::string text;
    int status = 0;
};

inline Result json_result(const Json& j, bool ok = true) { return {j.dump(), ok ? 0 : 1}; }

inline Result cmd_gamma(const Config& cfg) {
    ReciprocalPoly h = load_reciprocal(cfg);
    GammaVector peel = gamma_by_peeling(h);
    bool agree = false;
    try {
        agree = peel == gamma_by_catalan(h, cfg.order) && peel == gamma_by_cheb(h);
    } catch (const consistency_error&) {
        agree = false;
    }
    Json j;
    j["gamma"] = to_json(peel.entries);
    j["routes_agree"] = agree;
    bool ok = agree;
    if (cfg.verify) {
        bool recon = peel.reconstruct() == h.poly();
        bool variants = verify_gamchebinv_variants(h);
        bool basis = gamma_by_basis(h) == peel;
        j["reconstructs"] = recon;
        j["rewritten_identities"] = variants;
        j["basis_route_agrees"] = basis;
        ok = ok && recon && variants && basis;
    }
    return json_result(j, ok);
}

inline Result cmd_g_poly(const Config& cfg) {
    ReciprocalPoly h = load_reciprocal(cfg);
    Poly g = g_from_palindromic(h);
    Json j;
    j["g"] = to_json(g);
    j["identity_holds"] = palindromic_identity_holds(h, g);
    bool ok = j["identity_holds"].get<bool>();
    if (cfg.verify && h.even()) {
        j["gamma_variants_hold"] = verify_gamchebinv_variants(h);
        ok = ok && j["gamma_variants_hold"].get<bool>();
    }
    return json_result(j, ok);
}

inline Result cmd_realroot(const Config& cfg) {
    Poly p = poly_from_json(load_input(cfg));
    if (p.is_zero()) throw input_error("realroot needs a nonzero polynomial");
    RootCount rc = count_real_roots(p);
    bool rhs = is_real_rooted(reciprocal_of(p));
    Json j;
    j["lhs_real_rooted"] = rc.is_real_rooted;
    j["rhs_real_rooted"] = rhs;
    j["agree"] = rc.is_real_rooted == rhs;
    j["degree"] = rc.degree;
    j["distinct_real_roots"] = rc.distinct_real;
    j["real_roots_with_multiplicity"] = rc.total_real;
    return json_result(j, rc.is_real_rooted == rhs);
}

inline Result cmd_cheblin(const Config& cfg) {
    std::vector<Rational> a = rationals_from_json(load_input(cfg));
    if (a.empty()) throw input_error("cheblin needs a_0..a_r");
    CheblinReport r = check_cheblinreal(a);
    Json j;
    j["lhs_real_rooted"] = r.lhs_real_rooted;
    j["rhs_real_rooted"] = r.rhs_real_rooted;
    j["agree"] = r.agree;
    j["h"] = to_json(reciprocal_from_cheb_coeffs(a, a.size() - 1).poly());
    j["printed_rhs_real_rooted"] = r.printed_rhs_real_rooted;
    j["printed_agree"] = r.printed_agree;
    j["gamma_real_rooted"] = r.gamma_real_rooted;
    // a report by default; --verify turns disagreement into a failure
    return json_result(j, !cfg.verify || r.agree);
}

inline Result cmd_subdivide(const Config& cfg) {
    SimplicialComplex k = complex_from_json(load_input(cfg));
    SimplicialComplex out = cfg.edge.empty() ? tchebyshev_triangulation(k) : stellar_subdivide_edge(k, parse_edge(cfg.edge));
    Json j = to_json(out);
    j["f_vector"] = fvector_json(out);
    bool ok = true;
    if (cfg.verify) {
        bool euler = euler_characteristic(out) == euler_characteristic(k);
        j["euler_preserved"] = euler;
        ok = euler;
        if (cfg.edge.empty()) {
            bool t = F_polynomial(out) == T_transform(F_polynomial(k));
            j["T_transform_holds"] = t;
            ok = ok && t;
        }
    }
    return json_result(j, ok);
}

inline Result cmd_fvector(const Config& cfg) {
    SimplicialComplex k = complex_from_json(load_input(cfg));
    Json j;
    j["f_vector"] = fvector_json(k);
    j["f_polynomial"] = to_json(f_polynomial(k));
    j["F_polynomial"] = to_json(F_polynomial(k));
    if (!k.is_empty()) j["euler_characteristic"] = euler_characteristic(k);
    return json_result(j);
}

inline Result cmd_verify_subdiv(const Config& cfg) {
    SimplicialComplex k = complex_from_json(load_input(cfg));
    Json j;
    bool t = verify_T_transform(k);
    UTransformReport u = u_transform_report(k);
    GammaSubdivisionReport g = verify_gamma_subdivision(k);
    j["T_transform"] = t;
    j["U_derivative_identity"] = u.derivative_identity;
    j["F_second_kind"] = to_json(u.F_second_kind);
    Json gj;
    gj["valid"] = g.valid;
    if (g.valid) {
        gj["d"] = g.d;
        gj["skeleton_dim"] = g.skeleton_dim;
        gj["h"] = to_json(g.h);
        gj["gamma"] = to_json(g.gamma.entries);
        gj["lhs"] = to_json(g.lhs);
        gj["rhs"] = to_json(g.rhs);
    }
    gj["agree"] = g.agree;
    j["gamma_subdivision"] = gj;
    bool ok = t && u.derivative_identity && (!g.valid || g.agree);
    const std::size_t edges = k.is_empty() ? 0 : k.edges().size();
    if (edges <= 8) {
        bool oi = order_independence_check(k);
        j["order_independent"] = oi;
        ok = ok && oi;
    } else {
        j["order_independent"] = nullptr;
    }
    return json_result(j, ok);
}

inline Result cmd_ce_index(const Config& cfg) {
    CePoly psi = tcheb_ce_index(cfg.n);
    Poly cx = specialize(psi, Poly::x(), Poly::constant(1));
    Poly ex = specialize(psi, Poly::constant(1), Poly::x());
    std::string text = to_string(psi) + "\nc=x, e=1: " + to_string(cx) + "\nc=1, e=x: " + to_string(ex);
    int status = 0;
    if (cfg.verify) {
        bool ok = cx == cheb_T(cfg.n);
        text += std::string("\nchebyshev_T: ") + (ok ? "ok" : "FAILED");
        status = ok ? 0 : 1;
    }
    return {text, status};
}

inline Result cmd_sl2(const Config& cfg) {
    ReciprocalPoly h = load_reciprocal(cfg);
    LaurentPoly image = char_image(h);
    CharacterClass cls = decompose_characters(image);
    UnimodalPair pair = unimodal_pair(h);
    Json mult = Json::object();
    for (auto it = cls.multiplicities.rbegin(); it != cls.multiplicities.rend(); ++it)
        mult[std::to_string(it->first)] = to_json(it->second);
    Json j;
    j["multiplicities"] = mult;
    j["F"] = to_json(pair.F);
    j["G"] = to_json(pair.G);
    bool ok = true;
    if (cfg.verify) {
        bool recon = cls.reconstruct() == image;
        Part3Report p3 = part3_report(h);
        Json rows = Json::array();
        for (const auto& r : p3.rows)
            rows.push_back(Json{{"j", r.j},
                                {"chi_j", to_json(r.chi_j)},
                                {"sym_j", to_json(r.sym_j)},
                                {"j_minus_1_weighted", to_json(r.stated)},
                                {"j_weighted", to_json(r.j_weighted)}});
        j["reconstructs"] = recon;
        j["derivative_classes"] = rows;
        j["matches_2j_rule"] = p3.matches_2j_rule;
        ok = recon;
    }
    return json_result(j, ok);
}

inline Result cmd_sweep(const Config& cfg) {
    SweepReport rep = run_sweep(cfg.kind, cfg.count, cfg.seed);
    return json_result(rep.to_json(), rep.fail == 0);
}

inline void add_input(CLI::App* sub, Config& cfg) {
    auto* in = sub->add_option("--in", cfg.in_path, "input JSON file (default: standard input)");
    auto* js = sub->add_option("--json", cfg.inline_json, "inline JSON input");
    in->excludes(js);
}

inline void add_common(CLI::App* sub, Config& cfg) {
    sub->add_option("--out", cfg.out_path, "write output here instead of standard output");
    sub->add_flag("--verify", cfg.verify, "run the extra identity checks; failures exit 1");
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    Config cfg;
    CLI::App app{"Exact gamma vectors, Chebyshev expansions and Tchebyshev triangulations", "gammacheb"};
    app.require_subcommand(1);

    struct Entry {
        const char* name;
        const char* help;
        bool input;
    };
    const Entry entries[] = {
        {"gamma", "gamma vector of a reciprocal polynomial by three routes", true},
        {"g-poly", "g with h(t) = t^n g(t + 1/t)", true},
        {"realroot", "real-rootedness of p and of its reciprocal", true},
        {"cheblin", "real-rootedness report for sum a_j T_j(x)", true},
        {"subdivide", "Tchebyshev triangulation, or one stellar edge subdivision with --edge", true},
        {"fvector", "f-vector, f- and F-polynomials of a complex", true},
        {"verify-subdiv", "T/U-transform, gamma and edge-order checks on a complex", true},
        {"ce-index", "ce-index of the n-th Tchebyshev poset and its specializations", false},
        {"sl2", "sl(2) character decomposition and the unimodal pair (F, G)", true},
        {"sweep", "seeded randomized property sweep", false},
    };
    std::map<std::string, CLI::App*> subs;
    for (const auto& e : entries) {
        CLI::App* sub = app.add_subcommand(e.name, e.help);
        if (e.input) detail::add_input(sub, cfg);
        detail::add_common(sub, cfg);
        subs[e.name] = sub;
    }
    subs["gamma"]->add_option("--order", cfg.order, "working order of the Catalan series route");
    for (const char* name : {"gamma", "g-poly", "sl2"})
        subs[name]->add_flag("--reduce-odd", cfg.reduce_odd, "divide an odd-degree input by (1 + t) first");
    subs["subdivide"]->add_option("--edge", cfg.edge, "subdivide only this edge, given as u,v");
    subs["ce-index"]->add_option("n", cfg.n, "poset rank")->required();
    subs["sweep"]->add_option("kind", cfg.kind, "gamma-routes | cheblin | petersen | subdiv | ce-offset")
        ->required()
        ->check(CLI::IsMember(sweep_kinds()));
    subs["sweep"]->add_option("count", cfg.count, "number of instances")->required();
    subs["sweep"]->add_option("--seed", cfg.seed, "PRNG seed (mt19937_64)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return e.get_exit_code() == 0 ? 0 : 2;
    }
    for (const auto& [name, sub] : subs)
        if (sub->parsed()) cfg.subcommand = name;

    detail::Result res;
    try {
        const std::string& s = cfg.subcommand;
        if (s == "gamma") res = detail::cmd_gamma(cfg);
        else if (s == "g-poly") res = detail::cmd_g_poly(cfg);
        else if (s == "realroot") res = detail::cmd_realroot(cfg);
        else if (s == "cheblin") res = detail::cmd_cheblin(cfg);
        else if (s == "subdivide") res = detail::cmd_subdivide(cfg);
        else if (s == "fvector") res = detail::cmd_fvector(cfg);
        else if (s == "verify-subdiv") res = detail::cmd_verify_subdiv(cfg);
        else if (s == "ce-index") res = detail::cmd_ce_index(cfg);
        else if (s == "sl2") res = detail::cmd_sl2(cfg);
        else res = detail::cmd_sweep(cfg);
    } catch (const consistency_error& e) {
        err << "identity check failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        // invalid_argument, domain_error, json type errors, input_error
        err << "error: " << e.what() << "\n";
        return 2;
    }

    if (cfg.out_path.empty()) {
        out << res.text << "\n";
    } else {
        std::ofstream f(cfg.out_path, std::ios::binary);
        if (!f) {
            err << "error: cannot open output file '" << cfg.out_path << "'\n";
            return 2;
        }
        f << res.text << "\n";
    }
    return res.status;
}

}  // namespace gammacheb::cli
