#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "bltrop/json_io.hpp"
#include "bltrop/obstruction.hpp"

namespace bltrop {

namespace cli_detail {

constexpr const char* kSchemaVersion = "1";

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline std::vector<ExtVal> parse_weights(const std::string& csv) {
    std::vector<ExtVal> w;
    for (const auto& tok : split(csv, ',')) w.push_back(ExtVal::parse(tok));
    return w;
}

inline TropPlueckerVector parse_pluecker(const std::string& csv) {
    auto parts = split(csv, ',');
    if (parts.size() != 6)
        throw InvalidParameters("a Pluecker vector needs 6 comma-separated entries");
    TropPlueckerVector v;
    for (std::size_t k = 0; k < 6; ++k) v[k] = ExtVal::parse(parts[k]);
    return v;
}

struct CommonOpts {
    long prime = 0; // 0 = rational functions in t
    long precision = 64;
    long precision_cap = 4096;
    std::string output;

    FieldSpec field() const {
        return prime == 0 ? FieldSpec::tseries() : FieldSpec::padic(prime);
    }
};

inline LatticeConfig support_by_name(const std::string& name, MonomialOrder order) {
    if (name == "bl") return bl_support();
    if (name == "cubic20") return cubic20_support(order);
    throw InvalidParameters("unknown support '" + name + "' (use bl or cubic20)");
}

struct ScalarFlags {
    std::string a, b, c, d, g, e, f;

    BLParameters params(const FieldSpec& fld) const {
        BLParameters P{BaseScalar::parse(a, fld), BaseScalar::parse(b, fld),
                       BaseScalar::parse(c, fld), BaseScalar::parse(d, fld),
                       BaseScalar::parse(g, fld), std::nullopt, std::nullopt};
        if (!e.empty() || !f.empty()) {
            if (e.empty() || f.empty())
                throw InvalidParameters("supply both of --e and --f or neither");
            P.e = BaseScalar::parse(e, fld);
            P.f = BaseScalar::parse(f, fld);
        }
        return P;
    }

    Json echo() const {
        Json j;
        j["a"] = a;
        j["b"] = b;
        j["c"] = c;
        j["d"] = d;
        j["g"] = g;
        if (!e.empty()) j["e"] = e;
        if (!f.empty()) j["f"] = f;
        return j;
    }
};

inline void attach_scalar_flags(CLI::App* cmd, ScalarFlags& s, bool need_all) {
    cmd->add_option("--a", s.a, "parameter a")->required(need_all);
    cmd->add_option("--b", s.b, "parameter b")->required(need_all);
    cmd->add_option("--c", s.c, "parameter c")->required(need_all);
    cmd->add_option("--d", s.d, "parameter d")->required(need_all);
    cmd->add_option("--g", s.g, "parameter g")->required(need_all);
    cmd->add_option("--e", s.e, "auxiliary root e (optional, needs --f)");
    cmd->add_option("--f", s.f, "auxiliary root f (optional, needs --e)");
}

inline Json preamble(const std::string& command, const CommonOpts& opts, Json config_echo) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["backend"] = opts.field().str();
    config_echo["command"] = command;
    j["config_echo"] = config_echo;
    return j;
}

inline void emit(const Json& payload, const CommonOpts& opts, std::ostream& out) {
    if (opts.output.empty()) {
        out << payload.dump(2) << "\n";
        return;
    }
    std::ofstream file(opts.output);
    if (!file) throw InvalidParameters("cannot open output file '" + opts.output + "'");
    file << payload.dump(2) << "\n";
}

inline Json roots_json(const QuadExtCtxPtr& ctx) {
    Json j;
    j["rational_split"] = ctx->rational_split();
    if (ctx->rational_split()) {
        j["e"] = ctx->e_exact().str();
        j["f"] = ctx->f_exact().str();
        j["val_e"] = ctx->e_exact().val().str();
        j["val_f"] = ctx->f_exact().val().str();
    } else {
        j["val_e"] = ExtVal(Rat(ctx->val_e())).str();
        j["val_f"] = ExtVal(Rat(ctx->val_f())).str();
        j["e"] = json_approx(ctx->e_approx());
        j["f"] = json_approx(ctx->f_approx());
    }
    return j;
}

// ---- obstruction report assembly (runtime characteristic) ----------------

template <class F>
Json obstruction_json(ObstructionType type, long characteristic,
                      const std::function<F(long)>& from_int,
                      const std::function<std::string(const F&)>& coeff_str, const F& one) {
    auto gb = gb_for<F>(type, from_int);
    SupportSet support = support_for(type);
    auto outcome = divide_support_combination(gb, support);
    if (!verify_division(gb, support, outcome))
        throw std::logic_error("division identity failed to verify");

    auto lam_str = [&](const LamRat<F>& x) -> std::string {
        if (x.is_zero()) return "0";
        Poly<F> den_one = LamRat<F>::one_poly(x.den);
        if (x.den == den_one || x.den == Poly<F>(one)) return x.num.str("lambda", coeff_str);
        return "(" + x.num.str("lambda", coeff_str) + ")/(" + x.den.str("lambda", coeff_str) +
               ")";
    };

    Json j;
    j["type"] = type == ObstructionType::ThreeI1
                    ? "3I-1"
                    : (type == ObstructionType::ThreeI2 ? "3I-2" : "3I-2-degenerate");
    j["characteristic"] = characteristic;
    bool symbolic = type == ObstructionType::ThreeI2Degenerate;
    j["symbolic_lambda"] = symbolic;
    Json rem = Json::array();
    for (const auto& [m, c] : outcome.remainder) {
        Json row;
        row["monomial"] = mono_str(m);
        Json coeffs = Json::array();
        for (int k = 0; k < 4; ++k) coeffs.push_back(lam_str(c[k]));
        row["coefficients"] = coeffs; // columns alpha, beta, gamma, delta
        rem.push_back(row);
    }
    j["remainder"] = rem;

    auto [dim, basis] = nullspace_of_remainder(outcome.remainder, one);
    j["nullspace_dim"] = dim;
    Json basis_json = Json::array();
    for (const auto& vec : basis) {
        Json row = Json::array();
        for (int k = 0; k < 4; ++k) row.push_back(lam_str(vec[k]));
        basis_json.push_back(row);
    }
    j["nullspace_basis"] = basis_json;

    if (symbolic) {
        Poly<F> det = remainder_matrix_det(outcome.remainder);
        auto rep = analyze_det_roots<F>(det, from_int, coeff_str, characteristic);
        j["det"] = det.str("lambda", coeff_str);
        Json roots = Json::array();
        for (const auto& r : rep.roots) roots.push_back(r);
        j["special_lambda_roots"] = roots;
        j["roots_outside_0_minus1"] = rep.extra_roots;
    }
    j["conclusion"] = dim == 0 ? "obstructed" : "inconclusive";
    return j;
}

inline Json obstruction_report(ObstructionType type, long characteristic) {
    if (characteristic == 0) {
        std::function<Rat(long)> from_int = [](long n) { return Rat(n); };
        std::function<std::string(const Rat&)> to_str = [](const Rat& x) {
            return rat_to_string(x);
        };
        return obstruction_json<Rat>(type, 0, from_int, to_str, Rat(1));
    }
    long p = characteristic;
    std::function<Fp(long)> from_int = [p](long n) { return Fp(p, n); };
    std::function<std::string(const Fp&)> to_str = [](const Fp& x) { return x.str(); };
    return obstruction_json<Fp>(type, p, from_int, to_str, Fp::one(p));
}

} // namespace cli_detail

/// Entry point shared by the binary and the integration tests.
/// Returns the process exit code: 0 success, 1 usage error, 2 domain
/// error (the error JSON carries the module error name verbatim).
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    using namespace cli_detail;
    CLI::App app{"exact tropical geometry of cubic surfaces in normal form"};
    app.require_subcommand(1);

    CommonOpts opts;
    app.add_option("--prime", opts.prime, "prime p: switch scalars to the p-adic backend");
    app.add_option("--precision", opts.precision, "relative digits carried by root windows");
    app.add_option("--max-precision", opts.precision_cap, "hard cap for precision escalation");
    app.add_option("-o,--output", opts.output, "write the JSON payload to a file");

    std::string support_name = "bl", weights_csv, pluecker_csv, ordering_name = "lex";
    std::string members_csv, format = "json", obstruct_type = "3I-1";
    long characteristic = 0;
    long samples = 0;
    std::uint64_t seed = 0;
    std::string box = "50";
    ScalarFlags scalars;

    Json result;
    bool produced = false;
    auto finish = [&](Json j) {
        result = std::move(j);
        produced = true;
    };

    // ---- bl trop / bl lines / bl multiplicities --------------------------
    CLI::App* bl = app.add_subcommand("bl", "normal-form cubic pipelines");
    bl->require_subcommand(1);

    CLI::App* bl_trop = bl->add_subcommand("trop", "coefficients, weights, subdivision");
    attach_scalar_flags(bl_trop, scalars, true);
    bl_trop->callback([&] {
        BLParameters P = scalars.params(opts.field());
        Json j = preamble("bl trop", opts, scalars.echo());
        BLCubic F = bl_coefficients(P);
        Json coeffs = Json::array();
        for (const auto& coeff : F.coeffs) coeffs.push_back(coeff.str());
        j["coefficients"] = coeffs;
        j["sigma_vanishes"] = in_Sigma(P);
        auto w = bl_weight_vector(P);
        j["weights"] = json_weights(w);
        try {
            auto s = regular_subdivision(bl_support(), w);
            j["subdivision"] = json_subdivision(s);
            j["smooth"] = is_unimodular_triangulation(s);
        } catch (const DegenerateConfiguration&) {
            j["subdivision"] = Json();
            j["smooth"] = false;
        }
        finish(j);
    });

    CLI::App* bl_lines = bl->add_subcommand("lines", "tropical Pluecker vectors of the 27 lines");
    attach_scalar_flags(bl_lines, scalars, true);
    bl_lines->callback([&] {
        BLParameters P = scalars.params(opts.field());
        auto ctx = resolve_ef(P, opts.precision, opts.precision_cap);
        auto m = tropical_line_coordinates(P, ctx);
        auto groups = lifting_multiplicity_table(m);
        Json j = preamble("bl lines", opts, scalars.echo());
        j["roots"] = roots_json(ctx);
        Json lines = Json::array();
        for (LineLabel l : all_line_labels()) {
            Json one;
            one["label"] = label_name(l);
            one["pluecker"] = json_pluecker(m.at(l));
            one["class"] = infinity_class_name(infinity_class(m.at(l)));
            for (std::size_t gi = 0; gi < groups.size(); ++gi)
                if (std::find(groups[gi].members.begin(), groups[gi].members.end(), l) !=
                    groups[gi].members.end())
                    one["group_id"] = gi;
            lines.push_back(one);
        }
        j["lines"] = lines;
        j["distinct_count"] = groups.size();
        finish(j);
    });

    CLI::App* bl_mult = bl->add_subcommand("multiplicities", "lifting-multiplicity groups");
    attach_scalar_flags(bl_mult, scalars, true);
    bl_mult->callback([&] {
        BLParameters P = scalars.params(opts.field());
        auto ctx = resolve_ef(P, opts.precision, opts.precision_cap);
        auto groups = lifting_multiplicity_table(tropical_line_coordinates(P, ctx));
        Json j = preamble("bl multiplicities", opts, scalars.echo());
        Json gj = Json::array();
        for (std::size_t gi = 0; gi < groups.size(); ++gi) {
            Json one;
            one["group_id"] = gi;
            one["pluecker"] = json_pluecker(groups[gi].representative);
            Json members = Json::array();
            for (LineLabel l : groups[gi].members) members.push_back(label_name(l));
            one["members"] = members;
            one["multiplicity"] = groups[gi].members.size();
            gj.push_back(one);
        }
        j["groups"] = gj;
        j["distinct_count"] = groups.size();
        finish(j);
    });

    // ---- subdivision / smooth-check --------------------------------------
    CLI::App* sub = app.add_subcommand("subdivision", "regular subdivision of a weighted support");
    sub->add_option("--support", support_name, "bl or cubic20");
    sub->add_option("--ordering", ordering_name, "monomial order for cubic20 (lex|grlex|revlex)");
    sub->add_option("--weights", weights_csv, "comma-separated rationals or inf")->required();
    sub->callback([&] {
        LatticeConfig cfg =
            support_by_name(support_name, monomial_order_from_string(ordering_name));
        auto w = parse_weights(weights_csv);
        auto s = regular_subdivision(cfg, w);
        Json j = preamble("subdivision", opts,
                          Json{{"support", support_name}, {"ordering", ordering_name},
                               {"weights", weights_csv}});
        j.update(json_subdivision(s));
        Json vols = Json::array();
        for (const auto& cell : s.cells) vols.push_back(rat_to_string(euclidean_volume(s, cell)));
        j["cell_volumes"] = vols;
        j["unimodular"] = is_unimodular_triangulation(s);
        finish(j);
    });

    CLI::App* smooth = app.add_subcommand("smooth-check", "tropical smoothness of a weighted support");
    smooth->add_option("--support", support_name, "bl or cubic20");
    smooth->add_option("--ordering", ordering_name, "monomial order for cubic20");
    smooth->add_option("--weights", weights_csv, "comma-separated rationals or inf")->required();
    smooth->callback([&] {
        LatticeConfig cfg =
            support_by_name(support_name, monomial_order_from_string(ordering_name));
        Json j = preamble("smooth-check", opts,
                          Json{{"support", support_name}, {"weights", weights_csv}});
        j["smooth"] = is_tropically_smooth(cfg, parse_weights(weights_csv));
        finish(j);
    });

    // ---- solve-ef ---------------------------------------------------------
    CLI::App* solve = app.add_subcommand("solve-ef", "roots of X^2 - gX + ac");
    solve->add_option("--a", scalars.a, "parameter a")->required();
    solve->add_option("--c", scalars.c, "parameter c")->required();
    solve->add_option("--g", scalars.g, "parameter g")->required();
    solve->callback([&] {
        FieldSpec fld = opts.field();
        BaseScalar a = BaseScalar::parse(scalars.a, fld);
        BaseScalar c = BaseScalar::parse(scalars.c, fld);
        BaseScalar g = BaseScalar::parse(scalars.g, fld);
        auto ctx = solve_quadratic_ef(a, c, g, opts.precision, opts.precision_cap);
        Json j = preamble("solve-ef", opts,
                          Json{{"a", scalars.a}, {"c", scalars.c}, {"g", scalars.g}});
        j.update(roots_json(ctx));
        finish(j);
    });

    // ---- line graph -------------------------------------------------------
    CLI::App* line = app.add_subcommand("line", "tropical line utilities");
    line->require_subcommand(1);
    CLI::App* graph = line->add_subcommand("graph", "vertices, edge and rays from Pluecker data");
    graph->add_option("--pluecker", pluecker_csv, "6 comma-separated entries")->required();
    graph->callback([&] {
        TropLineGraph L = line_from_pluecker(parse_pluecker(pluecker_csv));
        Json j = preamble("line graph", opts, Json{{"pluecker", pluecker_csv}});
        j.update(json_line_graph(L));
        finish(j);
    });

    // ---- surface contains / dual-motif / classify-family ------------------
    CLI::App* surface = app.add_subcommand("surface", "tropical surface queries");
    surface->require_subcommand(1);
    CLI::App* contains = surface->add_subcommand("contains", "exact line containment");
    contains->add_option("--support", support_name, "bl or cubic20");
    contains->add_option("--ordering", ordering_name, "monomial order for cubic20");
    contains->add_option("--weights", weights_csv, "surface weights")->required();
    contains->add_option("--pluecker", pluecker_csv, "line Pluecker vector")->required();
    contains->callback([&] {
        TropSurface S = TropSurface::make(
            support_by_name(support_name, monomial_order_from_string(ordering_name)),
            parse_weights(weights_csv));
        TropLineGraph L = line_from_pluecker(parse_pluecker(pluecker_csv));
        auto r = contains_line(S, L);
        Json j = preamble("surface contains", opts,
                          Json{{"support", support_name}, {"weights", weights_csv},
                               {"pluecker", pluecker_csv}});
        j["contained"] = r.contained;
        if (r.witness) j["witness"] = json_point(*r.witness);
        if (r.contained) j["dual_motif"] = json_dual_motif(S, dual_motif(S, L));
        finish(j);
    });

    CLI::App* motif = app.add_subcommand("dual-motif", "dual cells met by a contained line");
    motif->add_option("--support", support_name, "bl or cubic20");
    motif->add_option("--ordering", ordering_name, "monomial order for cubic20");
    motif->add_option("--weights", weights_csv, "surface weights")->required();
    motif->add_option("--pluecker", pluecker_csv, "line Pluecker vector")->required();
    motif->callback([&] {
        TropSurface S = TropSurface::make(
            support_by_name(support_name, monomial_order_from_string(ordering_name)),
            parse_weights(weights_csv));
        TropLineGraph L = line_from_pluecker(parse_pluecker(pluecker_csv));
        Json j = preamble("dual-motif", opts,
                          Json{{"support", support_name}, {"weights", weights_csv},
                               {"pluecker", pluecker_csv}});
        j["cells"] = json_dual_motif(S, dual_motif(S, L));
        finish(j);
    });

    CLI::App* classify = app.add_subcommand("classify-family", "family type from sampled members");
    classify->add_option("--support", support_name, "bl or cubic20");
    classify->add_option("--ordering", ordering_name, "monomial order for cubic20");
    classify->add_option("--weights", weights_csv, "surface weights")->required();
    classify->add_option("--members", members_csv,
                         "semicolon-separated Pluecker vectors of sampled members")
        ->required();
    classify->callback([&] {
        TropSurface S = TropSurface::make(
            support_by_name(support_name, monomial_order_from_string(ordering_name)),
            parse_weights(weights_csv));
        std::vector<TropLineGraph> members;
        for (const auto& tok : split(members_csv, ';'))
            members.push_back(line_from_pluecker(parse_pluecker(tok)));
        Json j = preamble("classify-family", opts,
                          Json{{"support", support_name}, {"weights", weights_csv},
                               {"members", members_csv}});
        j["type"] = family_type_name(classify_family(S, members));
        finish(j);
    });

    // ---- obstruct ----------------------------------------------------------
    CLI::App* obstruct = app.add_subcommand("obstruct", "Groebner-reduction lifting obstruction");
    obstruct->add_option("--type", obstruct_type, "3I-1 | 3I-2 | 3I-2-degenerate");
    obstruct->add_option("--char", characteristic, "residue characteristic (0 or a prime)");
    obstruct->callback([&] {
        Json j = preamble("obstruct", opts,
                          Json{{"type", obstruct_type}, {"char", characteristic}});
        j.update(obstruction_report(obstruction_type_from_string(obstruct_type), characteristic));
        finish(j);
    });

    // ---- sample-thm35 ------------------------------------------------------
    CLI::App* sampler = app.add_subcommand("sample-thm35", "randomized non-smoothness check");
    sampler->add_option("--samples", samples, "number of parameter tuples")->required();
    sampler->add_option("--seed", seed, "base seed (per-sample streams derive from it)")
        ->required();
    sampler->callback([&] {
        auto rep = check_theorem_3_5(samples, seed, opts.field());
        Json j = preamble("sample-thm35", opts,
                          Json{{"samples", samples}, {"seed", seed}});
        j["tested"] = rep.tested;
        j["rejected_on_Sigma"] = rep.rejected_on_Sigma;
        j["smooth_count"] = rep.smooth_count;
        j["assertion_active"] = opts.field().val_of_two() == 0;
        finish(j);
    });

    // ---- export-mesh -------------------------------------------------------
    CLI::App* mesh = app.add_subcommand("export-mesh", "2-cells of the surface, box-clipped");
    mesh->add_option("--support", support_name, "bl or cubic20");
    mesh->add_option("--ordering", ordering_name, "monomial order for cubic20");
    mesh->add_option("--weights", weights_csv, "surface weights")->required();
    mesh->add_option("--box", box, "bounding box half-width (rational)");
    mesh->add_option("--format", format, "json or obj");
    mesh->callback([&] {
        TropSurface S = TropSurface::make(
            support_by_name(support_name, monomial_order_from_string(ordering_name)),
            parse_weights(weights_csv));
        SurfaceMesh msh = export_mesh(S, rat_from_string(box));
        if (format == "obj") {
            std::string body = obj_mesh(msh);
            if (opts.output.empty()) {
                out << body;
            } else {
                std::ofstream file(opts.output);
                if (!file) throw InvalidParameters("cannot open output file");
                file << body;
            }
            produced = false; // already written
            return;
        }
        if (format != "json") throw InvalidParameters("unknown format '" + format + "'");
        Json j = preamble("export-mesh", opts,
                          Json{{"support", support_name}, {"weights", weights_csv},
                               {"box", box}});
        j.update(json_mesh(msh));
        finish(j);
    });

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            app.exit(e, out, err);
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        Json j;
        j["schema_version"] = kSchemaVersion;
        j["error"] = e.name();
        j["message"] = e.what();
        out << j.dump(2) << "\n";
        return 2;
    }

    if (produced) {
        try {
            emit(result, opts, out);
        } catch (const DomainError& e) {
            err << e.name() << ": " << e.what() << "\n";
            return 2;
        }
    }
    return 0;
}

} // namespace bltrop
