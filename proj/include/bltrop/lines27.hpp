#pragma once

#include <map>
#include <mutex>

#include "bltrop/line_graph.hpp"
#include "bltrop/normal_form.hpp"

namespace bltrop {

enum class LineLabel {
    E1, E2, E3, E4, E5, E6,
    G1, G2, G3, G4, G5, G6,
    F12, F13, F14, F15, F16,
    F23, F24, F25, F26,
    F34, F35, F36,
    F45, F46,
    F56
};

inline const std::array<LineLabel, 27>& all_line_labels() {
    static const std::array<LineLabel, 27> labels = {
        LineLabel::E1,  LineLabel::E2,  LineLabel::E3,  LineLabel::E4,  LineLabel::E5,
        LineLabel::E6,  LineLabel::G1,  LineLabel::G2,  LineLabel::G3,  LineLabel::G4,
        LineLabel::G5,  LineLabel::G6,  LineLabel::F12, LineLabel::F13, LineLabel::F14,
        LineLabel::F15, LineLabel::F16, LineLabel::F23, LineLabel::F24, LineLabel::F25,
        LineLabel::F26, LineLabel::F34, LineLabel::F35, LineLabel::F36, LineLabel::F45,
        LineLabel::F46, LineLabel::F56};
    return labels;
}

inline std::string label_name(LineLabel l) {
    switch (l) {
    case LineLabel::E1: return "E1";
    case LineLabel::E2: return "E2";
    case LineLabel::E3: return "E3";
    case LineLabel::E4: return "E4";
    case LineLabel::E5: return "E5";
    case LineLabel::E6: return "E6";
    case LineLabel::G1: return "G1";
    case LineLabel::G2: return "G2";
    case LineLabel::G3: return "G3";
    case LineLabel::G4: return "G4";
    case LineLabel::G5: return "G5";
    case LineLabel::G6: return "G6";
    case LineLabel::F12: return "F12";
    case LineLabel::F13: return "F13";
    case LineLabel::F14: return "F14";
    case LineLabel::F15: return "F15";
    case LineLabel::F16: return "F16";
    case LineLabel::F23: return "F23";
    case LineLabel::F24: return "F24";
    case LineLabel::F25: return "F25";
    case LineLabel::F26: return "F26";
    case LineLabel::F34: return "F34";
    case LineLabel::F35: return "F35";
    case LineLabel::F36: return "F36";
    case LineLabel::F45: return "F45";
    case LineLabel::F46: return "F46";
    case LineLabel::F56: return "F56";
    }
    return "?";
}

inline LineLabel label_from_name(const std::string& s) {
    for (LineLabel l : all_line_labels())
        if (label_name(l) == s) return l;
    throw InvalidParameters("unknown line label '" + s + "'");
}

namespace lines_detail {

/// One Pluecker entry: a sum of valuations of polynomials in
/// a, b, c, d, e, f (an empty product list encodes the constant 0),
/// or the constant infinity.
struct Entry {
    bool infinite = false;
    std::vector<std::string> val_factors;
};

inline Entry inf() { return Entry{true, {}}; }
inline Entry vals(std::vector<std::string> fs) { return Entry{false, std::move(fs)}; }

struct Row {
    LineLabel label;
    std::array<Entry, 6> entries; // (p01, p02, p03, p12, p13, p23)
};

/// The valuation table of the 27 lines on the normal-form cubic, in
/// terms of the parameters and the auxiliary roots e, f.
inline const std::vector<Row>& table() {
    static const std::vector<Row> rows = [] {
        std::vector<Row> t;
        auto row = [&t](LineLabel l, std::array<Entry, 6> es) {
            t.push_back(Row{l, std::move(es)});
        };
        const std::string BC = "b*c-c^2+e*f";        // bc - c^2 + ef
        const std::string BCn = "-b*c+c^2-e*f";      // its negative
        const std::string CD = "c^2+c*d-e*f";        // c^2 + cd - ef
        const std::string CDn = "-c^2-c*d+e*f";      // its negative
        const std::string BD = "b*c-c*d+2*e*f";      // bc - cd + 2ef
        const std::string CE = "c*d-c*e-e*f";        // cd - ce - ef
        const std::string CF = "c*d-c*f-e*f";        // cd - cf - ef
        const std::string BE = "b*c-c*e+e*f";        // bc - ce + ef
        const std::string BF = "b*c-c*f+e*f";        // bc - cf + ef
        const std::string G1P =
            "b^2*c^2+b*c^2*d-b*c^2*e-b*c^2*f-c^2*d*e-c^2*d*f+2*c^2*e*f+2*c*d*e*f-2*e^2*f^2";
        const std::string G2P =
            "b*c^2*d-b*c^2*e-b*c^2*f-2*b*c*e*f+c^2*d^2-c^2*d*e-c^2*d*f+2*c^2*e*f-2*e^2*f^2";

        row(LineLabel::E1, {inf(), inf(), vals({}), inf(), inf(), inf()});
        row(LineLabel::G4, {inf(), inf(), inf(), inf(), inf(), vals({})});
        row(LineLabel::E2, {inf(), inf(), inf(), vals({}), inf(), inf()});
        row(LineLabel::G3, {vals({}), vals({}), inf(), inf(), vals({}), vals({})});
        row(LineLabel::E3, {inf(), vals({}), vals({}), vals({}), vals({}), inf()});
        row(LineLabel::G5, {vals({"c", "c"}), vals({"c", "e"}), inf(), inf(),
                            vals({"c", "e"}), vals({"e", "e"})});
        row(LineLabel::G6, {vals({"c", "c"}), vals({"c", "f"}), inf(), inf(),
                            vals({"c", "f"}), vals({"f", "f"})});
        row(LineLabel::F24, {inf(), inf(), inf(), vals({BC}), vals({"-c*d+e*f+c^2"}),
                             vals({"c", "e+f-d"})});
        row(LineLabel::F14, {inf(), vals({"b*c+c^2+e*f"}), vals({CDn}), inf(), inf(),
                             vals({"-b+e+f", "c"})});
        row(LineLabel::F34, {inf(), vals({BCn}), vals({CD}), vals({BCn}), vals({CD}),
                             vals({"c", "d+b"})});
        row(LineLabel::F13, {vals({BC}), vals({BC}), vals({"c-e", "c-f"}), inf(),
                             vals({"b*c-c*e-c*f+2*e*f"}), vals({"b*c-c*e-c*f+2*e*f"})});
        row(LineLabel::F15, {vals({"c", BC}), vals({"e", BC}), vals({"c-e", CF}), inf(),
                             vals({"c", "c", "e-f-b"}), vals({"c", "e", "e-f-b"})});
        row(LineLabel::F16, {vals({"c", BC}), vals({"f", BC}), vals({"c-f", CE}), inf(),
                             vals({"c", "c", "f-e-b"}), vals({"c", "f", "f-e-b"})});
        row(LineLabel::F25, {vals({CD, "c"}), vals({"d-e+f", "c", "c"}), inf(),
                             vals({"c+e", BF}), vals({CD, "e"}), vals({"d-e+f", "c", "e"})});
        row(LineLabel::F26, {vals({CD, "c"}), vals({"d-f+e", "c", "c"}), inf(),
                             vals({"c+f", BE}), vals({CD, "f"}), vals({"d-f+e", "c", "f"})});
        row(LineLabel::F23, {vals({CD}), vals({"-c*d+c*e+c*f+2*e*f"}), inf(),
                             vals({"c+e", "c+f"}), vals({CDn}),
                             vals({"c*d-c*e-c*f-2*e*f"})});
        row(LineLabel::F35, {vals({"c", BD}), vals({"c^2*f-c^2*d+b*c*e+e^2*f"}),
                             vals({"c-e", CF}), vals({"c+e", BF}),
                             vals({"c^2*f-b*c^2-c*d*e+e^2*f"}), vals({"c", "e", "2*f-d-b"})});
        row(LineLabel::F36, {vals({"c", BD}), vals({"c^2*e-c^2*d+b*c*f+e*f^2"}),
                             vals({"c-f", CE}), vals({"c+f", BE}),
                             vals({"c^2*e-b*c^2-c*d*f+e*f^2"}), vals({"c", "f", "2*e-b-d"})});
        row(LineLabel::E5, {inf(), vals({"c-f", BF, CF}), vals({"f-c", CF, CF}),
                            vals({"c+f", BF, BF}), vals({"c+f", BF, CF}),
                            vals({"2", BF, CF, "f"})});
        row(LineLabel::E6, {inf(), vals({"c-e", BE, CE}), vals({"e-c", CE, CE}),
                            vals({"c+e", BE, BE}), vals({"c+e", BE, CE}),
                            vals({"2", BE, CE, "e"})});
        row(LineLabel::F56,
            {vals({"c", "c", BD}),
             vals({"-b*c^2*d+b*c^2*f+b*c^2*e-c^2*e*f+f*e^2*c-c*d*e*f+b*c*e*f+f^2*e*c+e^2*f^2"}),
             vals({CE, CF}), vals({BF, BE}),
             vals({"c^2*e*f-c^2*d*f-c^2*d*e+b*c^2*d+f*e^2*c+f^2*e*c+c*d*e*f-b*c*e*f-e^2*f^2"}),
             vals({BD, "e", "f"})});
        row(LineLabel::E4, {vals({"2", CD, BC, "c", "c"}),
                            vals({CD, BC, "c^2+c*e+c*f-e*f"}),
                            vals({CD, CD, "c-e", "c-f"}), vals({"c+e", "c+f", BC, BC}),
                            vals({CD, "c^2-c*e-c*f-e*f", BC}),
                            vals({"2", CD, BC, "e", "f"})});
        row(LineLabel::F45, {inf(), vals({"c+f", "c-f", CF, BC}),
                             vals({"c-f", "c-f", CD, CF}), vals({"c+f", "c+f", BF, BCn}),
                             vals({"c+f", "c-f", CD, BF}),
                             vals({"c+f", "c-f",
                                   "b*c^2+b*c*f+c^2*d-2*c^2*f-c*d*f+2*e*f^2", "e"})});
        row(LineLabel::F46, {inf(), vals({"c+e", "c-e", CE, BC}),
                             vals({"c-e", "c-e", CD, CE}), vals({"c+e", "c+e", BE, BCn}),
                             vals({"c+e", "c-e", CD, BE}),
                             vals({"c+e", "c-e",
                                   "b*c^2+b*c*e+c^2*d-2*c^2*e-c*d*e+2*e^2*f", "f"})});
        row(LineLabel::G1, {vals({BC, BC, BD}), vals({BC, "b*c-c*e-c*f+2*e*f", BD}), inf(),
                            vals({"2", BC, BF, BE}), vals({BC, G1P}),
                            vals({"b*c-c*e-c*f+2*e*f", G1P})});
        row(LineLabel::F12,
            {vals({BD, BD, CD, BCn}),
             vals({BD, "-2*b*c*e*f-2*e^2*f^2+(-b-d+2*e)*c^2*f+(b+d)*(d-e)*c^2", BC}), inf(),
             inf(),
             vals({CD, BD, "2*c*d*e*f-2*e^2*f^2-(b+d-2*e)*c^2*f-(-b+e)*(b+d)*c^2"}),
             vals({G2P, G1P})});
        row(LineLabel::G2, {vals({CD, CD, BD}), vals({CD, G2P}),
                            vals({"2", CD, CE, CF}), inf(), vals({CD, "c*d-c*e-c*f-2*e*f", BD}),
                            vals({"c*d-c*e-c*f-2*e*f", G2P})});
        return t;
    }();
    return rows;
}

/// Number of v_(...) factors per entry, for the transcription
/// self-check (0 for constant entries, including infinite ones).
inline std::array<std::array<int, 6>, 27> factor_counts() {
    std::array<std::array<int, 6>, 27> out{};
    const auto& rows = table();
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t k = 0; k < 6; ++k)
            out[r][k] = rows[r].entries[k].infinite
                            ? 0
                            : static_cast<int>(rows[r].entries[k].val_factors.size());
    return out;
}

} // namespace lines_detail

/// Tropical Pluecker coordinates of the 27 lines, obtained by exact
/// evaluation in the quadratic extension followed by the valuation.
/// `swap_ef` evaluates with the opposite labelling of the two roots
/// (the table is symmetric under it up to the 5 <-> 6 index swap).
inline std::map<LineLabel, TropPlueckerVector>
tropical_line_coordinates(const BLParameters& P, const QuadExtCtxPtr& ctx,
                          bool swap_ef = false) {
    if (in_Sigma(P)) throw SigmaVanishes("parameters lie on the discriminantal hypersurface");
    const FieldSpec& fld = P.field();
    std::map<std::string, QuadExt> env;
    env["a"] = QuadExt::from_base(ctx, P.a);
    env["b"] = QuadExt::from_base(ctx, P.b);
    env["c"] = QuadExt::from_base(ctx, P.c);
    env["d"] = QuadExt::from_base(ctx, P.d);
    env["e"] = swap_ef ? QuadExt::root_f(ctx) : QuadExt::root_e(ctx);
    env["f"] = swap_ef ? QuadExt::root_e(ctx) : QuadExt::root_f(ctx);
    std::function<QuadExt(const Int&)> mk = [&](const Int& n) {
        return QuadExt::from_base(ctx, BaseScalar::constant(Rat(n), fld));
    };

    // parsed expression cache, keyed by source string
    static std::map<std::string, ExprPtr> ast_cache;
    static std::mutex ast_mutex;
    auto ast_of = [&](const std::string& src) {
        std::lock_guard<std::mutex> lock(ast_mutex);
        auto it = ast_cache.find(src);
        if (it != ast_cache.end()) return it->second;
        ExprPtr e = ExprParser::parse(src);
        ast_cache.emplace(src, e);
        return e;
    };

    std::map<LineLabel, TropPlueckerVector> out;
    for (const auto& row : lines_detail::table()) {
        TropPlueckerVector v;
        for (std::size_t k = 0; k < 6; ++k) {
            const auto& entry = row.entries[k];
            if (entry.infinite) {
                v[k] = ExtVal::infinity();
                continue;
            }
            ExtVal acc(0);
            for (const auto& src : entry.val_factors) {
                QuadExt value = eval_expr(*ast_of(src), env, mk);
                acc = acc + value.val();
                if (acc.is_infinite()) break;
            }
            v[k] = acc;
        }
        out.emplace(row.label, v);
    }
    return out;
}

/// Groups of labels whose normalized Pluecker vectors coincide
/// ("lifting multiplicity" groups); group order follows the first
/// member in canonical label order.
struct MultiplicityGroup {
    TropPlueckerVector representative; // normalized
    std::vector<LineLabel> members;
};

inline std::vector<MultiplicityGroup>
lifting_multiplicity_table(const std::map<LineLabel, TropPlueckerVector>& m) {
    std::vector<MultiplicityGroup> groups;
    for (LineLabel l : all_line_labels()) {
        auto it = m.find(l);
        if (it == m.end()) continue;
        TropPlueckerVector nv = it->second.normalized();
        bool placed = false;
        for (auto& g : groups) {
            if (g.representative == nv) {
                g.members.push_back(l);
                placed = true;
                break;
            }
        }
        if (!placed) groups.push_back(MultiplicityGroup{nv, {l}});
    }
    return groups;
}

} // namespace bltrop
