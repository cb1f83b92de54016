#pragma once

#include <json.hpp>

#include "bltrop/line_graph.hpp"
#include "bltrop/lines27.hpp"
#include "bltrop/surface.hpp"

namespace bltrop {

using Json = nlohmann::ordered_json;

inline Json json_extval(const ExtVal& v) { return v.str(); }

inline ExtVal extval_from_json(const Json& j) {
    if (j.is_number_integer()) return ExtVal(Rat(j.get<long>()));
    return ExtVal::parse(j.get<std::string>());
}

inline Json json_point(const TropPoint& x) {
    Json a = Json::array();
    for (const auto& c : x.x) a.push_back(json_extval(c));
    return a;
}

inline Json json_pluecker(const TropPlueckerVector& v) {
    Json a = Json::array();
    for (std::size_t k = 0; k < 6; ++k) a.push_back(json_extval(v[k]));
    return a;
}

inline Json json_weights(const std::vector<ExtVal>& w) {
    Json a = Json::array();
    for (const auto& v : w) a.push_back(json_extval(v));
    return a;
}

inline Json json_config_points(const LatticeConfig& c) {
    Json a = Json::array();
    for (const auto& p : c.points) a.push_back(Json::array({p[0], p[1], p[2], p[3]}));
    return a;
}

inline Json json_subdivision(const RegularSubdivision& s) {
    Json j;
    j["points"] = json_config_points(s.config);
    j["weights"] = json_weights(s.weights);
    Json cells = Json::array();
    for (const auto& cell : s.cells) {
        Json one = Json::array();
        for (std::size_t i : cell) one.push_back(i);
        cells.push_back(one);
    }
    j["cells"] = cells;
    return j;
}

inline Json json_line_graph(const TropLineGraph& L) {
    Json j;
    j["pluecker"] = json_pluecker(L.pluecker);
    j["type"] = L.type.str();
    j["class"] = infinity_class_name(L.cls);
    j["delta"] = json_extval(L.delta);
    if (L.has_geometry()) {
        j["vertices"] = Json::array({json_point(L.vertex_u), json_point(L.vertex_w)});
    } else {
        j["vertices"] = Json::array();
    }
    return j;
}

inline Json json_dual_motif(const TropSurface& S, const DualMotif& motif) {
    Json cells = Json::array();
    for (const auto& cell : motif) {
        Json one;
        Json idx = Json::array();
        Json exps = Json::array();
        for (std::size_t i : cell) {
            idx.push_back(i);
            const auto& p = S.config.points[i];
            exps.push_back(Json::array({p[0], p[1], p[2], p[3]}));
        }
        one["indices"] = idx;
        one["exponents"] = exps;
        cells.push_back(one);
    }
    return cells;
}

/// Truncated digit window of a root approximation.
inline Json json_approx(const Approx& a) {
    Json j;
    if (auto v = a.val()) {
        j["valuation"] = ExtVal(Rat(*v)).str();
    } else {
        j["valuation"] = Json(); // undetermined to this precision
    }
    j["known_mod"] = a.end();
    Json digits = Json::array();
    for (const auto& d : a.digits()) digits.push_back(rat_to_string(d));
    j["digits"] = digits;
    j["lead"] = a.lead();
    return j;
}

/// Fixed-point decimal rendering (truncation toward zero), for OBJ
/// output; exact and deterministic.
inline std::string rat_to_decimal(const Rat& q, int digits = 9) {
    Int n = num(q), d = den(q);
    bool neg = n < 0;
    if (neg) n = -n;
    Int ip = n / d;
    Int rem = n % d;
    std::string s = (neg && (ip != 0 || rem != 0) ? "-" : "") + ip.str() + ".";
    for (int i = 0; i < digits; ++i) {
        rem *= 10;
        s += (rem / d).str();
        rem %= d;
    }
    return s;
}

inline Json json_mesh(const SurfaceMesh& mesh) {
    Json j;
    Json verts = Json::array();
    for (const auto& v : mesh.vertices)
        verts.push_back(Json::array(
            {rat_to_string(v[0]), rat_to_string(v[1]), rat_to_string(v[2])}));
    j["vertices"] = verts;
    Json polys = Json::array();
    for (std::size_t k = 0; k < mesh.polygons.size(); ++k) {
        Json one;
        one["terms"] = Json::array({mesh.polygon_terms[k].first, mesh.polygon_terms[k].second});
        Json ids = Json::array();
        for (std::size_t id : mesh.polygons[k]) ids.push_back(id);
        one["vertices"] = ids;
        polys.push_back(one);
    }
    j["polygons"] = polys;
    return j;
}

inline std::string obj_mesh(const SurfaceMesh& mesh) {
    std::string out = "o tropical_surface\n";
    for (const auto& v : mesh.vertices) {
        out += "v " + rat_to_decimal(v[0]) + " " + rat_to_decimal(v[1]) + " " +
               rat_to_decimal(v[2]) + "\n";
    }
    for (const auto& poly : mesh.polygons) {
        out += "f";
        for (std::size_t id : poly) out += " " + std::to_string(id + 1);
        out += "\n";
    }
    return out;
}

} // namespace bltrop
