#pragma once

#include "bltrop/pluecker.hpp"
#include "bltrop/tropical.hpp"

namespace bltrop {

/// How much of the line is visible in Euclidean space, keyed by the
/// number of infinite Pluecker entries (0 through 5).
enum class InfinityClass {
    Full,             // 0: whole tree visible
    HalfLine,         // 1: one vertex at infinity
    InteriorSegment,  // 2: infinite middle segment, both vertices at infinity
    BoundaryHalfLine, // 3: half line inside a boundary facet
    FacetSegment,     // 4: segment inside a boundary facet
    BoundaryLine      // 5: line inside the boundary
};

inline std::string infinity_class_name(InfinityClass c) {
    switch (c) {
    case InfinityClass::Full: return "full";
    case InfinityClass::HalfLine: return "half-line";
    case InfinityClass::InteriorSegment: return "interior-segment";
    case InfinityClass::BoundaryHalfLine: return "boundary-half-line";
    case InfinityClass::FacetSegment: return "facet-segment";
    case InfinityClass::BoundaryLine: return "boundary-line";
    }
    return "?";
}

inline InfinityClass infinity_class(const TropPlueckerVector& v) {
    if (!v.satisfies_relation())
        throw InvalidPluecker("tropical Pluecker relation fails for " + v.str());
    switch (v.infinite_entries()) {
    case 0: return InfinityClass::Full;
    case 1: return InfinityClass::HalfLine;
    case 2: return InfinityClass::InteriorSegment;
    case 3: return InfinityClass::BoundaryHalfLine;
    case 4: return InfinityClass::FacetSegment;
    case 5: return InfinityClass::BoundaryLine;
    default:
        throw InvalidPluecker("all six coordinates are infinite");
    }
}

/// Combinatorial type of the tree: the pairing {{i,j},{k,l}} whose sum
/// is not the twice-attained minimum, or degenerate when all three
/// pairing sums coincide.
struct TreeType {
    bool degenerate = false;
    std::array<std::size_t, 2> first{0, 1};  // rays at vertex u (contains 0)
    std::array<std::size_t, 2> second{2, 3}; // rays at vertex w

    std::string str() const {
        if (degenerate) return "degenerate";
        return "{" + std::to_string(first[0]) + "," + std::to_string(first[1]) + "}|{" +
               std::to_string(second[0]) + "," + std::to_string(second[1]) + "}";
    }
};

/// The three pairings in the order of pairing_sums().
inline TreeType pairing_type(std::size_t k) {
    switch (k) {
    case 0: return TreeType{false, {0, 1}, {2, 3}};
    case 1: return TreeType{false, {0, 2}, {1, 3}};
    default: return TreeType{false, {0, 3}, {1, 2}};
    }
}

inline TreeType validate_pluecker(const TropPlueckerVector& v) {
    auto s = v.pairing_sums();
    ExtVal m = min(min(s[0], s[1]), s[2]);
    int hits = 0;
    for (const auto& x : s)
        if (x == m) ++hits;
    if (hits < 2) throw InvalidPluecker("minimum pairing sum attained once for " + v.str());
    if (hits == 3) return TreeType{true, {0, 1}, {2, 3}};
    for (std::size_t k = 0; k < 3; ++k)
        if (s[k] != m) return pairing_type(k);
    throw std::logic_error("unreachable");
}

using Perm4 = std::array<std::size_t, 4>;

inline TropPlueckerVector pluecker_pullback(const TropPlueckerVector& v, const Perm4& pi) {
    TropPlueckerVector r;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            r[pair_index(i, j)] = v.at(pi[i], pi[j]);
    return r;
}

/// Pushforward: relabel coordinate i as pi[i].
inline TropPlueckerVector pluecker_pushforward(const TropPlueckerVector& v, const Perm4& pi) {
    TropPlueckerVector r;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            r[pair_index(pi[i], pi[j])] = v.at(i, j);
    return r;
}

inline TropPoint point_pushforward(const TropPoint& x, const Perm4& pi) {
    TropPoint r;
    for (std::size_t i = 0; i < 4; ++i) r[pi[i]] = x[i];
    return r;
}

/// Tropical line as a graph: two vertices (possibly at infinity),
/// the bounded edge length, and the standard rays e_i, e_j at u and
/// e_k, e_l at w.  Classes with three or more infinite coordinates
/// carry no Euclidean reconstruction.
struct TropLineGraph {
    TropPlueckerVector pluecker;
    TreeType type;
    InfinityClass cls = InfinityClass::Full;
    TropPoint vertex_u, vertex_w;
    ExtVal delta; // >= 0; infinity for classes (b), (c)

    bool has_geometry() const {
        return cls == InfinityClass::Full || cls == InfinityClass::HalfLine ||
               cls == InfinityClass::InteriorSegment;
    }
};

inline TropLineGraph line_from_pluecker(const TropPlueckerVector& v) {
    TreeType type = validate_pluecker(v);
    TropLineGraph L;
    L.pluecker = v;
    L.type = type;
    L.cls = infinity_class(v);
    L.delta = ExtVal(0);
    if (!L.has_geometry()) {
        L.delta = ExtVal::infinity();
        return L;
    }

    // canonical frame: rays {0,1} at u, {2,3} at w
    Perm4 pi{type.first[0], type.first[1], type.second[0], type.second[1]};
    TropPlueckerVector q = pluecker_pullback(v, pi);

    if (L.cls == InfinityClass::InteriorSegment) {
        // infinite middle segment: base point from the four finite
        // coordinates, direction e_k + e_l
        TropPoint base = make_point(ExtVal(0), q[4] - q[2], ExtVal(0), q[4] - q[3]);
        L.vertex_u = point_pushforward(base, pi);
        L.vertex_w = L.vertex_u;
        L.delta = ExtVal::infinity();
        return L;
    }

    // vertex_u = (p01, p01 + p13 - p03, p12, p13) up to the all-ones
    // shift; stays valid when p01 = inf (vertex escapes to infinity).
    TropPoint u = make_point(q[0], q[0] + q[4] - q[2], q[3], q[4]);
    TropPoint w = make_point(ExtVal(0), q[4] - q[2], q[5] - q[2], q[5] - q[1]);
    ExtVal m = q[1] + q[4]; // the twice-attained minimum
    L.delta = type.degenerate ? ExtVal(0) : (q[0] + q[5]) - m;
    L.vertex_u = point_pushforward(u.normalized(), pi);
    L.vertex_w = point_pushforward(w.normalized(), pi);
    return L;
}

/// Tropical linear form dual to coordinate k:
/// F_k(x) = min over l != k of p_{complement(k,l)} + x_l, with
/// infinite terms excluded.  The point lies on the line iff every F_k
/// attains its minimum twice (vacuously when fewer than two finite
/// terms remain).
inline bool circuit_check(const TropPlueckerVector& v, const TropPoint& x) {
    if (!v.satisfies_relation())
        throw InvalidPluecker("tropical Pluecker relation fails for " + v.str());
    for (std::size_t k = 0; k < 4; ++k) {
        ExtVal best = ExtVal::infinity();
        int hits = 0;
        for (std::size_t l = 0; l < 4; ++l) {
            if (l == k) continue;
            auto [c1, c2] = complement_pair(k, l);
            ExtVal term = v.at(c1, c2) + x[l];
            if (term.is_infinite()) continue;
            if (term < best) {
                best = term;
                hits = 1;
            } else if (term == best) {
                ++hits;
            }
        }
        if (hits == 1) return false;
    }
    return true;
}

/// Euclidean pieces of the line (vertices, bounded edge, rays,
/// infinite segments), for containment tests and sampling.
struct LineCell {
    enum class Kind { Vertex, Segment, Ray, FullLine };
    Kind kind;
    TropPoint base;             // finite point
    std::array<int, 4> dir{};   // direction (0/1 entries), Segment/Ray/FullLine
    Rat length;                 // Segment only
    std::string name;
};

inline std::vector<LineCell> euclidean_cells(const TropLineGraph& L) {
    if (!L.has_geometry())
        throw UnsupportedBoundaryLine("no Euclidean reconstruction for class " +
                                      infinity_class_name(L.cls));
    auto dir_of = [](std::size_t i) {
        std::array<int, 4> d{};
        d[i] = 1;
        return d;
    };
    auto dir2_of = [](std::size_t i, std::size_t j) {
        std::array<int, 4> d{};
        d[i] = 1;
        d[j] = 1;
        return d;
    };
    const auto& t = L.type;
    std::vector<LineCell> cells;
    if (L.cls == InfinityClass::InteriorSegment) {
        cells.push_back({LineCell::Kind::FullLine, L.vertex_u, dir2_of(t.second[0], t.second[1]),
                         Rat(0), "middle-line"});
        return cells;
    }
    if (L.cls == InfinityClass::HalfLine) {
        // the vertex whose adjacent Pluecker entry is infinite escaped
        // to the boundary; the other one anchors the visible half line
        auto finite_point = [](const TropPoint& p) {
            for (const auto& c : p.x)
                if (c.is_infinite()) return false;
            return true;
        };
        bool w_is_finite = finite_point(L.vertex_w);
        const TropPoint& v = w_is_finite ? L.vertex_w : L.vertex_u;
        const auto& own = w_is_finite ? t.second : t.first;
        const auto& far = w_is_finite ? t.first : t.second;
        cells.push_back({LineCell::Kind::Vertex, v, {}, Rat(0),
                         w_is_finite ? "vertex-w" : "vertex-u"});
        cells.push_back(
            {LineCell::Kind::Ray, v, dir_of(own[0]), Rat(0), "ray-e" + std::to_string(own[0])});
        cells.push_back(
            {LineCell::Kind::Ray, v, dir_of(own[1]), Rat(0), "ray-e" + std::to_string(own[1])});
        cells.push_back({LineCell::Kind::Ray, v, dir2_of(far[0], far[1]), Rat(0), "middle-ray"});
        return cells;
    }
    // full tree
    cells.push_back({LineCell::Kind::Vertex, L.vertex_u, {}, Rat(0), "vertex-u"});
    cells.push_back({LineCell::Kind::Ray, L.vertex_u, dir_of(t.first[0]), Rat(0),
                     "ray-e" + std::to_string(t.first[0])});
    cells.push_back({LineCell::Kind::Ray, L.vertex_u, dir_of(t.first[1]), Rat(0),
                     "ray-e" + std::to_string(t.first[1])});
    if (!(L.delta == ExtVal(0))) {
        cells.push_back({LineCell::Kind::Vertex, L.vertex_w, {}, Rat(0), "vertex-w"});
        cells.push_back({LineCell::Kind::Segment, L.vertex_u, dir2_of(t.second[0], t.second[1]),
                         L.delta.value(), "edge"});
    }
    cells.push_back({LineCell::Kind::Ray, L.vertex_w, dir_of(t.second[0]), Rat(0),
                     "ray-e" + std::to_string(t.second[0])});
    cells.push_back({LineCell::Kind::Ray, L.vertex_w, dir_of(t.second[1]), Rat(0),
                     "ray-e" + std::to_string(t.second[1])});
    return cells;
}

} // namespace bltrop
