#pragma once

// Shared helpers for exercising tropical line graphs: a generator of
// valid Pluecker vectors and the circuit-condition sweep used by both
// the unit suite and the acceptance suite.

#include "bltrop/line_graph.hpp"
#include "bltrop/rng.hpp"

namespace bltrop::checks {

/// Random valid tropical Pluecker vector: six integers patched so the
/// minimum pairing sum is attained at least twice; occasionally one
/// entry of the slack pairing is sent to infinity (class (b)).
inline TropPlueckerVector random_valid_pluecker(Rng& rng, bool allow_infinite = true) {
    std::array<long, 6> raw{};
    for (auto& v : raw) v = rng.range(-50, 50);
    TropPlueckerVector v = make_pluecker(ExtVal(raw[0]), ExtVal(raw[1]), ExtVal(raw[2]),
                                         ExtVal(raw[3]), ExtVal(raw[4]), ExtVal(raw[5]));
    auto sums = v.pairing_sums();
    // pairing k occupies entries (k, 5-k)
    std::size_t hi = 0;
    for (std::size_t k = 1; k < 3; ++k)
        if (sums[hi] < sums[k]) hi = k;
    std::size_t lo = (hi + 1) % 3, mid = (hi + 2) % 3;
    // equalise the two non-maximal pairings at their minimum
    Rat target = min(sums[lo], sums[mid]).value();
    v[lo] = ExtVal(target) - v[5 - lo];
    v[mid] = ExtVal(target) - v[5 - mid];
    std::uint64_t mode = rng.below(8);
    if (allow_infinite && mode == 0) {
        // one infinite entry in the slack pairing keeps the vector valid
        v[rng.coin() ? hi : 5 - hi] = ExtVal::infinity();
    } else if (mode == 1) {
        // degenerate: all three pairing sums equal
        v[hi] = ExtVal(target) - v[5 - hi];
    }
    return v;
}

/// Points that must satisfy the circuit conditions for a valid vector:
/// both vertices, the bounded-edge midpoint, and three points per ray
/// (adapted to the boundary classes).
inline std::vector<TropPoint> circuit_probe_points(const TropLineGraph& L) {
    std::vector<TropPoint> pts;
    if (!L.has_geometry()) return pts;
    pts.push_back(L.vertex_u);
    pts.push_back(L.vertex_w);
    const std::array<long, 3> reach{1, 10, 100};
    auto push_along = [&pts](const TropPoint& base, const std::array<int, 4>& dir, long s) {
        TropPoint x = base;
        for (std::size_t j = 0; j < 4; ++j)
            if (dir[j] != 0) x[j] = x[j] + ExtVal(Rat(s * dir[j]));
        pts.push_back(x);
    };
    for (const auto& cell : euclidean_cells(L)) {
        switch (cell.kind) {
        case LineCell::Kind::Vertex:
            pts.push_back(cell.base);
            break;
        case LineCell::Kind::Segment: {
            TropPoint mid = cell.base;
            for (std::size_t j = 0; j < 4; ++j)
                if (cell.dir[j] != 0) mid[j] = mid[j] + ExtVal(cell.length / 2);
            pts.push_back(mid);
            break;
        }
        case LineCell::Kind::Ray:
            for (long s : reach) push_along(cell.base, cell.dir, s);
            break;
        case LineCell::Kind::FullLine:
            for (long s : reach) {
                push_along(cell.base, cell.dir, s);
                push_along(cell.base, cell.dir, -s);
            }
            break;
        }
    }
    return pts;
}

/// Full circuit sweep; returns false (with a message) instead of
/// asserting so callers can report context.
inline bool circuit_sweep_ok(const TropPlueckerVector& v) {
    TropLineGraph L = line_from_pluecker(v);
    if (L.delta < ExtVal(0)) return false;
    if (!L.has_geometry()) return true; // nothing Euclidean to probe
    for (const auto& x : circuit_probe_points(L))
        if (!circuit_check(v, x)) return false;
    return true;
}

inline Perm4 random_perm(Rng& rng) {
    Perm4 p{0, 1, 2, 3};
    for (std::size_t i = 3; i > 0; --i) std::swap(p[i], p[rng.below(i + 1)]);
    return p;
}

} // namespace bltrop::checks
