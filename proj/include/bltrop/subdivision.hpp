#pragma once

#include <algorithm>
#include <set>

#include "bltrop/rng.hpp"
#include "bltrop/tropical.hpp"

namespace bltrop {

/// Solve A x = b exactly by Gaussian elimination; returns nullopt for
/// singular A.
inline std::optional<std::vector<Rat>> solve_linear(std::vector<std::vector<Rat>> A,
                                                    std::vector<Rat> b) {
    const std::size_t n = A.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && A[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(A[piv], A[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || A[r][col] == 0) continue;
            Rat f = A[r][col] / A[col][col];
            for (std::size_t c = col; c < n; ++c) A[r][c] -= f * A[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<Rat> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / A[i][i];
    return x;
}

inline Int det3(const std::array<long, 3>& a, const std::array<long, 3>& b,
                const std::array<long, 3>& c) {
    Int r = Int(a[0]) * (Int(b[1]) * c[2] - Int(b[2]) * c[1]);
    r -= Int(a[1]) * (Int(b[0]) * c[2] - Int(b[2]) * c[0]);
    r += Int(a[2]) * (Int(b[0]) * c[1] - Int(b[1]) * c[0]);
    return r;
}

using Point3 = std::array<long, 3>;

inline int affine_rank(const std::vector<Point3>& pts) {
    if (pts.empty()) return -1;
    std::vector<std::array<Rat, 3>> basis;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        std::array<Rat, 3> v{Rat(pts[i][0] - pts[0][0]), Rat(pts[i][1] - pts[0][1]),
                             Rat(pts[i][2] - pts[0][2])};
        for (const auto& bvec : basis) {
            // eliminate with the pivot of bvec
            std::size_t p = 0;
            while (p < 3 && bvec[p] == 0) ++p;
            if (p == 3 || v[p] == 0) continue;
            Rat f = v[p] / bvec[p];
            for (std::size_t c = 0; c < 3; ++c) v[c] -= f * bvec[c];
        }
        if (v[0] != 0 || v[1] != 0 || v[2] != 0) basis.push_back(v);
        if (basis.size() == 3) return 3;
    }
    return static_cast<int>(basis.size());
}

/// Maximal cells of the regular subdivision of a 3D point set induced
/// by (finite) weights: supporting affine functionals are enumerated
/// from affinely independent 4-subsets of the lifted points and kept
/// when the lower-face certificate (<= everywhere, = exactly on the
/// cell) holds.
inline std::vector<std::vector<std::size_t>>
lower_hull_cells(const std::vector<Point3>& pts, const std::vector<Rat>& w) {
    const std::size_t n = pts.size();
    if (n < 4 || affine_rank(pts) < 3)
        throw DegenerateConfiguration("point configuration does not span 3-space");
    std::set<std::vector<std::size_t>> cells;
    std::array<std::size_t, 4> s{};
    for (s[0] = 0; s[0] < n; ++s[0])
        for (s[1] = s[0] + 1; s[1] < n; ++s[1])
            for (s[2] = s[1] + 1; s[2] < n; ++s[2])
                for (s[3] = s[2] + 1; s[3] < n; ++s[3]) {
                    std::vector<std::vector<Rat>> A(4, std::vector<Rat>(4));
                    std::vector<Rat> b(4);
                    for (std::size_t r = 0; r < 4; ++r) {
                        A[r][0] = 1;
                        for (std::size_t c = 0; c < 3; ++c) A[r][c + 1] = pts[s[r]][c];
                        b[r] = w[s[r]];
                    }
                    auto sol = solve_linear(std::move(A), std::move(b));
                    if (!sol) continue; // affinely dependent 4-subset
                    const auto& ell = *sol;
                    std::vector<std::size_t> cell;
                    bool lower = true;
                    for (std::size_t j = 0; j < n; ++j) {
                        Rat lv = ell[0] + ell[1] * pts[j][0] + ell[2] * pts[j][1] +
                                 ell[3] * pts[j][2];
                        if (lv == w[j]) {
                            cell.push_back(j);
                        } else if (lv > w[j]) {
                            lower = false;
                            break;
                        }
                    }
                    if (lower) cells.insert(std::move(cell));
                }
    return {cells.begin(), cells.end()};
}

/// Lattice point configuration: homogeneous degree-3 exponent vectors
/// together with their dehomogenised images (first coordinate
/// dropped).
struct LatticeConfig {
    std::vector<std::array<int, 4>> points;

    std::size_t size() const { return points.size(); }

    Point3 dehom(std::size_t i) const {
        return {points[i][1], points[i][2], points[i][3]};
    }

    std::vector<Point3> dehom_all() const {
        std::vector<Point3> r(points.size());
        for (std::size_t i = 0; i < points.size(); ++i) r[i] = dehom(i);
        return r;
    }
};

struct RegularSubdivision {
    LatticeConfig config;
    std::vector<ExtVal> weights;
    std::vector<std::vector<std::size_t>> cells; // indices into config, sorted
};

/// Regular subdivision induced by a weight vector; points of infinite
/// weight are absent from the configuration.
inline RegularSubdivision regular_subdivision(const LatticeConfig& config,
                                              const std::vector<ExtVal>& weights) {
    if (weights.size() != config.size())
        throw InvalidParameters("weight count does not match the configuration");
    std::vector<std::size_t> finite;
    for (std::size_t i = 0; i < weights.size(); ++i)
        if (weights[i].is_finite()) finite.push_back(i);
    std::vector<Point3> pts;
    std::vector<Rat> w;
    for (std::size_t i : finite) {
        pts.push_back(config.dehom(i));
        w.push_back(weights[i].value());
    }
    auto raw = lower_hull_cells(pts, w);
    RegularSubdivision out{config, weights, {}};
    for (auto& cell : raw) {
        std::vector<std::size_t> mapped;
        mapped.reserve(cell.size());
        for (std::size_t j : cell) mapped.push_back(finite[j]);
        out.cells.push_back(std::move(mapped));
    }
    std::sort(out.cells.begin(), out.cells.end());
    return out;
}

/// Exact Euclidean volume of the convex hull of a full-dimensional
/// lattice point set, via a deterministic generic lifting that
/// triangulates the hull.
inline Rat euclidean_volume_points(const std::vector<Point3>& pts) {
    if (affine_rank(pts) < 3) throw LowerDimensionalCell();
    if (pts.size() == 4) {
        std::array<long, 3> u{pts[1][0] - pts[0][0], pts[1][1] - pts[0][1],
                              pts[1][2] - pts[0][2]};
        std::array<long, 3> v{pts[2][0] - pts[0][0], pts[2][1] - pts[0][1],
                              pts[2][2] - pts[0][2]};
        std::array<long, 3> q{pts[3][0] - pts[0][0], pts[3][1] - pts[0][1],
                              pts[3][2] - pts[0][2]};
        return Rat(boost::multiprecision::abs(det3(u, v, q))) / 6;
    }
    for (std::uint64_t attempt = 1; attempt <= 64; ++attempt) {
        Rng rng(attempt * 0x9e3779b9ULL + 17);
        std::vector<Rat> w(pts.size());
        for (auto& wi : w) wi = Rat(static_cast<long>(rng.below(1u << 30)));
        std::vector<std::vector<std::size_t>> cells;
        try {
            cells = lower_hull_cells(pts, w);
        } catch (const DegenerateConfiguration&) {
            throw LowerDimensionalCell();
        }
        bool simplicial = true;
        Rat total(0);
        for (const auto& cell : cells) {
            if (cell.size() != 4) {
                simplicial = false;
                break;
            }
            std::vector<Point3> q{pts[cell[0]], pts[cell[1]], pts[cell[2]], pts[cell[3]]};
            total += euclidean_volume_points(q);
        }
        if (simplicial) return total;
    }
    throw std::logic_error("no generic lift found for volume triangulation");
}

inline Rat euclidean_volume(const RegularSubdivision& s, const std::vector<std::size_t>& cell) {
    std::vector<Point3> pts;
    pts.reserve(cell.size());
    for (std::size_t i : cell) pts.push_back(s.config.dehom(i));
    return euclidean_volume_points(pts);
}

/// Normalized volume: 6x the Euclidean volume (1 for a unimodular
/// tetrahedron); an integer for lattice cells.
inline Int normalized_volume(const RegularSubdivision& s, const std::vector<std::size_t>& cell) {
    Rat v = 6 * euclidean_volume(s, cell);
    if (den(v) != 1) throw std::logic_error("normalized volume of a lattice cell must be integral");
    return num(v);
}

inline bool is_unimodular_triangulation(const RegularSubdivision& s) {
    for (const auto& cell : s.cells) {
        if (cell.size() != 4) return false;
        if (normalized_volume(s, cell) != 1) return false;
    }
    return true;
}

/// Tropical smoothness of the hypersurface dual to (config, weights).
inline bool is_tropically_smooth(const LatticeConfig& config,
                                 const std::vector<ExtVal>& weights) {
    try {
        return is_unimodular_triangulation(regular_subdivision(config, weights));
    } catch (const DegenerateConfiguration&) {
        return false; // lower-dimensional dual: never a smooth surface
    }
}

/// The 10-point support of the normal-form cubic, in table order.
inline LatticeConfig bl_support() {
    return LatticeConfig{{{0, 1, 0, 2},
                          {1, 1, 0, 1},
                          {1, 0, 1, 1},
                          {0, 2, 0, 1},
                          {0, 1, 1, 1},
                          {2, 1, 0, 0},
                          {2, 0, 1, 0},
                          {1, 2, 0, 0},
                          {1, 1, 1, 0},
                          {1, 0, 2, 0}}};
}

enum class MonomialOrder { Lex, GrLex, RevLex };

inline MonomialOrder monomial_order_from_string(const std::string& s) {
    if (s == "lex") return MonomialOrder::Lex;
    if (s == "grlex") return MonomialOrder::GrLex;
    if (s == "revlex") return MonomialOrder::RevLex;
    throw InvalidParameters("unknown monomial ordering '" + s + "'");
}

/// All 20 degree-3 exponent vectors in x0..x3, sorted by the requested
/// order with the largest monomial first.  On a fixed degree grlex
/// coincides with lex.
inline LatticeConfig cubic20_support(MonomialOrder order) {
    std::vector<std::array<int, 4>> pts;
    for (int a = 3; a >= 0; --a)
        for (int b = 3 - a; b >= 0; --b)
            for (int c = 3 - a - b; c >= 0; --c) pts.push_back({a, b, c, 3 - a - b - c});
    auto lex_greater = [](const std::array<int, 4>& x, const std::array<int, 4>& y) {
        return x > y;
    };
    auto revlex_greater = [](const std::array<int, 4>& x, const std::array<int, 4>& y) {
        for (int i = 3; i >= 0; --i)
            if (x[i] != y[i]) return x[i] < y[i];
        return false;
    };
    switch (order) {
    case MonomialOrder::Lex:
    case MonomialOrder::GrLex:
        std::sort(pts.begin(), pts.end(), lex_greater);
        break;
    case MonomialOrder::RevLex:
        std::sort(pts.begin(), pts.end(), revlex_greater);
        break;
    }
    return LatticeConfig{std::move(pts)};
}

} // namespace bltrop
