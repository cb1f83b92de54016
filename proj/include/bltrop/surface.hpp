#pragma once

#include "bltrop/line_graph.hpp"
#include "bltrop/subdivision.hpp"

namespace bltrop {

/// Tropical cubic surface: min-locus of a weighted support, with the
/// dual subdivision computed up front.
struct TropSurface {
    LatticeConfig config;
    std::vector<ExtVal> weights;
    RegularSubdivision subdivision;

    static TropSurface make(LatticeConfig config, std::vector<ExtVal> weights) {
        RegularSubdivision s = regular_subdivision(config, weights);
        return TropSurface{std::move(config), std::move(weights), std::move(s)};
    }

    TropPolynomial poly() const { return TropPolynomial{config.points, weights}; }
};

inline std::pair<bool, std::vector<std::size_t>> contains_point(const TropSurface& S,
                                                                const TropPoint& x) {
    auto r = trop_eval(S.poly(), x);
    return {r.tight.size() >= 2, r.tight};
}

namespace surface_detail {

struct Affine1 {
    std::size_t term;
    Rat a, b; // value a + b s along the cell parameter
};

/// Restrictions of all finite-weight terms to the affine cell
/// base + s * dir; the base point must be finite.
inline std::vector<Affine1> restrict_terms(const TropSurface& S, const TropPoint& base,
                                           const std::array<int, 4>& dir) {
    std::vector<Affine1> out;
    for (std::size_t i = 0; i < S.config.size(); ++i) {
        if (S.weights[i].is_infinite()) continue;
        Rat a = S.weights[i].value();
        Rat b(0);
        for (std::size_t j = 0; j < 4; ++j) {
            int e = S.config.points[i][j];
            if (e == 0) continue;
            a += e * base[j].value();
            b += e * dir[j];
        }
        out.push_back({i, a, b});
    }
    return out;
}

/// Sample parameters covering every stratum of the refinement of the
/// cell by the lower envelope of the term restrictions: all interior
/// breakpoints plus one representative inside each open piece.
inline std::vector<Rat> stratum_samples(const std::vector<Affine1>& terms, LineCell::Kind kind,
                                        const Rat& length) {
    std::vector<Rat> bps;
    const bool two_sided = kind == LineCell::Kind::FullLine;
    const bool bounded = kind == LineCell::Kind::Segment;
    for (std::size_t i = 0; i < terms.size(); ++i)
        for (std::size_t j = i + 1; j < terms.size(); ++j) {
            if (terms[i].b == terms[j].b) continue;
            Rat s = (terms[j].a - terms[i].a) / (terms[i].b - terms[j].b);
            bool inside = two_sided || s > 0;
            if (bounded && s >= length) inside = false;
            if (inside) bps.push_back(s);
        }
    std::sort(bps.begin(), bps.end());
    bps.erase(std::unique(bps.begin(), bps.end()), bps.end());

    std::vector<Rat> samples = bps;
    if (bounded) {
        std::vector<Rat> grid;
        grid.push_back(Rat(0));
        grid.insert(grid.end(), bps.begin(), bps.end());
        grid.push_back(length);
        for (std::size_t i = 0; i + 1 < grid.size(); ++i)
            samples.push_back((grid[i] + grid[i + 1]) / 2);
    } else {
        std::vector<Rat> grid;
        if (!two_sided) grid.push_back(Rat(0));
        grid.insert(grid.end(), bps.begin(), bps.end());
        for (std::size_t i = 0; i + 1 < grid.size(); ++i)
            samples.push_back((grid[i] + grid[i + 1]) / 2);
        if (!grid.empty()) samples.push_back(grid.back() + 1);
        if (two_sided) samples.push_back(grid.empty() ? Rat(0) : grid.front() - 1);
    }
    std::sort(samples.begin(), samples.end());
    samples.erase(std::unique(samples.begin(), samples.end()), samples.end());
    return samples;
}

inline TropPoint point_on_cell(const LineCell& cell, const Rat& s) {
    TropPoint x = cell.base;
    for (std::size_t j = 0; j < 4; ++j)
        if (cell.dir[j] != 0) x[j] = x[j] + ExtVal(s * cell.dir[j]);
    return x;
}

/// Indices of terms attaining the minimum at parameter s.
inline std::vector<std::size_t> tight_at(const std::vector<Affine1>& terms, const Rat& s) {
    std::vector<std::size_t> tight;
    bool first = true;
    Rat best(0);
    for (const auto& t : terms) {
        Rat v = t.a + t.b * s;
        if (first || v < best) {
            best = v;
            tight.clear();
            tight.push_back(t.term);
            first = false;
        } else if (v == best) {
            tight.push_back(t.term);
        }
    }
    return tight;
}

} // namespace surface_detail

struct ContainsLineResult {
    bool contained = false;
    std::optional<TropPoint> witness; // rational point with tight set of size <= 1
};

/// Exact containment of a tropical line in the surface: on every cell
/// of the line the restricted terms are refined by their lower
/// envelope, and each stratum must carry at least two tight terms.
/// Minimizer sets are constant on open strata, so one exact rational
/// sample per stratum decides.
inline ContainsLineResult contains_line(const TropSurface& S, const TropLineGraph& L) {
    using namespace surface_detail;
    if (!L.has_geometry())
        throw UnsupportedBoundaryLine("containment undecidable for class " +
                                      infinity_class_name(L.cls));
    for (const auto& cell : euclidean_cells(L)) {
        if (cell.kind == LineCell::Kind::Vertex) {
            auto [ok, tight] = contains_point(S, cell.base);
            if (!ok) return {false, cell.base};
            continue;
        }
        auto terms = restrict_terms(S, cell.base, cell.dir);
        for (const Rat& s : stratum_samples(terms, cell.kind, cell.length)) {
            if (tight_at(terms, s).size() < 2)
                return {false, point_on_cell(cell, s)};
        }
    }
    return {true, std::nullopt};
}

/// Dual cell: a set of support indices (rows of the configuration)
/// whose convex hull is the cell of the dual subdivision met by the
/// line at some stratum.
using DualMotif = std::vector<std::vector<std::size_t>>;

inline DualMotif dual_motif(const TropSurface& S, const TropLineGraph& L) {
    using namespace surface_detail;
    auto res = contains_line(S, L);
    if (!res.contained) throw NotContained("line is not contained in the surface");
    std::set<std::vector<std::size_t>> cells;
    for (const auto& cell : euclidean_cells(L)) {
        if (cell.kind == LineCell::Kind::Vertex) {
            cells.insert(contains_point(S, cell.base).second);
            continue;
        }
        auto terms = restrict_terms(S, cell.base, cell.dir);
        for (const Rat& s : stratum_samples(terms, cell.kind, cell.length))
            cells.insert(tight_at(terms, s));
    }
    return {cells.begin(), cells.end()};
}

enum class FamilyType { ThreeI1, ThreeI2, ThreeJCandidate, Unknown };

inline std::string family_type_name(FamilyType t) {
    switch (t) {
    case FamilyType::ThreeI1: return "3I-1";
    case FamilyType::ThreeI2: return "3I-2";
    case FamilyType::ThreeJCandidate: return "3J-candidate";
    case FamilyType::Unknown: return "UNKNOWN";
    }
    return "?";
}

/// Reference positions of the distinguishing tetrahedron
/// (dehomogenised); coordinate changes act as S4 on the homogeneous
/// exponents.
inline const std::vector<Point3>& reference_tetrahedron_3I1() {
    static const std::vector<Point3> t{{0, 0, 0}, {0, 0, 1}, {2, 1, 0}, {1, 0, 2}};
    return t;
}
inline const std::vector<Point3>& reference_tetrahedron_3I2() {
    static const std::vector<Point3> t{{0, 0, 0}, {0, 0, 1}, {2, 1, 0}, {1, 1, 1}};
    return t;
}

/// S4-equivalence of two 4-point sets in 3 * Delta_3: permutations of
/// the four homogeneous exponent coordinates.
inline bool s4_equivalent(std::vector<Point3> a, std::vector<Point3> b) {
    if (a.size() != b.size()) return false;
    auto homog = [](const Point3& p) {
        return std::array<long, 4>{3 - p[0] - p[1] - p[2], p[0], p[1], p[2]};
    };
    std::vector<std::array<long, 4>> ha, hb;
    for (const auto& p : a) ha.push_back(homog(p));
    for (const auto& p : b) hb.push_back(homog(p));
    std::sort(hb.begin(), hb.end());
    std::array<std::size_t, 4> perm{0, 1, 2, 3};
    do {
        std::vector<std::array<long, 4>> img;
        for (const auto& p : ha) {
            std::array<long, 4> q{};
            for (std::size_t i = 0; i < 4; ++i) q[perm[i]] = p[i];
            img.push_back(q);
        }
        std::sort(img.begin(), img.end());
        if (img == hb) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Classify a parametric family from sampled members.  A member of a
/// 3I family stays inside the star of one surface vertex: its dual
/// motif is a single full-dimensional cell (the distinguishing
/// tetrahedron) together with faces of it.  The subtype is decided by
/// the S4-position of that tetrahedron.  Members whose motif spreads
/// over several vertices, or over none, are inconsistent with 3I and
/// reported as 3J candidates; a solitary distinguishing cell that is
/// not a reference-position unimodular tetrahedron yields UNKNOWN.
inline FamilyType classify_family(const TropSurface& S,
                                  const std::vector<TropLineGraph>& members) {
    if (members.size() < 2) throw FewerThanTwoMembers("need at least two family members");
    std::optional<FamilyType> consensus;
    for (const auto& L : members) {
        DualMotif motif = dual_motif(S, L); // NotContained propagates
        std::vector<std::vector<std::size_t>> full_dim;
        for (const auto& cell : motif) {
            std::vector<Point3> pts;
            for (std::size_t i : cell) pts.push_back(S.config.dehom(i));
            if (affine_rank(pts) == 3) full_dim.push_back(cell);
        }
        FamilyType t;
        if (full_dim.size() != 1) {
            t = FamilyType::ThreeJCandidate;
        } else {
            const auto& D = full_dim.front();
            bool star_shaped = true;
            for (const auto& cell : motif)
                if (!std::includes(D.begin(), D.end(), cell.begin(), cell.end()))
                    star_shaped = false;
            if (!star_shaped) {
                t = FamilyType::ThreeJCandidate;
            } else {
                std::vector<Point3> pts;
                for (std::size_t i : D) pts.push_back(S.config.dehom(i));
                t = FamilyType::Unknown;
                if (pts.size() == 4 && euclidean_volume_points(pts) == Rat(1, 6)) {
                    if (s4_equivalent(pts, reference_tetrahedron_3I1()))
                        t = FamilyType::ThreeI1;
                    else if (s4_equivalent(pts, reference_tetrahedron_3I2()))
                        t = FamilyType::ThreeI2;
                }
            }
        }
        if (consensus && *consensus != t) return FamilyType::Unknown;
        consensus = t;
    }
    return *consensus;
}

/// Two-cells of the tropical surface clipped to a bounding box, for
/// figure export.  Polygons are indexed into a shared exact vertex
/// pool; each polygon records which pair of terms is tight on it.
struct SurfaceMesh {
    std::vector<std::array<Rat, 3>> vertices;
    std::vector<std::vector<std::size_t>> polygons;
    std::vector<std::pair<std::size_t, std::size_t>> polygon_terms;
};

namespace surface_detail {

struct HalfPlane {
    // alpha + beta s + gamma u >= 0
    Rat alpha, beta, gamma;
};

inline std::vector<std::array<Rat, 2>> clip_polygon(std::vector<std::array<Rat, 2>> poly,
                                                    const HalfPlane& h) {
    std::vector<std::array<Rat, 2>> out;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& p = poly[i];
        const auto& q = poly[(i + 1) % n];
        Rat vp = h.alpha + h.beta * p[0] + h.gamma * p[1];
        Rat vq = h.alpha + h.beta * q[0] + h.gamma * q[1];
        if (vp >= 0) out.push_back(p);
        if ((vp > 0 && vq < 0) || (vp < 0 && vq > 0)) {
            Rat t = vp / (vp - vq);
            out.push_back({p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])});
        }
    }
    // drop consecutive duplicates
    std::vector<std::array<Rat, 2>> clean;
    for (const auto& v : out)
        if (clean.empty() || !(clean.back() == v)) clean.push_back(v);
    while (clean.size() > 1 && clean.front() == clean.back()) clean.pop_back();
    return clean;
}

} // namespace surface_detail

inline SurfaceMesh export_mesh(const TropSurface& S, const Rat& box) {
    using namespace surface_detail;
    SurfaceMesh mesh;
    std::map<std::array<std::string, 3>, std::size_t> pool;
    auto vertex_id = [&](const std::array<Rat, 3>& v) {
        std::array<std::string, 3> key{rat_to_string(v[0]), rat_to_string(v[1]),
                                       rat_to_string(v[2])};
        auto it = pool.find(key);
        if (it != pool.end()) return it->second;
        mesh.vertices.push_back(v);
        pool.emplace(key, mesh.vertices.size() - 1);
        return mesh.vertices.size() - 1;
    };

    std::vector<std::size_t> finite;
    for (std::size_t i = 0; i < S.config.size(); ++i)
        if (S.weights[i].is_finite()) finite.push_back(i);

    for (std::size_t ii = 0; ii < finite.size(); ++ii)
        for (std::size_t jj = ii + 1; jj < finite.size(); ++jj) {
            std::size_t i = finite[ii], j = finite[jj];
            Point3 pi = S.config.dehom(i), pj = S.config.dehom(j);
            std::array<long, 3> nrm{pi[0] - pj[0], pi[1] - pj[1], pi[2] - pj[2]};
            if (nrm[0] == 0 && nrm[1] == 0 && nrm[2] == 0) continue;
            Rat c = S.weights[j].value() - S.weights[i].value();
            // plane point y0 = c n / |n|^2 and integer tangent frame
            Rat n2 = Rat(nrm[0] * nrm[0] + nrm[1] * nrm[1] + nrm[2] * nrm[2]);
            std::array<Rat, 3> y0{c * nrm[0] / n2, c * nrm[1] / n2, c * nrm[2] / n2};
            std::array<long, 3> t1{};
            if (nrm[0] != 0 || nrm[1] != 0)
                t1 = {nrm[1], -nrm[0], 0};
            else
                t1 = {0, nrm[2], -nrm[1]};
            std::array<long, 3> t2{nrm[1] * t1[2] - nrm[2] * t1[1],
                                   nrm[2] * t1[0] - nrm[0] * t1[2],
                                   nrm[0] * t1[1] - nrm[1] * t1[0]};
            auto embed = [&](const std::array<Rat, 2>& su) {
                return std::array<Rat, 3>{y0[0] + su[0] * t1[0] + su[1] * t2[0],
                                          y0[1] + su[0] * t1[1] + su[1] * t2[1],
                                          y0[2] + su[0] * t1[2] + su[1] * t2[2]};
            };
            // crude but safe parameter bound for the initial square
            Rat scale(1);
            for (long v : t1) scale += boost::multiprecision::abs(Rat(v));
            for (long v : t2) scale += boost::multiprecision::abs(Rat(v));
            Rat reach = box;
            for (const auto& v : y0) reach += boost::multiprecision::abs(v);
            Rat M = (reach + 1) * scale * scale;
            std::vector<std::array<Rat, 2>> poly{{-M, -M}, {M, -M}, {M, M}, {-M, M}};
            // box faces
            for (std::size_t axis = 0; axis < 3 && !poly.empty(); ++axis) {
                poly = clip_polygon(poly, HalfPlane{box - y0[axis], Rat(-t1[axis]), Rat(-t2[axis])});
                if (poly.empty()) break;
                poly = clip_polygon(poly, HalfPlane{box + y0[axis], Rat(t1[axis]), Rat(t2[axis])});
            }
            // other terms dominate: f_k - f_i >= 0 on the plane
            for (std::size_t k : finite) {
                if (poly.empty()) break;
                if (k == i || k == j) continue;
                Point3 pk = S.config.dehom(k);
                std::array<long, 3> d{pk[0] - pi[0], pk[1] - pi[1], pk[2] - pi[2]};
                Rat alpha = S.weights[k].value() - S.weights[i].value();
                for (std::size_t m = 0; m < 3; ++m) alpha += d[m] * y0[m];
                Rat beta = Rat(d[0] * t1[0] + d[1] * t1[1] + d[2] * t1[2]);
                Rat gamma = Rat(d[0] * t2[0] + d[1] * t2[1] + d[2] * t2[2]);
                poly = clip_polygon(poly, HalfPlane{alpha, beta, gamma});
            }
            if (poly.size() < 3) continue;
            // orientation + start canonicalisation
            Rat area2(0);
            for (std::size_t m = 0; m < poly.size(); ++m) {
                const auto& p = poly[m];
                const auto& q = poly[(m + 1) % poly.size()];
                area2 += p[0] * q[1] - q[0] * p[1];
            }
            if (area2 == 0) continue;
            if (area2 < 0) std::reverse(poly.begin(), poly.end());
            std::size_t start = 0;
            for (std::size_t m = 1; m < poly.size(); ++m)
                if (poly[m] < poly[start]) start = m;
            std::rotate(poly.begin(), poly.begin() + static_cast<long>(start), poly.end());
            std::vector<std::size_t> ids;
            ids.reserve(poly.size());
            for (const auto& su : poly) ids.push_back(vertex_id(embed(su)));
            mesh.polygons.push_back(std::move(ids));
            mesh.polygon_terms.emplace_back(i, j);
        }
    return mesh;
}

} // namespace bltrop
