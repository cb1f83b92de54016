#include <gtest/gtest.h>

#include "bltrop/lines27.hpp"
#include "bltrop/surface.hpp"
#include "fixture_hj.hpp"
#include "fixtures.hpp"

using namespace bltrop;

namespace {

TropSurface trivial_surface() {
    return TropSurface::make(bl_support(), std::vector<ExtVal>(10, ExtVal(0)));
}

TropSurface eight_cell_surface() {
    return TropSurface::make(bl_support(), fixtures::eight_cell_printed_weights());
}

bool cell_inside_some_maximal(const RegularSubdivision& s, const std::vector<std::size_t>& c) {
    for (const auto& cell : s.cells)
        if (std::includes(cell.begin(), cell.end(), c.begin(), c.end())) return true;
    return false;
}

} // namespace

TEST(Surface, ContainsPoint) {
    TropSurface S = trivial_surface();
    auto [on, tight] = contains_point(S, make_point(ExtVal(0), ExtVal(0), ExtVal(0), ExtVal(0)));
    EXPECT_TRUE(on);
    EXPECT_EQ(tight.size(), 10u);

    // at (0,100,100,100) the two terms with highest first exponent tie:
    // the brute-force sweep over the ten exponents decides "contained"
    auto [edge, tight2] =
        contains_point(S, make_point(ExtVal(0), ExtVal(100), ExtVal(100), ExtVal(100)));
    EXPECT_TRUE(edge);
    EXPECT_EQ(tight2, (std::vector<std::size_t>{5, 6}));

    // a generic direction has a unique minimizing term
    auto [off, tight3] =
        contains_point(S, make_point(ExtVal(0), ExtVal(5), ExtVal(17), ExtVal(101)));
    EXPECT_FALSE(off);
    EXPECT_EQ(tight3.size(), 1u);
}

TEST(Surface, DegenerateLineAtOriginOnTrivialSurface) {
    TropSurface S = trivial_surface();
    TropLineGraph L = line_from_pluecker(fixtures::pluecker_of({0, 0, 0, 0, 0, 0}));
    EXPECT_TRUE(contains_line(S, L).contained);
    DualMotif motif = dual_motif(S, L);
    // the vertex sees everything: the whole 10-point hull is a dual cell
    std::vector<std::size_t> all{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    EXPECT_NE(std::find(motif.begin(), motif.end(), all), motif.end());
    for (const auto& cell : motif) EXPECT_TRUE(cell_inside_some_maximal(S.subdivision, cell));
}

TEST(Surface, IsolatedLinesOfTwentyTermExample) {
    TropSurface S = fixtures::hj_surface();
    for (const auto& raw : fixtures::hj_isolated_lines()) {
        auto r = contains_line(S, line_from_pluecker(fixtures::pluecker_of(raw)));
        EXPECT_TRUE(r.contained) << fixtures::pluecker_of(raw).str();
    }
}

TEST(Surface, FamilyMembersOfTwentyTermExample) {
    TropSurface S = fixtures::hj_surface();
    EXPECT_TRUE(contains_line(S, line_from_pluecker(fixtures::hj_family_3J(2))).contained);
    EXPECT_TRUE(contains_line(S, line_from_pluecker(fixtures::hj_family_3I2_a(1))).contained);
    EXPECT_TRUE(contains_line(S, line_from_pluecker(fixtures::hj_family_3I2_b(1))).contained);
}

TEST(Surface, PerturbedLineFailsWithWitness) {
    TropSurface S = fixtures::hj_surface();
    // p13 of the first isolated line bumped from 3 to 4: still a valid
    // tropical Pluecker vector, no longer on the surface
    TropPlueckerVector v = fixtures::pluecker_of({0, -40, -86, 37, 4, -49});
    ASSERT_TRUE(v.satisfies_relation());
    auto r = contains_line(S, line_from_pluecker(v));
    EXPECT_FALSE(r.contained);
    ASSERT_TRUE(r.witness.has_value());
    auto [on, tight] = contains_point(S, *r.witness);
    EXPECT_FALSE(on);
    EXPECT_LE(tight.size(), 1u);

    // the same bump applied to p01 breaks the Pluecker relation itself
    TropPlueckerVector bad = fixtures::pluecker_of({1, -40, -86, 37, 3, -49});
    EXPECT_FALSE(bad.satisfies_relation());
    EXPECT_THROW(line_from_pluecker(bad), InvalidPluecker);
}

TEST(Surface, BoundaryLineRejected) {
    TropSurface S = trivial_surface();
    TropLineGraph L = line_from_pluecker(make_pluecker(
        ExtVal::infinity(), ExtVal::infinity(), ExtVal(0), ExtVal::infinity(),
        ExtVal::infinity(), ExtVal::infinity()));
    EXPECT_THROW(contains_line(S, L), UnsupportedBoundaryLine);
}

TEST(Surface, HalfLineAndSegmentContainment) {
    // on the trivial surface all 14 tropicalized lines lie in the
    // surface; the half-line and interior-segment classes exercise the
    // unbounded cells
    TropSurface S = trivial_surface();
    BLParameters P = fixtures::trivial_subdivision_params();
    auto m = tropical_line_coordinates(P, resolve_ef(P));
    for (const auto& [label, v] : m) {
        TropLineGraph L = line_from_pluecker(v);
        if (!L.has_geometry()) continue;
        EXPECT_TRUE(contains_line(S, L).contained) << label_name(label);
    }
}

TEST(Surface, EightCellDualMotifs) {
    TropSurface S = eight_cell_surface();
    ASSERT_EQ(S.subdivision.cells.size(), 8u);
    // members of both families and the isolated line, as computed in
    // the example
    for (const auto& raw : std::vector<std::array<long, 6>>{
             {0, 0, 8, 0, 8, 20}, {0, 0, 8, 0, 8, 8}, {0, 15, 15, 0, 0, 20}}) {
        TropLineGraph L = line_from_pluecker(fixtures::pluecker_of(raw));
        ASSERT_TRUE(contains_line(S, L).contained) << fixtures::pluecker_of(raw).str();
        for (const auto& cell : dual_motif(S, L))
            EXPECT_TRUE(cell_inside_some_maximal(S.subdivision, cell));
    }
}

TEST(Surface, ReferenceTetrahedraAreInequivalent) {
    EXPECT_TRUE(s4_equivalent(reference_tetrahedron_3I1(), reference_tetrahedron_3I1()));
    EXPECT_TRUE(s4_equivalent(reference_tetrahedron_3I2(), reference_tetrahedron_3I2()));
    EXPECT_FALSE(s4_equivalent(reference_tetrahedron_3I1(), reference_tetrahedron_3I2()));
    // equivalence is stable under an explicit coordinate change
    std::vector<Point3> image;
    for (const auto& p : reference_tetrahedron_3I1()) {
        // homogenise, swap coordinates 0 and 2, dehomogenise
        std::array<long, 4> h{3 - p[0] - p[1] - p[2], p[0], p[1], p[2]};
        std::swap(h[0], h[2]);
        image.push_back({h[1], h[2], h[3]});
    }
    EXPECT_TRUE(s4_equivalent(image, reference_tetrahedron_3I1()));
    EXPECT_FALSE(s4_equivalent(image, reference_tetrahedron_3I2()));
}

TEST(Surface, ClassifyFamilies) {
    TropSurface S = fixtures::hj_surface();
    std::vector<TropLineGraph> i2a{line_from_pluecker(fixtures::hj_family_3I2_a(1)),
                                   line_from_pluecker(fixtures::hj_family_3I2_a(2))};
    EXPECT_EQ(classify_family(S, i2a), FamilyType::ThreeI2);

    std::vector<TropLineGraph> i2b{line_from_pluecker(fixtures::hj_family_3I2_b(1)),
                                   line_from_pluecker(fixtures::hj_family_3I2_b(2))};
    EXPECT_EQ(classify_family(S, i2b), FamilyType::ThreeI2);

    std::vector<TropLineGraph> j{line_from_pluecker(fixtures::hj_family_3J(1)),
                                 line_from_pluecker(fixtures::hj_family_3J(2))};
    EXPECT_EQ(classify_family(S, j), FamilyType::ThreeJCandidate);

    EXPECT_THROW(classify_family(S, {i2a[0]}), FewerThanTwoMembers);

    TropSurface T = trivial_surface();
    std::vector<TropLineGraph> off{
        line_from_pluecker(fixtures::pluecker_of({0, -40, -86, 37, 4, -49})),
        line_from_pluecker(fixtures::pluecker_of({0, -40, -86, 37, 5, -49}))};
    EXPECT_THROW(classify_family(T, off), NotContained);
}

TEST(Surface, MeshExport) {
    TropSurface S = eight_cell_surface();
    SurfaceMesh mesh = export_mesh(S, Rat(50));
    EXPECT_FALSE(mesh.polygons.empty());
    ASSERT_EQ(mesh.polygons.size(), mesh.polygon_terms.size());
    for (const auto& poly : mesh.polygons) {
        EXPECT_GE(poly.size(), 3u);
        for (std::size_t id : poly) {
            ASSERT_LT(id, mesh.vertices.size());
            for (const auto& coord : mesh.vertices[id]) {
                EXPECT_LE(coord, Rat(50));
                EXPECT_GE(coord, Rat(-50));
            }
        }
    }
    // determinism
    SurfaceMesh again = export_mesh(S, Rat(50));
    EXPECT_EQ(mesh.vertices.size(), again.vertices.size());
    EXPECT_EQ(mesh.polygons, again.polygons);
    // every mesh point satisfies the two-term tie it was built from
    TropPolynomial F = S.poly();
    for (std::size_t k = 0; k < mesh.polygons.size(); ++k) {
        auto [i, j] = mesh.polygon_terms[k];
        for (std::size_t id : mesh.polygons[k]) {
            const auto& y = mesh.vertices[id];
            TropPoint x = make_point(ExtVal(0), ExtVal(y[0]), ExtVal(y[1]), ExtVal(y[2]));
            auto r = trop_eval(F, x);
            Rat vi = S.weights[i].value(), vj = S.weights[j].value();
            for (std::size_t c = 0; c < 3; ++c) {
                vi += S.config.dehom(i)[c] * y[c];
                vj += S.config.dehom(j)[c] * y[c];
            }
            EXPECT_EQ(vi, vj);
            EXPECT_LE(r.value, ExtVal(vi));
            EXPECT_GE(ExtVal(vi), r.value);
        }
    }
}
