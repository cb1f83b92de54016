#include <gtest/gtest.h>

#include "bltrop/line_graph.hpp"
#include "line_checks.hpp"

using namespace bltrop;

namespace {

ExtVal inf() { return ExtVal::infinity(); }

TropPlueckerVector pl(long a, long b, long c, long d, long e, long f) {
    return make_pluecker(ExtVal(a), ExtVal(b), ExtVal(c), ExtVal(d), ExtVal(e), ExtVal(f));
}

} // namespace

TEST(LineGraph, TreeTypes) {
    EXPECT_TRUE(validate_pluecker(pl(0, 0, 0, 0, 0, 0)).degenerate);

    TreeType t = validate_pluecker(pl(0, 0, 8, 0, 8, 20));
    EXPECT_FALSE(t.degenerate);
    EXPECT_EQ(t.first, (std::array<std::size_t, 2>{0, 1}));
    EXPECT_EQ(t.second, (std::array<std::size_t, 2>{2, 3}));

    // tie-structure regression: sums (0, 0, 1), valid with type {0,3}|{1,2}
    TreeType t2 = validate_pluecker(pl(0, 0, 0, 1, 0, 0));
    EXPECT_FALSE(t2.degenerate);
    EXPECT_EQ(t2.first, (std::array<std::size_t, 2>{0, 3}));
    EXPECT_EQ(t2.second, (std::array<std::size_t, 2>{1, 2}));

    // minimum attained once: not a tropical Pluecker vector
    EXPECT_THROW(validate_pluecker(pl(1, -40, -86, 37, 3, -49)), InvalidPluecker);
}

TEST(LineGraph, InfinityClasses) {
    EXPECT_EQ(infinity_class(pl(0, 0, 8, 0, 8, 20)), InfinityClass::Full);
    EXPECT_EQ(infinity_class(make_pluecker(ExtVal(0), ExtVal(0), ExtVal(0), inf(), ExtVal(1),
                                           ExtVal(1))),
              InfinityClass::HalfLine);
    EXPECT_EQ(infinity_class(make_pluecker(inf(), ExtVal(0), ExtVal(0), ExtVal(0), ExtVal(0),
                                           inf())),
              InfinityClass::InteriorSegment);
    EXPECT_EQ(infinity_class(make_pluecker(inf(), ExtVal(0), ExtVal(0), inf(), inf(), ExtVal(0))),
              InfinityClass::BoundaryHalfLine);
    EXPECT_EQ(infinity_class(make_pluecker(inf(), inf(), ExtVal(0), inf(), inf(), inf())),
              InfinityClass::BoundaryLine);
    EXPECT_THROW(infinity_class(make_pluecker(inf(), inf(), ExtVal(0), ExtVal(0), ExtVal(0),
                                              ExtVal(0))),
                 InvalidPluecker);
}

TEST(LineGraph, ReconstructionExamples) {
    TropLineGraph L = line_from_pluecker(pl(0, 0, 0, 0, 0, 5));
    EXPECT_EQ(L.vertex_u, make_point(ExtVal(0), ExtVal(0), ExtVal(0), ExtVal(0)));
    EXPECT_EQ(L.vertex_w, make_point(ExtVal(0), ExtVal(0), ExtVal(5), ExtVal(5)));
    EXPECT_EQ(L.delta, ExtVal(5));
    EXPECT_EQ(L.type.second, (std::array<std::size_t, 2>{2, 3})); // edge direction e2 + e3

    TropLineGraph M = line_from_pluecker(pl(0, 0, 8, 0, 8, 20));
    EXPECT_EQ(M.vertex_u, make_point(ExtVal(0), ExtVal(0), ExtVal(0), ExtVal(8)));
    EXPECT_EQ(M.vertex_w, make_point(ExtVal(0), ExtVal(0), ExtVal(12), ExtVal(20)));
    EXPECT_EQ(M.delta, ExtVal(12));

    TropLineGraph D = line_from_pluecker(pl(0, 0, 0, 0, 0, 0));
    EXPECT_TRUE(D.type.degenerate);
    EXPECT_EQ(D.delta, ExtVal(0));
    EXPECT_EQ(D.vertex_u, D.vertex_w);
    EXPECT_EQ(D.vertex_u, make_point(ExtVal(0), ExtVal(0), ExtVal(0), ExtVal(0)));
}

TEST(LineGraph, HalfLineReconstruction) {
    // one infinite entry: the adjacent vertex escapes to the boundary
    TropPlueckerVector v =
        make_pluecker(ExtVal(0), ExtVal(0), ExtVal(0), inf(), ExtVal(1), ExtVal(1));
    TropLineGraph L = line_from_pluecker(v);
    EXPECT_EQ(L.cls, InfinityClass::HalfLine);
    EXPECT_TRUE(L.delta.is_infinite());
    // exactly one of the vertices is finite
    auto finite = [](const TropPoint& p) {
        for (const auto& c : p.x)
            if (c.is_infinite()) return false;
        return true;
    };
    EXPECT_NE(finite(L.vertex_u), finite(L.vertex_w));
    for (const auto& x : checks::circuit_probe_points(L)) EXPECT_TRUE(circuit_check(v, x));
}

TEST(LineGraph, InteriorSegmentReconstruction) {
    TropPlueckerVector v =
        make_pluecker(inf(), ExtVal(0), ExtVal(0), ExtVal(0), ExtVal(0), inf());
    TropLineGraph L = line_from_pluecker(v);
    EXPECT_EQ(L.cls, InfinityClass::InteriorSegment);
    auto cells = euclidean_cells(L);
    ASSERT_EQ(cells.size(), 1u);
    EXPECT_EQ(cells[0].kind, LineCell::Kind::FullLine);
    for (const auto& x : checks::circuit_probe_points(L)) EXPECT_TRUE(circuit_check(v, x));
}

TEST(LineGraph, BoundaryClassesHaveNoGeometry) {
    TropPlueckerVector v =
        make_pluecker(inf(), inf(), ExtVal(0), inf(), inf(), inf());
    TropLineGraph L = line_from_pluecker(v);
    EXPECT_FALSE(L.has_geometry());
    EXPECT_THROW(euclidean_cells(L), UnsupportedBoundaryLine);
}

TEST(LineGraph, CircuitExamples) {
    TropPlueckerVector v = pl(0, 0, 0, 0, 0, 5);
    EXPECT_TRUE(circuit_check(v, make_point(ExtVal(0), ExtVal(0), ExtVal(5), ExtVal(5))));
    EXPECT_FALSE(circuit_check(v, make_point(ExtVal(0), ExtVal(0), ExtVal(7), ExtVal(1))));
}

TEST(LineGraph, CircuitSweepProperty) {
    for (std::uint64_t i = 0; i < 2000; ++i) {
        Rng rng = Rng::for_index(2024, i);
        TropPlueckerVector v = checks::random_valid_pluecker(rng);
        EXPECT_TRUE(checks::circuit_sweep_ok(v)) << v.str();
    }
}

TEST(LineGraph, RelabelingInvarianceProperty) {
    for (std::uint64_t i = 0; i < 1000; ++i) {
        Rng rng = Rng::for_index(77, i);
        TropPlueckerVector v = checks::random_valid_pluecker(rng);
        Perm4 pi = checks::random_perm(rng);
        TropPlueckerVector vp = pluecker_pushforward(v, pi);
        TropLineGraph L = line_from_pluecker(v);
        TropLineGraph Lp = line_from_pluecker(vp);
        if (!L.has_geometry()) {
            EXPECT_FALSE(Lp.has_geometry());
            continue;
        }
        // vertices map as a set (u/w roles may swap under relabeling)
        TropPoint iu = point_pushforward(L.vertex_u, pi), iw = point_pushforward(L.vertex_w, pi);
        bool direct = (Lp.vertex_u == iu && Lp.vertex_w == iw);
        bool swapped = (Lp.vertex_u == iw && Lp.vertex_w == iu);
        EXPECT_TRUE(direct || swapped) << v.str() << " perm image " << vp.str();
        EXPECT_EQ(Lp.delta, L.delta);
    }
}

TEST(LineGraph, ShiftInvarianceProperty) {
    for (std::uint64_t i = 0; i < 1000; ++i) {
        Rng rng = Rng::for_index(78, i);
        TropPlueckerVector v = checks::random_valid_pluecker(rng);
        Rat c(rng.range(-40, 40));
        TropPlueckerVector w = v;
        for (std::size_t k = 0; k < 6; ++k) w[k] = w[k] + ExtVal(c);
        TropLineGraph L = line_from_pluecker(v);
        TropLineGraph Lw = line_from_pluecker(w);
        EXPECT_EQ(L.delta, Lw.delta);
        if (L.has_geometry()) {
            EXPECT_EQ(L.vertex_u, Lw.vertex_u);
            EXPECT_EQ(L.vertex_w, Lw.vertex_w);
        }
    }
}

TEST(LineGraph, DeltaZeroIffDegenerate) {
    for (std::uint64_t i = 0; i < 1500; ++i) {
        Rng rng = Rng::for_index(79, i);
        TropPlueckerVector v = checks::random_valid_pluecker(rng, false);
        TropLineGraph L = line_from_pluecker(v);
        EXPECT_GE(L.delta, ExtVal(0));
        EXPECT_EQ(L.delta == ExtVal(0), L.type.degenerate);
        if (L.type.degenerate) EXPECT_EQ(L.vertex_u, L.vertex_w);
    }
}
