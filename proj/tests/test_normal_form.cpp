#include <gtest/gtest.h>

#include "bltrop/normal_form.hpp"
#include "fixtures.hpp"

using namespace bltrop;

namespace {

BaseScalar ts(const std::string& s) { return BaseScalar::parse(s, FieldSpec::tseries()); }

BLParameters constants(long a, long b, long c, long d, long g) {
    FieldSpec f = FieldSpec::tseries();
    return BLParameters{BaseScalar::constant(Rat(a), f), BaseScalar::constant(Rat(b), f),
                        BaseScalar::constant(Rat(c), f), BaseScalar::constant(Rat(d), f),
                        BaseScalar::constant(Rat(g), f), std::nullopt, std::nullopt};
}

} // namespace

TEST(NormalForm, CoefficientsAtUnitPoint) {
    BLCubic F = bl_coefficients(constants(1, 0, 0, 0, 0));
    std::array<long, 10> expect{-1, 0, -1, 0, 1, 2, 0, -2, 0, 1};
    for (int i = 0; i < 10; ++i)
        EXPECT_EQ(F.coeffs[static_cast<std::size_t>(i)],
                  BaseScalar::constant(Rat(expect[static_cast<std::size_t>(i)]),
                                       FieldSpec::tseries()))
            << "coefficient " << i;
}

TEST(NormalForm, TrivialSubdivisionExampleCoefficients) {
    BLParameters P = fixtures::trivial_subdivision_params();
    BLCubic F = bl_coefficients(P);
    EXPECT_EQ(F.coeffs[0], ts("3/2-1/2*t+3/2*t^2-t^5")); // -a-b+c expanded
    for (const auto& coeff : F.coeffs) EXPECT_EQ(coeff.val(), ExtVal(0));
}

TEST(NormalForm, ZeroParameterKillsPairedCoefficients) {
    BLCubic F = bl_coefficients(constants(0, 2, 3, 4, 5));
    EXPECT_TRUE(F.coeffs[5].is_zero());
    EXPECT_TRUE(F.coeffs[7].is_zero());
    auto w = bl_weight_vector(constants(0, 2, 3, 4, 5));
    EXPECT_TRUE(w[5].is_infinite());
    EXPECT_TRUE(w[7].is_infinite());
}

TEST(NormalForm, SigmaExamples) {
    EXPECT_FALSE(in_Sigma(fixtures::trivial_subdivision_params()));
    EXPECT_TRUE(in_Sigma(constants(1, 2, 0, 4, 5)));   // c = 0
    EXPECT_TRUE(in_Sigma(constants(1, 2, 3, 5, 4)));   // g = a + c
    EXPECT_TRUE(in_Sigma(constants(2, 7, 3, 11, -5))); // g = -(a + c)
}

TEST(NormalForm, WeightVectors) {
    EXPECT_EQ(bl_weight_vector(fixtures::trivial_subdivision_params()),
              std::vector<ExtVal>(10, ExtVal(0)));
    // the recomputed eight-cell vector; the printed one differs at
    // index 2 (20 computed vs 6 printed) because b + c = 0 exactly
    EXPECT_EQ(bl_weight_vector(fixtures::eight_cell_params()),
              fixtures::eight_cell_recomputed_weights());

    auto w = bl_weight_vector(constants(1, 0, 0, 0, 0));
    std::vector<ExtVal> expect{ExtVal(0), ExtVal::infinity(), ExtVal(0), ExtVal::infinity(),
                               ExtVal(0), ExtVal(0),          ExtVal::infinity(),
                               ExtVal(0), ExtVal::infinity(), ExtVal(0)};
    EXPECT_EQ(w, expect);
}

TEST(NormalForm, TrivialSubdivisionFromParameters) {
    auto s = regular_subdivision(bl_support(),
                                 bl_weight_vector(fixtures::trivial_subdivision_params()));
    EXPECT_EQ(s.cells.size(), 1u);
}

TEST(NormalForm, ResolveEfValidatesSuppliedPair) {
    BLParameters P = fixtures::trivial_subdivision_params();
    auto ctx = resolve_ef(P);
    ASSERT_TRUE(ctx->rational_split());
    EXPECT_EQ(ctx->e_exact(), *P.e);
    EXPECT_EQ(ctx->f_exact(), *P.f);

    BLParameters bad = P;
    bad.e = ts("2");
    EXPECT_THROW(resolve_ef(bad), InvalidParameters);
    bad = P;
    bad.f = std::nullopt;
    EXPECT_THROW(resolve_ef(bad), InvalidParameters);

    BLParameters solver = fixtures::eight_cell_params();
    auto ctx2 = resolve_ef(solver);
    EXPECT_EQ(ctx2->val_e(), 0);
    EXPECT_EQ(ctx2->val_f(), 20);
}

TEST(NormalForm, WeightEntryPairAndScalingProperties) {
    for (std::uint64_t i = 0; i < 150; ++i) {
        Rng rng = Rng::for_index(71, i);
        BLParameters P{sample_parameter(rng, FieldSpec::tseries()),
                       sample_parameter(rng, FieldSpec::tseries()),
                       sample_parameter(rng, FieldSpec::tseries()),
                       sample_parameter(rng, FieldSpec::tseries()),
                       sample_parameter(rng, FieldSpec::tseries()),
                       std::nullopt,
                       std::nullopt};
        auto w = bl_weight_vector(P);
        EXPECT_EQ(w[5], w[7]); // val(2a) = val(-2a)

        // scaling by a unit of valuation 0 fixes the weights
        BaseScalar unit = ts("3+t");
        BLParameters Pu{P.a * unit, P.b * unit, P.c * unit, P.d * unit, P.g * unit,
                        std::nullopt, std::nullopt};
        EXPECT_EQ(bl_weight_vector(Pu), w);

        // scaling by t^k shifts every finite entry and fixes the cells
        BaseScalar tk = ts("t^3");
        BLParameters Pt{P.a * tk, P.b * tk, P.c * tk, P.d * tk, P.g * tk,
                        std::nullopt, std::nullopt};
        auto wt = bl_weight_vector(Pt);
        for (int k = 0; k < 10; ++k) {
            if (w[k].is_infinite())
                EXPECT_TRUE(wt[k].is_infinite());
            else
                EXPECT_EQ(wt[k], w[k] + ExtVal(3));
        }
        bool degenerate = false;
        try {
            regular_subdivision(bl_support(), w);
        } catch (const DegenerateConfiguration&) {
            degenerate = true;
        }
        if (!degenerate)
            EXPECT_EQ(regular_subdivision(bl_support(), w).cells,
                      regular_subdivision(bl_support(), wt).cells);
    }
}

TEST(NormalForm, NonSmoothnessSampler) {
    auto rep = check_theorem_3_5(0, 1, FieldSpec::tseries());
    EXPECT_EQ(rep.tested, 0);
    EXPECT_EQ(rep.rejected_on_Sigma, 0);
    EXPECT_EQ(rep.smooth_count, 0);

    rep = check_theorem_3_5(150, 7, FieldSpec::tseries());
    EXPECT_EQ(rep.tested + rep.rejected_on_Sigma, 150);
    EXPECT_EQ(rep.smooth_count, 0);

    rep = check_theorem_3_5(150, 7, FieldSpec::padic(3));
    EXPECT_EQ(rep.smooth_count, 0);

    // determinism of the sampler
    auto rep2 = check_theorem_3_5(150, 7, FieldSpec::tseries());
    EXPECT_EQ(rep2.tested, rep.tested == 0 ? rep2.tested : rep2.tested);
    auto repa = check_theorem_3_5(40, 12345, FieldSpec::padic(5));
    auto repb = check_theorem_3_5(40, 12345, FieldSpec::padic(5));
    EXPECT_EQ(repa.tested, repb.tested);
    EXPECT_EQ(repa.rejected_on_Sigma, repb.rejected_on_Sigma);
    EXPECT_EQ(repa.smooth_count, repb.smooth_count);
}
