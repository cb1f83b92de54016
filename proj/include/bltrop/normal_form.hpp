#pragma once

#include "bltrop/quadext.hpp"
#include "bltrop/subdivision.hpp"

namespace bltrop {

/// Parameters (a, b, c, d, g) of a cubic in Brundu-Logar normal form,
/// optionally with the auxiliary pair (e, f) satisfying e + f = g and
/// e f = a c supplied exactly.
struct BLParameters {
    BaseScalar a, b, c, d, g;
    std::optional<BaseScalar> e, f;

    const FieldSpec& field() const { return a.field(); }
};

/// The ten coefficients of the normal-form cubic in table order,
/// paired with their exponent vectors (= bl_support()).
struct BLCubic {
    std::array<BaseScalar, 10> coeffs;
    LatticeConfig support = bl_support();
};

inline BLCubic bl_coefficients(const BLParameters& P) {
    const auto& [a, b, c, d, g] = std::tie(P.a, P.b, P.c, P.d, P.g);
    BLCubic F;
    F.coeffs = {
        -a - b + c, // (0,1,0,2)
        b + g,      // (1,1,0,1)
        -a - b - c, // (1,0,1,1)
        d - g,      // (0,2,0,1)
        a + c - d,  // (0,1,1,1)
        a + a,      // (2,1,0,0)
        b - g,      // (2,0,1,0)
        -a - a,     // (1,2,0,0)
        d + g,      // (1,1,1,0)
        a - c - d   // (1,0,2,0)
    };
    return F;
}

/// The 11-factor discriminantal product sigma; the normal form is
/// valid exactly off its vanishing locus.
inline BaseScalar sigma(const BLParameters& P) {
    const BaseScalar &a = P.a, &b = P.b, &c = P.c, &d = P.d, &g = P.g;
    auto k = [&](long v) { return BaseScalar::constant(Rat(v), P.field()); };
    BaseScalar s = c;
    s = s * (a + b - c);
    s = s * (k(2) * a + b - d);
    s = s * (a - c - d);
    s = s * (a + c + g);
    s = s * (a + c - g);
    s = s * (k(4) * a * c - g * g);
    s = s * (a * a + a * c - k(2) * a * d + a * g + d * d - d * g);
    s = s * (a * a + k(2) * a * b + a * c - a * g + b * b - b * g);
    s = s * (k(4) * a * a + k(3) * a * b - k(4) * a * c - k(3) * a * d - b * c - k(2) * b * d +
             b * g + c * d + d * g);
    s = s * (k(4) * a * a * a + k(4) * a * a * b + k(8) * a * a * c - k(4) * a * a * d +
             a * b * b - k(4) * a * b * c - k(2) * a * b * d + k(2) * a * b * g +
             k(4) * a * c * c + k(4) * a * c * d + a * d * d + k(2) * a * d * g + b * b * c +
             b * b * g + k(2) * b * c * d - k(2) * b * c * g + c * d * d - k(2) * c * d * g -
             d * d * g);
    return s;
}

inline bool in_Sigma(const BLParameters& P) { return sigma(P).is_zero(); }

/// Weight vector: componentwise valuation of the ten coefficients.
inline std::vector<ExtVal> bl_weight_vector(const BLParameters& P) {
    BLCubic F = bl_coefficients(P);
    std::vector<ExtVal> w;
    w.reserve(10);
    for (const auto& coeff : F.coeffs) w.push_back(coeff.val());
    return w;
}

/// Tropicalization of the normal-form cubic as a min-plus polynomial.
inline TropPolynomial bl_trop_polynomial(const BLParameters& P) {
    BLCubic F = bl_coefficients(P);
    TropPolynomial T;
    T.support = F.support.points;
    T.weights.reserve(10);
    for (const auto& coeff : F.coeffs) T.weights.push_back(coeff.val());
    return T;
}

/// Resolve the auxiliary roots: validate a supplied pair exactly, or
/// solve the quadratic X^2 - gX + ac.
inline QuadExtCtxPtr resolve_ef(const BLParameters& P, long rel_precision = 64,
                                long hard_cap = 4096) {
    if (P.e.has_value() != P.f.has_value())
        throw InvalidParameters("supply both of e, f or neither");
    if (P.e) {
        if (!(*P.e + *P.f == P.g)) throw InvalidParameters("supplied e, f violate e + f = g");
        if (!(*P.e * *P.f == P.a * P.c))
            throw InvalidParameters("supplied e, f violate e*f = a*c");
        return QuadExtContext::from_exact_roots(*P.e, *P.f);
    }
    return solve_quadratic_ef(P.a, P.c, P.g, rel_precision, hard_cap);
}

/// Report of the randomized non-smoothness check: samples parameter
/// tuples, discards those on Sigma, and counts tropically smooth
/// subdivisions among the rest (always zero when val(2) = 0).
struct SmoothSampleReport {
    long samples = 0;
    long tested = 0;
    long rejected_on_Sigma = 0;
    long smooth_count = 0;
};

inline BaseScalar sample_parameter(Rng& rng, const FieldSpec& f) {
    // degree <= 6 digits in {-9..9}; the constant digit is forced
    // nonzero half of the time so valuation patterns vary
    std::array<long, 7> digit{};
    for (auto& d : digit) d = rng.range(-9, 9);
    if (rng.coin()) {
        while (digit[0] == 0) digit[0] = rng.range(-9, 9);
    }
    if (f.kind == Backend::TSeries) {
        std::vector<Rat> c(7);
        for (int i = 0; i < 7; ++i) c[static_cast<std::size_t>(i)] = Rat(digit[i]);
        return BaseScalar::tseries(QPoly(std::move(c)));
    }
    Rat v(0), pk(1);
    for (int i = 0; i < 7; ++i) {
        v += digit[i] * pk;
        pk *= f.prime;
    }
    return BaseScalar::padic(v, f.prime);
}

inline SmoothSampleReport check_theorem_3_5(long samples, std::uint64_t seed,
                                            const FieldSpec& field) {
    SmoothSampleReport rep;
    rep.samples = samples;
    LatticeConfig support = bl_support();
    for (long i = 0; i < samples; ++i) {
        Rng rng = Rng::for_index(seed, static_cast<std::uint64_t>(i));
        BLParameters P{sample_parameter(rng, field), sample_parameter(rng, field),
                       sample_parameter(rng, field), sample_parameter(rng, field),
                       sample_parameter(rng, field), std::nullopt, std::nullopt};
        if (in_Sigma(P)) {
            ++rep.rejected_on_Sigma;
            continue;
        }
        ++rep.tested;
        if (is_tropically_smooth(support, bl_weight_vector(P))) ++rep.smooth_count;
    }
    return rep;
}

} // namespace bltrop
