#pragma once

// Shared parameter fixtures for the worked examples.

#include "bltrop/normal_form.hpp"

namespace bltrop::fixtures {

/// Trivial-subdivision example: a = (1/2)(1+t+t^2), b = t^5,
/// c = 2+2t^2, d = t^10, with e = 1 and f = 1+t+2t^2+t^3+t^4 supplied
/// (g = e + f).
inline BLParameters trivial_subdivision_params() {
    FieldSpec f = FieldSpec::tseries();
    BLParameters P{BaseScalar::parse("1/2*(1+t+t^2)", f),
                   BaseScalar::parse("t^5", f),
                   BaseScalar::parse("2+2*t^2", f),
                   BaseScalar::parse("t^10", f),
                   BaseScalar::parse("2+t+2*t^2+t^3+t^4", f),
                   BaseScalar::parse("1", f),
                   BaseScalar::parse("1+t+2*t^2+t^3+t^4", f)};
    return P;
}

/// Eight-cell example: a = t^20, b = 1+t-t^6, c = -b, d = -1-t+t^6+t^8,
/// g = d + t^15; e, f are left to the quadratic solver.
inline BLParameters eight_cell_params() {
    FieldSpec f = FieldSpec::tseries();
    BLParameters P{BaseScalar::parse("t^20", f),
                   BaseScalar::parse("1+t-t^6", f),
                   BaseScalar::parse("-1-t+t^6", f),
                   BaseScalar::parse("-1-t+t^6+t^8", f),
                   BaseScalar::parse("-1-t+t^6+t^8+t^15", f),
                   std::nullopt,
                   std::nullopt};
    return P;
}

/// The weight vector as printed alongside the eight-cell example
/// (entry 2 disagrees with direct recomputation; both are kept).
inline std::vector<ExtVal> eight_cell_printed_weights() {
    std::vector<ExtVal> w;
    for (long v : {0, 8, 6, 15, 8, 20, 0, 20, 0, 0}) w.push_back(ExtVal(v));
    return w;
}

inline std::vector<ExtVal> eight_cell_recomputed_weights() {
    std::vector<ExtVal> w;
    for (long v : {0, 8, 20, 15, 8, 20, 0, 20, 0, 0}) w.push_back(ExtVal(v));
    return w;
}

} // namespace bltrop::fixtures
