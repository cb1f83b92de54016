#pragma once

#include <array>
#include <vector>

#include "bltrop/extvalue.hpp"

namespace bltrop {

/// Point of tropical projective 3-space: four min-plus coordinates,
/// at least one finite, modulo adding a constant to all finite
/// entries.  Coordinates may be +infinity (boundary points).
struct TropPoint {
    std::array<ExtVal, 4> x;

    const ExtVal& operator[](std::size_t i) const { return x[i]; }
    ExtVal& operator[](std::size_t i) { return x[i]; }

    bool all_infinite() const {
        for (const auto& c : x)
            if (c.is_finite()) return false;
        return true;
    }

    /// Canonical representative: first finite coordinate set to 0.
    TropPoint normalized() const {
        if (all_infinite()) throw AllInfinite("tropical point with no finite coordinate");
        ExtVal base = ExtVal(0);
        for (const auto& c : x)
            if (c.is_finite()) {
                base = c;
                break;
            }
        TropPoint r = *this;
        for (auto& c : r.x)
            if (c.is_finite()) c = c - base;
        return r;
    }

    friend bool operator==(const TropPoint& a, const TropPoint& b) {
        return a.normalized().x == b.normalized().x;
    }
};

inline TropPoint make_point(ExtVal a, ExtVal b, ExtVal c, ExtVal d) {
    return TropPoint{{a, b, c, d}};
}

/// Min-plus polynomial on R^4/R1: homogeneous support (exponent
/// vectors of one total degree) with one tropical coefficient per
/// support point.
struct TropPolynomial {
    std::vector<std::array<int, 4>> support;
    std::vector<ExtVal> weights;

    long degree() const {
        if (support.empty()) return 0;
        long d = 0;
        for (int e : support.front()) d += e;
        return d;
    }
};

struct TropEvalResult {
    ExtVal value;
    std::vector<std::size_t> tight; // indices attaining the minimum
};

/// Evaluate min over terms of weight + <exponent, x>.  Terms whose
/// weight is infinite, or that read an infinite coordinate with a
/// positive exponent, evaluate to infinity and cannot be tight.
inline TropEvalResult trop_eval(const TropPolynomial& F, const TropPoint& x) {
    TropEvalResult r{ExtVal::infinity(), {}};
    for (std::size_t i = 0; i < F.support.size(); ++i) {
        if (F.weights[i].is_infinite()) continue;
        bool excluded = false;
        Rat acc = F.weights[i].value();
        for (std::size_t j = 0; j < 4; ++j) {
            int e = F.support[i][j];
            if (e == 0) continue;
            if (x[j].is_infinite()) {
                excluded = true;
                break;
            }
            acc += e * x[j].value();
        }
        if (excluded) continue;
        ExtVal v(acc);
        if (v < r.value) {
            r.value = v;
            r.tight.clear();
            r.tight.push_back(i);
        } else if (v == r.value) {
            r.tight.push_back(i);
        }
    }
    return r;
}

/// Tropical vanishing: the minimum is attained at least twice.
inline bool on_hypersurface(const TropPolynomial& F, const TropPoint& x) {
    return trop_eval(F, x).tight.size() >= 2;
}

} // namespace bltrop
