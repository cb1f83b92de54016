#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>

#include "bltrop/errors.hpp"

namespace bltrop {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

/// Canonical "p" or "p/q" form, matching the JSON wire format.
inline std::string rat_to_string(const Rat& q) {
    if (den(q) == 1) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

inline Rat rat_from_string(const std::string& s) {
    try {
        Rat q(s);
        return q;
    } catch (const std::exception&) {
        throw InvalidParameters("not a rational literal: '" + s + "'");
    }
}

/// Exact square root of an integer, if it is a perfect square.
inline std::optional<Int> int_sqrt_exact(const Int& n) {
    if (n < 0) return std::nullopt;
    Int r = boost::multiprecision::sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

/// Exact square root of a rational, if it is a square in Q.
inline std::optional<Rat> rat_sqrt_exact(const Rat& q) {
    if (q < 0) return std::nullopt;
    auto rn = int_sqrt_exact(num(q));
    if (!rn) return std::nullopt;
    auto rd = int_sqrt_exact(den(q));
    if (!rd) return std::nullopt;
    return Rat(*rn) / Rat(*rd);
}

inline Int int_pow(Int base, unsigned long e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e >= 0) return Rat(int_pow(num(base), e), int_pow(den(base), e));
    if (base == 0) throw DivisionByZero("0^negative");
    return Rat(int_pow(den(base), -e), int_pow(num(base), -e));
}

/// Floor division remainder in [0, m).
inline Int int_mod(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += boost::multiprecision::abs(m);
    return r;
}

/// Modular inverse; m must be > 1 and gcd(a, m) = 1.
inline Int int_mod_inverse(const Int& a, const Int& m) {
    Int t = 0, newt = 1;
    Int r = m, newr = int_mod(a, m);
    while (newr != 0) {
        Int q = r / newr;
        Int tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw DivisionByZero("not invertible modulo m");
    return int_mod(t, m);
}

} // namespace bltrop
