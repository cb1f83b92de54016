#pragma once

#include <compare>
#include <string>
#include <vector>

#include "bltrop/rational.hpp"

namespace bltrop {

/// An exact rational extended by +infinity.  This is the codomain of
/// every valuation map and doubles as the scalar of the min-plus
/// semiring (tropical addition = min, tropical multiplication = +,
/// with infinity absorbing under +).
class ExtVal {
public:
    ExtVal() : finite_(true), value_(0) {}
    ExtVal(const Rat& v) : finite_(true), value_(v) {}
    ExtVal(long v) : finite_(true), value_(v) {}
    ExtVal(int v) : finite_(true), value_(v) {}

    static ExtVal infinity() {
        ExtVal v;
        v.finite_ = false;
        v.value_ = 0;
        return v;
    }

    bool is_finite() const { return finite_; }
    bool is_infinite() const { return !finite_; }

    /// Finite value; undefined behaviour guarded by an exception.
    const Rat& value() const {
        if (!finite_) throw std::logic_error("ExtVal: value() on infinity");
        return value_;
    }

    friend ExtVal operator+(const ExtVal& a, const ExtVal& b) {
        if (!a.finite_ || !b.finite_) return infinity();
        return ExtVal(a.value_ + b.value_);
    }

    /// Finite subtraction; infinity - finite stays infinity.  The
    /// combination infinity - infinity is undefined and rejected.
    friend ExtVal operator-(const ExtVal& a, const ExtVal& b) {
        if (!b.finite_) throw std::logic_error("ExtVal: subtracting infinity");
        if (!a.finite_) return infinity();
        return ExtVal(a.value_ - b.value_);
    }

    ExtVal& operator+=(const ExtVal& o) { return *this = *this + o; }

    friend ExtVal operator*(const Rat& c, const ExtVal& a) {
        if (!a.finite_) return infinity();
        return ExtVal(c * a.value_);
    }

    friend bool operator==(const ExtVal& a, const ExtVal& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.value_ == b.value_;
    }
    friend bool operator!=(const ExtVal& a, const ExtVal& b) { return !(a == b); }

    /// Total order with infinity maximal.
    friend bool operator<(const ExtVal& a, const ExtVal& b) {
        if (!a.finite_) return false;
        if (!b.finite_) return true;
        return a.value_ < b.value_;
    }
    friend bool operator>(const ExtVal& a, const ExtVal& b) { return b < a; }
    friend bool operator<=(const ExtVal& a, const ExtVal& b) { return !(b < a); }
    friend bool operator>=(const ExtVal& a, const ExtVal& b) { return !(a < b); }

    friend ExtVal min(const ExtVal& a, const ExtVal& b) { return a < b ? a : b; }

    std::string str() const { return finite_ ? rat_to_string(value_) : "inf"; }

    static ExtVal parse(const std::string& s) {
        if (s == "inf" || s == "Inf" || s == "INF") return infinity();
        return ExtVal(rat_from_string(s));
    }

private:
    bool finite_;
    Rat value_;
};

using TropNumber = ExtVal;

inline ExtVal trop_zero() { return ExtVal::infinity(); } // additive identity (min)
inline ExtVal trop_one() { return ExtVal(0); }           // multiplicative identity (+)

} // namespace bltrop
