#pragma once

#include "bltrop/rational.hpp"

namespace bltrop {

/// Element of a prime field F_p.  The modulus travels with the value;
/// a default-constructed element is the 0 of an as-yet-unknown field
/// and adapts to the first operand it meets (so that Poly<Fp> can use
/// value-initialised zeroes).
class Fp {
public:
    Fp() : p_(0), v_(0) {}
    Fp(long p, const Int& v) : p_(p), v_(int_mod(v, p)) {}

    long modulus() const { return p_; }
    const Int& rep() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    static Fp zero(long p) { return Fp(p, 0); }
    static Fp one(long p) { return Fp(p, 1); }

    friend Fp operator+(const Fp& a, const Fp& b) {
        long p = a.merged(b);
        return p == 0 ? Fp() : Fp(p, a.v_ + b.v_);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        long p = a.merged(b);
        return p == 0 ? Fp() : Fp(p, a.v_ - b.v_);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        long p = a.merged(b);
        return p == 0 ? Fp() : Fp(p, a.v_ * b.v_);
    }
    friend Fp operator/(const Fp& a, const Fp& b) {
        long p = a.merged(b);
        if (b.v_ == 0) throw DivisionByZero("division by zero in F_p");
        return Fp(p, a.v_ * int_mod_inverse(b.v_, p));
    }
    Fp operator-() const { return p_ == 0 ? Fp() : Fp(p_, -v_); }

    friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return a.v_ != b.v_; }

    std::string str() const { return v_.str(); }

private:
    // 0 means "both operands are field-less zeroes".
    long merged(const Fp& other) const {
        if (p_ != 0 && other.p_ != 0 && p_ != other.p_)
            throw BackendMismatch("mixed prime fields");
        return p_ != 0 ? p_ : other.p_;
    }

    long p_;
    Int v_;
};

} // namespace bltrop
