#pragma once

#include <map>
#include <string>

#include "bltrop/expr.hpp"
#include "bltrop/extvalue.hpp"
#include "bltrop/polynomial.hpp"

namespace bltrop {

enum class Backend { TSeries, Padic };

/// Identifies a concrete valued field: rational functions in t with
/// the t-adic valuation, or rationals with the p-adic valuation.
struct FieldSpec {
    Backend kind = Backend::TSeries;
    long prime = 0; // only for Padic

    static FieldSpec tseries() { return {Backend::TSeries, 0}; }
    static FieldSpec padic(long p) {
        if (p < 2) throw InvalidParameters("prime must be >= 2");
        return {Backend::Padic, p};
    }

    bool operator==(const FieldSpec& o) const { return kind == o.kind && prime == o.prime; }

    /// Valuation of 2 in this field (0 unless residue characteristic 2).
    long val_of_two() const { return kind == Backend::Padic && prime == 2 ? 1 : 0; }

    std::string str() const {
        return kind == Backend::TSeries ? "tseries" : "padic(" + std::to_string(prime) + ")";
    }
};

inline long padic_val_int(Int n, long p) {
    if (n == 0) throw std::logic_error("padic_val_int(0)");
    long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

/// An exact element of the valued field.  TSeries elements are stored
/// as reduced rational functions num/den in t, so cancellation (and
/// hence the exact valuation) is always visible.
class BaseScalar {
public:
    BaseScalar() : field_(FieldSpec::tseries()), num_(QPoly()), den_(QPoly(Rat(1))) {}

    static BaseScalar tseries(QPoly num, QPoly den = QPoly(Rat(1))) {
        if (den.is_zero()) throw DivisionByZero("zero denominator");
        BaseScalar s;
        s.field_ = FieldSpec::tseries();
        s.num_ = std::move(num);
        s.den_ = std::move(den);
        s.reduce();
        return s;
    }

    static BaseScalar padic(const Rat& value, long p) {
        BaseScalar s;
        s.field_ = FieldSpec::padic(p);
        s.rat_ = value;
        return s;
    }

    static BaseScalar constant(const Rat& value, const FieldSpec& f) {
        if (f.kind == Backend::TSeries) return tseries(QPoly(value));
        return padic(value, f.prime);
    }

    static BaseScalar t_monomial(long k) {
        // t^k, k may be negative
        if (k >= 0) return tseries(QPoly::monomial(Rat(1), static_cast<std::size_t>(k)));
        return tseries(QPoly(Rat(1)), QPoly::monomial(Rat(1), static_cast<std::size_t>(-k)));
    }

    const FieldSpec& field() const { return field_; }

    bool is_zero() const {
        return field_.kind == Backend::TSeries ? num_.is_zero() : rat_ == 0;
    }

    ExtVal val() const {
        if (is_zero()) return ExtVal::infinity();
        if (field_.kind == Backend::TSeries)
            return ExtVal(Rat(num_.low_degree() - den_.low_degree()));
        long v = 0;
        if (num(rat_) != 0) v = padic_val_int(num(rat_), field_.prime);
        return ExtVal(Rat(v - padic_val_int(den(rat_), field_.prime)));
    }

    friend BaseScalar operator+(const BaseScalar& a, const BaseScalar& b) {
        a.check(b);
        if (a.field_.kind == Backend::Padic) return padic(a.rat_ + b.rat_, a.field_.prime);
        return tseries(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend BaseScalar operator-(const BaseScalar& a, const BaseScalar& b) {
        a.check(b);
        if (a.field_.kind == Backend::Padic) return padic(a.rat_ - b.rat_, a.field_.prime);
        return tseries(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend BaseScalar operator*(const BaseScalar& a, const BaseScalar& b) {
        a.check(b);
        if (a.field_.kind == Backend::Padic) return padic(a.rat_ * b.rat_, a.field_.prime);
        return tseries(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend BaseScalar operator/(const BaseScalar& a, const BaseScalar& b) {
        a.check(b);
        if (b.is_zero()) throw DivisionByZero();
        if (a.field_.kind == Backend::Padic) return padic(a.rat_ / b.rat_, a.field_.prime);
        return tseries(a.num_ * b.den_, a.den_ * b.num_);
    }
    BaseScalar operator-() const {
        if (field_.kind == Backend::Padic) return padic(-rat_, field_.prime);
        return tseries(-num_, den_);
    }

    friend bool operator==(const BaseScalar& a, const BaseScalar& b) {
        a.check(b);
        if (a.field_.kind == Backend::Padic) return a.rat_ == b.rat_;
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const BaseScalar& a, const BaseScalar& b) { return !(a == b); }

    // Exact accessors (TSeries)
    const QPoly& numerator() const { return num_; }
    const QPoly& denominator() const { return den_; }
    // Exact accessor (Padic)
    const Rat& rational() const { return rat_; }

    /// Canonical display form.
    std::string str() const {
        if (field_.kind == Backend::Padic) return rat_to_string(rat_);
        std::string n = num_.str("t", &rat_to_string);
        if (den_ == QPoly(Rat(1))) return n;
        return "(" + n + ")/(" + den_.str("t", &rat_to_string) + ")";
    }

    /// Parse a scalar literal, e.g. "1/2*(1+t+t^2)" or "-7/3".
    static BaseScalar parse(const std::string& text, const FieldSpec& f) {
        ExprPtr ast = ExprParser::parse(text);
        std::map<std::string, BaseScalar> env;
        if (f.kind == Backend::TSeries) env["t"] = t_monomial(1);
        std::function<BaseScalar(const Int&)> mk = [&f](const Int& n) {
            return BaseScalar::constant(Rat(n), f);
        };
        return eval_expr(*ast, env, mk);
    }

private:
    void check(const BaseScalar& o) const {
        if (!(field_ == o.field_)) throw BackendMismatch(field_.str() + " vs " + o.field_.str());
    }

    void reduce() {
        if (num_.is_zero()) {
            den_ = QPoly(Rat(1));
            return;
        }
        QPoly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = div_exact(num_, g);
            den_ = div_exact(den_, g);
        }
        Rat lc = den_.leading();
        if (lc != 1) {
            num_ = (Rat(1) / lc) * num_;
            den_ = (Rat(1) / lc) * den_;
        }
    }

    FieldSpec field_;
    QPoly num_, den_; // TSeries
    Rat rat_;         // Padic
};

} // namespace bltrop
