#pragma once

#include <optional>
#include <vector>

#include "bltrop/scalar.hpp"

namespace bltrop {

/// Window approximation of a valued-field element: the element is
/// known modulo base^end, where "base" is t or the prime p.
///
///   TSeries: x = sum_i c[i] * t^(lead+i) + O(t^end)
///   Padic:   x = p^lead * unit + O(p^end),  0 <= unit < p^(end-lead)
///
/// The window is empty ("undetermined") when every retained digit is
/// zero, i.e. all we know is x = O(base^end).  Arithmetic propagates
/// the window ends exactly, so a determined leading digit is always a
/// true statement about the exact element.
class Approx {
public:
    static Approx undetermined(const FieldSpec& f, long end) {
        Approx a;
        a.field_ = f;
        a.lead_ = end;
        a.end_ = end;
        return a;
    }

    /// Expand an exact scalar to absolute precision `end`.
    static Approx from_scalar(const BaseScalar& s, long end) {
        const FieldSpec& f = s.field();
        if (s.is_zero()) return undetermined(f, end);
        if (f.kind == Backend::TSeries) {
            long a = s.numerator().low_degree();
            long b = s.denominator().low_degree();
            long lead = a - b;
            if (lead >= end) return undetermined(f, end);
            std::size_t n = static_cast<std::size_t>(end - lead);
            QPoly nu = s.numerator().unshifted(static_cast<std::size_t>(a));
            QPoly de = s.denominator().unshifted(static_cast<std::size_t>(b));
            // power series inverse of the unit part of the denominator
            std::vector<Rat> inv(n, Rat(0));
            inv[0] = Rat(1) / de.coeff(0);
            for (std::size_t k = 1; k < n; ++k) {
                Rat acc(0);
                for (std::size_t i = 1; i <= k; ++i) acc += de.coeff(i) * inv[k - i];
                inv[k] = -acc / de.coeff(0);
            }
            std::vector<Rat> c(n, Rat(0));
            for (std::size_t i = 0; i < n; ++i) {
                Rat acc(0);
                for (std::size_t j = 0; j <= i; ++j) acc += nu.coeff(j) * inv[i - j];
                c[i] = acc;
            }
            Approx r;
            r.field_ = f;
            r.lead_ = lead;
            r.end_ = end;
            r.tc_ = std::move(c);
            r.normalize();
            return r;
        }
        // p-adic
        Rat q = s.rational();
        long p = f.prime;
        long w = 0;
        Int a = num(q), b = den(q);
        while (a % p == 0) {
            a /= p;
            ++w;
        }
        while (b % p == 0) {
            b /= p;
            --w;
        }
        if (w >= end) return undetermined(f, end);
        Int mod = int_pow(Int(p), static_cast<unsigned long>(end - w));
        Approx r;
        r.field_ = f;
        r.lead_ = w;
        r.end_ = end;
        r.pu_ = int_mod(a * int_mod_inverse(b, mod), mod);
        r.normalize();
        return r;
    }

    const FieldSpec& field() const { return field_; }
    long end() const { return end_; }

    bool determined() const {
        return field_.kind == Backend::TSeries ? !tc_.empty() : pu_ != 0;
    }

    /// Exact valuation if the window pins it down.
    std::optional<long> val() const { return determined() ? std::optional<long>(lead_) : std::nullopt; }

    friend Approx operator+(const Approx& a, const Approx& b) {
        a.check(b);
        Approx r;
        r.field_ = a.field_;
        r.end_ = std::min(a.end_, b.end_);
        long lead = std::min(std::min(a.lead_, b.lead_), r.end_);
        r.lead_ = lead;
        if (a.field_.kind == Backend::TSeries) {
            if (lead < r.end_) {
                r.tc_.assign(static_cast<std::size_t>(r.end_ - lead), Rat(0));
                a.add_into(r.tc_, lead);
                b.add_into(r.tc_, lead);
            }
        } else {
            Int mod = int_pow(Int(a.field_.prime), static_cast<unsigned long>(r.end_ - lead));
            Int va = a.pu_ * int_pow(Int(a.field_.prime), static_cast<unsigned long>(a.lead_ - lead));
            Int vb = b.pu_ * int_pow(Int(a.field_.prime), static_cast<unsigned long>(b.lead_ - lead));
            r.pu_ = int_mod(va + vb, mod);
        }
        r.normalize();
        return r;
    }

    Approx operator-() const {
        Approx r = *this;
        if (field_.kind == Backend::TSeries) {
            for (auto& c : r.tc_) c = -c;
        } else if (r.pu_ != 0) {
            Int mod = int_pow(Int(field_.prime), static_cast<unsigned long>(end_ - lead_));
            r.pu_ = int_mod(-r.pu_, mod);
        }
        return r;
    }

    friend Approx operator-(const Approx& a, const Approx& b) { return a + (-b); }

    friend Approx operator*(const Approx& a, const Approx& b) {
        a.check(b);
        long la = a.eff_lead(), lb = b.eff_lead();
        Approx r;
        r.field_ = a.field_;
        r.end_ = std::min(a.end_ + lb, b.end_ + la);
        r.lead_ = la + lb;
        if (!a.determined() || !b.determined()) {
            r.lead_ = r.end_;
            return r;
        }
        if (a.field_.kind == Backend::TSeries) {
            std::size_t n = static_cast<std::size_t>(r.end_ - r.lead_);
            r.tc_.assign(n, Rat(0));
            for (std::size_t i = 0; i < a.tc_.size() && i < n; ++i) {
                if (a.tc_[i] == 0) continue;
                for (std::size_t j = 0; j < b.tc_.size() && i + j < n; ++j)
                    r.tc_[i + j] += a.tc_[i] * b.tc_[j];
            }
        } else {
            Int mod = int_pow(Int(a.field_.prime), static_cast<unsigned long>(r.end_ - r.lead_));
            r.pu_ = int_mod(a.pu_ * b.pu_, mod);
        }
        r.normalize();
        return r;
    }

    /// Division; the divisor's valuation must be determined.
    friend Approx operator/(const Approx& a, const Approx& b) {
        a.check(b);
        if (!b.determined()) throw PrecisionExceeded("division by an undetermined value");
        long vb = b.lead_;
        Approx r;
        r.field_ = a.field_;
        r.end_ = std::min(a.end_ - vb, a.eff_lead() + b.end_ - 2 * vb);
        r.lead_ = a.eff_lead() - vb;
        if (!a.determined()) {
            r.lead_ = r.end_;
            return r;
        }
        if (a.field_.kind == Backend::TSeries) {
            std::size_t n = static_cast<std::size_t>(r.end_ - r.lead_);
            std::vector<Rat> inv(n, Rat(0));
            inv[0] = Rat(1) / b.tc_[0];
            for (std::size_t k = 1; k < n; ++k) {
                Rat acc(0);
                for (std::size_t i = 1; i <= k && i < b.tc_.size(); ++i)
                    acc += b.tc_[i] * inv[k - i];
                inv[k] = -acc / b.tc_[0];
            }
            r.tc_.assign(n, Rat(0));
            for (std::size_t i = 0; i < a.tc_.size() && i < n; ++i) {
                if (a.tc_[i] == 0) continue;
                for (std::size_t j = 0; j + i < n && j < inv.size(); ++j)
                    r.tc_[i + j] += a.tc_[i] * inv[j];
            }
        } else {
            Int mod = int_pow(Int(a.field_.prime), static_cast<unsigned long>(r.end_ - r.lead_));
            r.pu_ = int_mod(a.pu_ * int_mod_inverse(int_mod(b.pu_, mod), mod), mod);
        }
        r.normalize();
        return r;
    }

    /// Retained digits as rationals, lowest power first (for TSeries the
    /// window coefficients, for Padic the base-p digits of the unit).
    std::vector<Rat> digits() const {
        if (field_.kind == Backend::TSeries) return tc_;
        std::vector<Rat> d;
        Int u = pu_;
        for (long i = lead_; i < end_ && u != 0; ++i) {
            d.push_back(Rat(u % field_.prime));
            u /= field_.prime;
        }
        return d;
    }

    long lead() const { return lead_; }

private:
    void check(const Approx& o) const {
        if (!(field_ == o.field_)) throw BackendMismatch();
    }

    // lead for error propagation: an undetermined window still promises
    // val >= end.
    long eff_lead() const { return determined() ? lead_ : end_; }

    void add_into(std::vector<Rat>& acc, long acc_lead) const {
        for (std::size_t i = 0; i < tc_.size(); ++i) {
            std::size_t k = static_cast<std::size_t>(lead_ - acc_lead) + i;
            if (k < acc.size()) acc[k] += tc_[i];
        }
    }

    void normalize() {
        if (field_.kind == Backend::TSeries) {
            std::size_t strip = 0;
            while (strip < tc_.size() && tc_[strip] == 0) ++strip;
            if (strip > 0) tc_.erase(tc_.begin(), tc_.begin() + static_cast<long>(strip));
            lead_ += static_cast<long>(strip);
            if (tc_.empty()) lead_ = end_;
            while (!tc_.empty() && static_cast<long>(tc_.size()) > end_ - lead_) tc_.pop_back();
        } else {
            if (pu_ == 0) {
                lead_ = end_;
                return;
            }
            while (pu_ % field_.prime == 0) {
                pu_ /= field_.prime;
                ++lead_;
            }
            Int mod = int_pow(Int(field_.prime), static_cast<unsigned long>(end_ - lead_));
            pu_ = int_mod(pu_, mod);
            if (pu_ == 0) lead_ = end_;
        }
    }

    FieldSpec field_;
    long lead_ = 0;
    long end_ = 0;
    std::vector<Rat> tc_; // TSeries digits
    Int pu_ = 0;          // Padic unit
};

} // namespace bltrop
