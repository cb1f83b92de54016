#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "bltrop/errors.hpp"
#include "bltrop/rational.hpp"

namespace bltrop {

/// Dense univariate polynomial over a field F (exact arithmetic).
/// Coefficients are stored by ascending power; the zero polynomial has
/// an empty coefficient vector.
template <class F>
class Poly {
public:
    Poly() = default;
    Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
    explicit Poly(const F& constant) : c_{constant} { trim(); }

    static Poly monomial(const F& coeff, std::size_t power) {
        std::vector<F> c(power + 1, F());
        c[power] = coeff;
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    /// Order of vanishing at the origin; -1 for the zero polynomial.
    long low_degree() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!(c_[i] == F())) return static_cast<long>(i);
        return -1;
    }

    const F& coeff(std::size_t i) const {
        static const F zero{};
        return i < c_.size() ? c_[i] : zero;
    }
    const std::vector<F>& coeffs() const { return c_; }

    const F& leading() const {
        if (is_zero()) throw std::logic_error("leading coefficient of 0");
        return c_.back();
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<F> r(std::max(a.c_.size(), b.c_.size()), F());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<F> r(std::max(a.c_.size(), b.c_.size()), F());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
        return Poly(std::move(r));
    }
    Poly operator-() const {
        std::vector<F> r(c_.size(), F());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = F() - c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<F> r(a.c_.size() + b.c_.size() - 1, F());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == F()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    friend Poly operator*(const F& s, const Poly& a) {
        std::vector<F> r(a.c_.size(), F());
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = s * a.c_[i];
        return Poly(std::move(r));
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Multiply by x^k.
    Poly shifted(std::size_t k) const {
        if (is_zero()) return Poly();
        std::vector<F> r(c_.size() + k, F());
        std::copy(c_.begin(), c_.end(), r.begin() + static_cast<long>(k));
        return Poly(std::move(r));
    }

    /// Divide by x^k; requires low_degree() >= k.
    Poly unshifted(std::size_t k) const {
        if (is_zero()) return Poly();
        if (low_degree() < static_cast<long>(k))
            throw std::logic_error("unshifted: not divisible by x^k");
        return Poly(std::vector<F>(c_.begin() + static_cast<long>(k), c_.end()));
    }

    /// Euclidean division: returns (quotient, remainder).
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
        Poly q, r = a;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            F f = r.leading() / b.leading();
            std::size_t k = static_cast<std::size_t>(r.degree() - b.degree());
            Poly term = Poly::monomial(f, k);
            q += term;
            r -= term * b;
        }
        return {q, r};
    }

    /// Exact quotient; throws if the division leaves a remainder.
    friend Poly div_exact(const Poly& a, const Poly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw std::logic_error("div_exact: not divisible");
        return q;
    }

    /// Monic gcd (1 for coprime inputs, 0 only if both inputs are 0).
    friend Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            a = divmod(a, b).second;
            std::swap(a, b);
        }
        if (a.is_zero()) return a;
        return (F(1) / a.leading()) * a; // F must be constructible from int 1
    }

    F eval(const F& x) const {
        F acc{};
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    /// Truncate modulo x^n.
    Poly truncated(std::size_t n) const {
        if (c_.size() <= n) return *this;
        return Poly(std::vector<F>(c_.begin(), c_.begin() + static_cast<long>(n)));
    }

    std::string str(const std::string& var, std::string (*coeff_str)(const F&)) const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == F()) continue;
            if (!out.empty()) out += " + ";
            out += coeff_str(c_[i]);
            if (i >= 1) out += "*" + var;
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == F()) c_.pop_back();
    }

    std::vector<F> c_;
};

using QPoly = Poly<Rat>;

/// Exact square root in F[x] if one exists (up to checking that the
/// square reproduces the input).  Works over any field of
/// characteristic 0 given a square root oracle for F.
inline std::optional<QPoly> poly_sqrt_exact(const QPoly& p) {
    if (p.is_zero()) return QPoly();
    if (p.degree() % 2 != 0 || p.low_degree() % 2 != 0) return std::nullopt;
    auto lead = rat_sqrt_exact(p.leading());
    if (!lead) return std::nullopt;
    long dh = p.degree() / 2;
    std::vector<Rat> s(static_cast<std::size_t>(dh) + 1, Rat(0));
    s[static_cast<std::size_t>(dh)] = *lead;
    // Determine coefficients from the top down: comparing x^(dh+k) terms
    // of s^2 with p gives a triangular system.
    for (long k = dh - 1; k >= 0; --k) {
        Rat acc(0);
        for (long i = k + 1; i < dh; ++i) {
            long j = dh + k - i;
            if (j > dh || j < 0) continue;
            acc += s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(j)];
        }
        s[static_cast<std::size_t>(k)] =
            (p.coeff(static_cast<std::size_t>(dh + k)) - acc) / (2 * *lead);
    }
    QPoly cand{std::vector<Rat>(s)};
    if (cand * cand == p) return cand;
    return std::nullopt;
}

} // namespace bltrop
