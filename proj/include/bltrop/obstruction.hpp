#pragma once

#include <functional>
#include <map>
#include <set>

#include "bltrop/field_fp.hpp"
#include "bltrop/polynomial.hpp"

namespace bltrop {

/// Coefficient field descriptor for the obstruction computations:
/// the prime field (p = 0 for Q), optionally extended by one
/// transcendental lambda (elements are then rational functions).
template <class F>
struct FieldOps;

template <>
struct FieldOps<Rat> {
    static Rat from_int(long n) { return Rat(n); }
    static std::string str(const Rat& x) { return rat_to_string(x); }
    static long characteristic() { return 0; }
};

struct FpOps {
    long p;
    Fp from_int(long n) const { return Fp(p, n); }
};

/// Rational function in lambda over F, normalised only as far as
/// correctness needs (zero test on the numerator, cross-multiplied
/// equality); degrees stay tiny here.
template <class F>
struct LamRat {
    Poly<F> num, den; // den nonzero

    LamRat() : num(), den() {}
    LamRat(Poly<F> n, Poly<F> d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw DivisionByZero("zero denominator in F(lambda)");
        if (num.is_zero()) den = one_poly(den);
    }
    static LamRat from_poly(Poly<F> p) {
        LamRat r;
        if (!p.is_zero()) {
            F one = p.leading() / p.leading();
            r = LamRat(std::move(p), Poly<F>(one));
        }
        return r;
    }

    static Poly<F> one_poly(const Poly<F>& nonzero) {
        F one = nonzero.leading() / nonzero.leading();
        return Poly<F>(one);
    }

    bool is_zero() const { return num.is_zero(); }

    friend LamRat operator+(const LamRat& a, const LamRat& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        return LamRat(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend LamRat operator-(const LamRat& a, const LamRat& b) { return a + (-b); }
    LamRat operator-() const {
        LamRat r = *this;
        r.num = -r.num;
        return r;
    }
    friend LamRat operator*(const LamRat& a, const LamRat& b) {
        if (a.is_zero() || b.is_zero()) return LamRat();
        return LamRat(a.num * b.num, a.den * b.den);
    }
    friend LamRat operator/(const LamRat& a, const LamRat& b) {
        if (b.is_zero()) throw DivisionByZero("division by zero in F(lambda)");
        if (a.is_zero()) return LamRat();
        return LamRat(a.num * b.den, a.den * b.num);
    }
    friend bool operator==(const LamRat& a, const LamRat& b) {
        if (a.is_zero()) return b.is_zero();
        if (b.is_zero()) return false;
        return a.num * b.den == b.num * a.den;
    }

    /// As a polynomial (requires a constant denominator after exact
    /// division, which holds for every instance in this artifact).
    Poly<F> as_poly() const {
        if (is_zero()) return Poly<F>();
        return div_exact(num, den);
    }
};

/// Homogeneous monomial in x0..x3; lex order with x3 > x2 > x1 > x0.
using Mono4 = std::array<int, 4>;

struct LexGreater {
    bool operator()(const Mono4& a, const Mono4& b) const {
        for (int i = 3; i >= 0; --i)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    }
};

inline bool mono_divides(const Mono4& a, const Mono4& b) {
    for (int i = 0; i < 4; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Mono4 mono_mul(const Mono4& a, const Mono4& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

inline Mono4 mono_div(const Mono4& a, const Mono4& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

inline std::string mono_str(const Mono4& m) {
    std::string s;
    for (int i = 0; i < 4; ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i);
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

/// Polynomial with scalar coefficients in F(lambda).
template <class F>
using ScalarPoly = std::map<Mono4, LamRat<F>, LexGreater>;

/// Polynomial whose coefficients are linear forms in the four
/// unknowns (alpha, beta, gamma, delta) over F(lambda).
template <class F>
using Linear4Poly = std::map<Mono4, std::array<LamRat<F>, 4>, LexGreater>;

/// Basis of a linear homogeneous ideal; the leading monomials must be
/// pairwise distinct variables, which already certifies a Groebner
/// basis for the lex order.
template <class F>
struct LinearIdealGB {
    std::vector<ScalarPoly<F>> gens;

    explicit LinearIdealGB(std::vector<ScalarPoly<F>> gs) : gens(std::move(gs)) {
        std::set<int> leading_vars;
        for (const auto& g : gens) {
            if (g.empty()) throw InvalidParameters("zero generator");
            for (const auto& [m, c] : g) {
                int deg = m[0] + m[1] + m[2] + m[3];
                if (deg != 1) throw InvalidParameters("generators must be linear forms");
            }
            const Mono4& lm = g.begin()->first;
            int var = -1;
            for (int i = 0; i < 4; ++i)
                if (lm[i] == 1) var = i;
            if (!leading_vars.insert(var).second)
                throw InvalidParameters("leading monomials are not pairwise coprime");
        }
    }
};

/// Four degree-3 monomials (the support of the initial form).
struct SupportSet {
    std::array<Mono4, 4> monomials;

    SupportSet(std::array<Mono4, 4> ms) : monomials(ms) {
        for (int i = 0; i < 4; ++i) {
            if (monomials[i][0] + monomials[i][1] + monomials[i][2] + monomials[i][3] != 3)
                throw InvalidParameters("support monomials must have degree 3");
            for (int j = i + 1; j < 4; ++j)
                if (monomials[i] == monomials[j])
                    throw InvalidParameters("support monomials must be distinct");
        }
    }
};

template <class F>
struct DivisionOutcome {
    Linear4Poly<F> remainder;
    std::vector<Linear4Poly<F>> quotients; // one per generator
};

/// Multivariate division of alpha m1 + beta m2 + gamma m3 + delta m4
/// by the Groebner basis, tracking the quotients so the division
/// identity can be re-expanded and checked exactly.
template <class F>
DivisionOutcome<F> divide_support_combination(const LinearIdealGB<F>& gb,
                                              const SupportSet& support) {
    DivisionOutcome<F> out;
    out.quotients.resize(gb.gens.size());
    Linear4Poly<F> work;
    for (int k = 0; k < 4; ++k) {
        std::array<LamRat<F>, 4> unit{};
        const auto& some = gb.gens.front().begin()->second;
        F one = some.den.leading() / some.den.leading();
        unit[static_cast<std::size_t>(k)] = LamRat<F>::from_poly(Poly<F>(one));
        if (!work.emplace(support.monomials[static_cast<std::size_t>(k)], unit).second)
            throw std::logic_error("duplicate support monomial");
    }

    auto add_term = [](Linear4Poly<F>& poly, const Mono4& m, const std::array<LamRat<F>, 4>& c) {
        auto it = poly.find(m);
        if (it == poly.end()) {
            poly.emplace(m, c);
            return;
        }
        bool zero = true;
        for (int k = 0; k < 4; ++k) {
            it->second[k] = it->second[k] + c[k];
            if (!it->second[k].is_zero()) zero = false;
        }
        if (zero) poly.erase(it);
    };

    for (;;) {
        // leading reducible term (maps iterate in descending lex order)
        bool reduced_one = false;
        for (auto it = work.begin(); it != work.end() && !reduced_one; ++it) {
            for (std::size_t gi = 0; gi < gb.gens.size(); ++gi) {
                const auto& g = gb.gens[gi];
                const Mono4& lm = g.begin()->first;
                if (!mono_divides(lm, it->first)) continue;
                Mono4 shift = mono_div(it->first, lm);
                std::array<LamRat<F>, 4> q{};
                for (int k = 0; k < 4; ++k) q[k] = it->second[k] / g.begin()->second;
                add_term(out.quotients[gi], shift, q);
                // subtract q * shift * g
                std::array<LamRat<F>, 4> negq{};
                for (int k = 0; k < 4; ++k) negq[k] = -q[k];
                for (const auto& [gm, gc] : g) {
                    std::array<LamRat<F>, 4> contrib{};
                    for (int k = 0; k < 4; ++k) contrib[k] = negq[k] * gc;
                    add_term(work, mono_mul(shift, gm), contrib);
                }
                reduced_one = true;
                break;
            }
        }
        if (!reduced_one) break;
    }
    out.remainder = std::move(work);
    return out;
}

/// Expand sum_i quotient_i * g_i + remainder and compare with the
/// original support combination (exact division identity).
template <class F>
bool verify_division(const LinearIdealGB<F>& gb, const SupportSet& support,
                     const DivisionOutcome<F>& d) {
    Linear4Poly<F> acc = d.remainder;
    auto add_term = [](Linear4Poly<F>& poly, const Mono4& m, const std::array<LamRat<F>, 4>& c) {
        auto it = poly.find(m);
        if (it == poly.end()) {
            poly.emplace(m, c);
        } else {
            for (int k = 0; k < 4; ++k) it->second[k] = it->second[k] + c[k];
        }
        it = poly.find(m);
        bool zero = true;
        for (int k = 0; k < 4; ++k)
            if (!it->second[k].is_zero()) zero = false;
        if (zero) poly.erase(it);
    };
    for (std::size_t gi = 0; gi < gb.gens.size(); ++gi) {
        for (const auto& [qm, qc] : d.quotients[gi])
            for (const auto& [gm, gc] : gb.gens[gi]) {
                std::array<LamRat<F>, 4> contrib{};
                for (int k = 0; k < 4; ++k) contrib[k] = qc[k] * gc;
                add_term(acc, mono_mul(qm, gm), contrib);
            }
    }
    // acc must equal the original combination
    const auto& some = gb.gens.front().begin()->second;
    F one = some.den.leading() / some.den.leading();
    for (int k = 0; k < 4; ++k) {
        auto it = acc.find(support.monomials[static_cast<std::size_t>(k)]);
        if (it == acc.end()) return false;
        for (int j = 0; j < 4; ++j) {
            LamRat<F> expect =
                j == k ? LamRat<F>::from_poly(Poly<F>(one)) : LamRat<F>();
            if (!(it->second[j] == expect)) return false;
        }
        acc.erase(it);
    }
    return acc.empty();
}

/// Exact nullspace of the (monomials x unknowns) coefficient matrix
/// over F(lambda): returns (dimension, basis rows).
template <class F>
std::pair<int, std::vector<std::array<LamRat<F>, 4>>>
nullspace_of_remainder(const Linear4Poly<F>& remainder, const F& one) {
    std::vector<std::array<LamRat<F>, 4>> rows;
    for (const auto& [m, c] : remainder) rows.push_back(c);
    // Gaussian elimination over the rational function field
    std::vector<std::array<LamRat<F>, 4>> reduced;
    std::vector<int> pivot_col;
    for (auto row : rows) {
        for (std::size_t r = 0; r < reduced.size(); ++r) {
            int pc = pivot_col[r];
            if (row[pc].is_zero()) continue;
            LamRat<F> f = row[pc] / reduced[r][pc];
            for (int c = 0; c < 4; ++c) row[c] = row[c] - f * reduced[r][c];
        }
        int pc = -1;
        for (int c = 0; c < 4; ++c)
            if (!row[c].is_zero()) {
                pc = c;
                break;
            }
        if (pc >= 0) {
            reduced.push_back(row);
            pivot_col.push_back(pc);
        }
    }
    int rank = static_cast<int>(reduced.size());
    // back-substitute for a reduced echelon form
    for (std::size_t r = 0; r < reduced.size(); ++r) {
        LamRat<F> piv = reduced[r][pivot_col[r]];
        for (int c = 0; c < 4; ++c) reduced[r][c] = reduced[r][c] / piv;
    }
    for (std::size_t r = 0; r < reduced.size(); ++r)
        for (std::size_t r2 = 0; r2 < reduced.size(); ++r2) {
            if (r == r2) continue;
            LamRat<F> f = reduced[r2][pivot_col[r]];
            if (f.is_zero()) continue;
            for (int c = 0; c < 4; ++c)
                reduced[r2][c] = reduced[r2][c] - f * reduced[r][c];
        }
    std::vector<std::array<LamRat<F>, 4>> basis;
    std::array<bool, 4> is_pivot{};
    for (int pc : pivot_col) is_pivot[pc] = true;
    for (int freec = 0; freec < 4; ++freec) {
        if (is_pivot[freec]) continue;
        std::array<LamRat<F>, 4> v{};
        v[freec] = LamRat<F>::from_poly(Poly<F>(one)); // free variable = 1
        for (std::size_t r = 0; r < reduced.size(); ++r)
            v[pivot_col[r]] = -reduced[r][freec];
        basis.push_back(v);
    }
    return {4 - rank, basis};
}

/// Determinant of the 4x4 coefficient matrix (requires exactly four
/// remainder monomials), as an exact polynomial in lambda.
template <class F>
Poly<F> remainder_matrix_det(const Linear4Poly<F>& remainder) {
    if (remainder.size() != 4)
        throw InvalidParameters("determinant needs a 4x4 coefficient matrix");
    std::array<std::array<LamRat<F>, 4>, 4> m;
    std::size_t r = 0;
    for (const auto& [mono, c] : remainder) m[r++] = c;
    // cofactor expansion, division-free
    std::array<std::size_t, 4> idx{0, 1, 2, 3};
    LamRat<F> det;
    do {
        int parity = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (idx[i] > idx[j]) ++parity;
        LamRat<F> term = m[0][idx[0]] * m[1][idx[1]] * m[2][idx[2]] * m[3][idx[3]];
        det = (parity % 2 == 0) ? det + term : det - term;
    } while (std::next_permutation(idx.begin(), idx.end()));
    return det.is_zero() ? Poly<F>() : det.as_poly();
}

/// Factor the determinant as lambda^a (lambda+1)^b * rest and list the
/// roots: {0, -1} from the stripped factors plus any roots of `rest`
/// (exhaustive over F_p; rational-root search over Q).
template <class F>
struct DetRootReport {
    Poly<F> det;
    int mult_zero = 0;
    int mult_minus_one = 0;
    std::vector<std::string> roots; // as strings in the prime field
    bool extra_roots = false;       // roots outside {0, -1} exist (or rest non-constant)
};

template <class F>
DetRootReport<F> analyze_det_roots(Poly<F> det, const std::function<F(long)>& from_int,
                                   const std::function<std::string(const F&)>& to_str,
                                   long characteristic) {
    DetRootReport<F> rep;
    rep.det = det;
    if (det.is_zero()) {
        rep.extra_roots = true; // identically zero: every lambda drops rank
        return rep;
    }
    while (det.low_degree() > 0) {
        det = det.unshifted(1);
        ++rep.mult_zero;
    }
    Poly<F> lam_plus_1{std::vector<F>{from_int(1), from_int(1)}};
    for (;;) {
        auto [q, r] = divmod(det, lam_plus_1);
        if (!r.is_zero()) break;
        det = q;
        ++rep.mult_minus_one;
    }
    if (rep.mult_zero > 0) rep.roots.push_back("0");
    if (rep.mult_minus_one > 0) rep.roots.push_back(to_str(from_int(-1)));
    if (det.degree() > 0) {
        rep.extra_roots = false;
        if (characteristic > 0) {
            for (long v = 0; v < characteristic; ++v) {
                if (det.eval(from_int(v)) == F()) {
                    rep.roots.push_back(to_str(from_int(v)));
                    rep.extra_roots = true;
                }
            }
            // irreducible-over-F_p factors may still vanish in the
            // closure; any remaining degree means extra closure roots
            if (det.degree() > 0) rep.extra_roots = true;
        } else {
            rep.extra_roots = true; // degree > 0 over Q: closure roots exist
        }
    }
    return rep;
}

// ---- the three concrete instances ---------------------------------------

inline Mono4 mono_x0_cubed() { return {3, 0, 0, 0}; }

template <class F>
ScalarPoly<F> linear_form(const std::array<Poly<F>, 4>& coeffs) {
    ScalarPoly<F> p;
    for (int i = 0; i < 4; ++i) {
        if (coeffs[i].is_zero()) continue;
        Mono4 m{};
        m[i] = 1;
        p.emplace(m, LamRat<F>::from_poly(coeffs[i]));
    }
    return p;
}

enum class ObstructionType { ThreeI1, ThreeI2, ThreeI2Degenerate };

inline ObstructionType obstruction_type_from_string(const std::string& s) {
    if (s == "3I-1") return ObstructionType::ThreeI1;
    if (s == "3I-2") return ObstructionType::ThreeI2;
    if (s == "3I-2-degenerate") return ObstructionType::ThreeI2Degenerate;
    throw InvalidParameters("unknown obstruction type '" + s + "'");
}

inline SupportSet support_for(ObstructionType t) {
    const Mono4 x0_3{3, 0, 0, 0};
    const Mono4 x0_2x3{2, 0, 0, 1};
    const Mono4 x1x3_2{0, 1, 0, 2};
    const Mono4 x1_2x2{0, 2, 1, 0};
    const Mono4 x1x2x3{0, 1, 1, 1};
    if (t == ObstructionType::ThreeI1) return SupportSet{{x0_3, x0_2x3, x1x3_2, x1_2x2}};
    return SupportSet{{x0_3, x0_2x3, x1_2x2, x1x2x3}};
}

template <class F>
LinearIdealGB<F> gb_for(ObstructionType t, const std::function<F(long)>& from_int) {
    auto c = [&](long n) { return Poly<F>(from_int(n)); };
    if (t == ObstructionType::ThreeI2Degenerate) {
        Poly<F> lambda{std::vector<F>{F(), from_int(1)}};
        // x0 + lambda x1 - x3,  x0 - x1 - x2
        return LinearIdealGB<F>{{linear_form<F>({c(1), lambda, Poly<F>(), c(-1)}),
                                 linear_form<F>({c(1), c(-1), c(-1), Poly<F>()})}};
    }
    // x0 - x1 + x3,  x1 + x2
    return LinearIdealGB<F>{{linear_form<F>({c(1), c(-1), Poly<F>(), c(1)}),
                             linear_form<F>({Poly<F>(), c(1), c(1), Poly<F>()})}};
}

} // namespace bltrop
