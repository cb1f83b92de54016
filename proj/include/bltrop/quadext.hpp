#pragma once

#include <memory>

#include "bltrop/series.hpp"

namespace bltrop {

namespace detail {

/// Square root mod an odd prime p (Tonelli-Shanks); input must be a
/// quadratic residue.
inline Int sqrt_mod_p(const Int& a0, long p) {
    Int a = int_mod(a0, p);
    if (a == 0) return 0;
    if (p % 4 == 3) {
        Int r = boost::multiprecision::powm(a, Int((p + 1) / 4), Int(p));
        return r;
    }
    // Tonelli-Shanks
    Int q = p - 1;
    unsigned long s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    Int z = 2;
    while (boost::multiprecision::powm(z, Int((p - 1) / 2), Int(p)) != Int(1))
        z += 1; // first non-residue
    Int m = s;
    Int c = boost::multiprecision::powm(z, q, Int(p));
    Int t = boost::multiprecision::powm(a, q, Int(p));
    Int r = boost::multiprecision::powm(a, (q + 1) / 2, Int(p));
    while (t != 1) {
        Int t2 = t;
        Int i = 0;
        while (t2 != 1) {
            t2 = int_mod(t2 * t2, p);
            i += 1;
        }
        Int b = c;
        for (Int j = 0; j < m - i - 1; ++j) b = int_mod(b * b, p);
        m = i;
        c = int_mod(b * b, p);
        t = int_mod(t * c, p);
        r = int_mod(r * b, p);
    }
    return r;
}

/// Legendre symbol via Euler's criterion (p odd).
inline int legendre(const Int& a0, long p) {
    Int a = int_mod(a0, p);
    if (a == 0) return 0;
    Int e = boost::multiprecision::powm(a, Int((p - 1) / 2), Int(p));
    return e == 1 ? 1 : -1;
}

/// Exact square root in the base field, when one exists.
inline std::optional<BaseScalar> field_sqrt_exact(const BaseScalar& s) {
    if (s.is_zero()) return BaseScalar::constant(Rat(0), s.field());
    if (s.field().kind == Backend::Padic) {
        auto r = rat_sqrt_exact(s.rational());
        if (!r) return std::nullopt;
        return BaseScalar::padic(*r, s.field().prime);
    }
    // sqrt(N/M) = sqrt(N*M)/M when N*M is a square in Q[t]
    auto root = poly_sqrt_exact(s.numerator() * s.denominator());
    if (!root) return std::nullopt;
    return BaseScalar::tseries(*root, s.denominator());
}

/// Residue digit of s at level m, i.e. the coefficient of t^m (resp.
/// p^m); requires val(s) >= m.  Returns an exact rational (for the
/// p-adic backend an integer in [0, p)).
inline Rat residue_digit(const BaseScalar& s, long m) {
    if (s.is_zero()) return Rat(0);
    Approx a = Approx::from_scalar(s, m + 1);
    auto v = a.val();
    if (!v) return Rat(0);
    if (*v < m) throw std::logic_error("residue_digit: valuation below level");
    return a.digits().at(0);
}

} // namespace detail

/// Context of the degree-2 extension by a root E of X^2 - g X + n,
/// together with refinable approximations of the two roots e, f
/// (e + f = g, e * f = n).  If the discriminant is a square in the
/// base field the roots are stored exactly.
class QuadExtContext {
public:
    /// Quadratic solver.  `rel_precision` is the number of correct
    /// relative digits initially carried by the root approximations;
    /// they refine on demand up to `hard_cap` absolute digits.
    static std::shared_ptr<const QuadExtContext>
    solve(const BaseScalar& g, const BaseScalar& n, long rel_precision = 64,
          long hard_cap = 4096) {
        auto ctx = std::make_shared<QuadExtContext>();
        ctx->g_ = g;
        ctx->n_ = n;
        ctx->cap_ = hard_cap;
        const FieldSpec& f = g.field();
        if (!(n.field() == f)) throw BackendMismatch();

        if (n.is_zero()) {
            ctx->set_exact_roots(g, BaseScalar::constant(Rat(0), f));
            return ctx;
        }
        BaseScalar four = BaseScalar::constant(Rat(4), f);
        BaseScalar disc = g * g - four * n;
        if (disc.is_zero()) {
            BaseScalar half = g / BaseScalar::constant(Rat(2), f);
            ctx->set_exact_roots(half, half);
            return ctx;
        }
        if (auto sq = detail::field_sqrt_exact(disc)) {
            BaseScalar two = BaseScalar::constant(Rat(2), f);
            ctx->set_exact_roots((g - *sq) / two, (g + *sq) / two);
            return ctx;
        }

        // Irrational roots: peel shared digits until the Newton polygon
        // of the residual quadratic Z^2 - gc Z + nc separates the roots
        // or a simple residue-root pair appears.
        BaseScalar shift = BaseScalar::constant(Rat(0), f);
        BaseScalar gc = g, nc = n;
        long first_level = -1;
        ExtVal vdisc = disc.val();
        long shift_budget = 8;
        if (vdisc.is_finite()) {
            Rat half_v = vdisc.value() / 2;
            shift_budget += static_cast<long>(num(half_v) / den(half_v)) + 2;
        }
        for (long round = 0;; ++round) {
            if (round > shift_budget)
                throw std::logic_error("quadratic solver failed to separate roots");
            if (nc.is_zero())
                throw std::logic_error("exact root escaped the square-root test");
            ExtVal vg = gc.val();
            ExtVal vn = nc.val();
            long vnl = long_val(vn);
            if (vg.is_finite() && 2 * long_val(vg) < vnl) {
                // two distinct valuations: Hensel from gc
                ctx->mode_ = Mode::SeparatedVals;
                ctx->shift_ = shift;
                ctx->gc_ = gc;
                ctx->nc_ = nc;
                long ve = long_val(vg), vf = vnl - long_val(vg);
                if (first_level >= 0) {
                    ctx->val_e_ = first_level;
                    ctx->val_f_ = first_level;
                } else {
                    ctx->val_e_ = ve;
                    ctx->val_f_ = vf;
                }
                break;
            }
            if (vnl % 2 != 0)
                throw UnsupportedExtension("roots would have fractional valuation");
            long m = vnl / 2;
            Rat gbar = detail::residue_digit(gc, m);
            Rat nbar = detail::residue_digit(nc, 2 * m);
            // roots of Y^2 - gbar Y + nbar over the residue field
            std::optional<std::pair<Rat, Rat>> simple;
            std::optional<Rat> repeated;
            if (f.kind == Backend::TSeries) {
                Rat delta = gbar * gbar - 4 * nbar;
                if (delta == 0) {
                    repeated = gbar / 2;
                } else if (auto sd = rat_sqrt_exact(delta)) {
                    simple = std::make_pair((gbar - *sd) / 2, (gbar + *sd) / 2);
                } else {
                    throw UnsupportedExtension(
                        "residue quadratic irreducible over the rational residue field");
                }
            } else if (f.prime == 2) {
                // over F_2 a unit quadratic is (Y+1)^2 or Y^2+Y+1
                throw UnsupportedExtension(
                    int_mod(num(gbar), 2) == 0
                        ? "repeated residue root in residue characteristic 2"
                        : "residue quadratic irreducible over F_2");
            } else {
                long p = f.prime;
                Int delta = int_mod(num(gbar) * num(gbar) - 4 * num(nbar), p);
                int chi = detail::legendre(delta, p);
                Int inv2 = int_mod_inverse(Int(2), p);
                if (chi == 0) {
                    repeated = Rat(int_mod(num(gbar) * inv2, p));
                } else if (chi == 1) {
                    Int s = detail::sqrt_mod_p(delta, p);
                    Int r1 = int_mod((num(gbar) - s) * inv2, p);
                    Int r2 = int_mod((num(gbar) + s) * inv2, p);
                    if (r1 > r2) std::swap(r1, r2);
                    simple = std::make_pair(Rat(r1), Rat(r2));
                } else {
                    throw UnsupportedExtension("residue quadratic irreducible over F_p");
                }
            }
            if (simple) {
                ctx->mode_ = Mode::ResidueRoots;
                ctx->shift_ = shift;
                ctx->gc_ = gc;
                ctx->nc_ = nc;
                ctx->level_ = m;
                ctx->r1_ = std::min(simple->first, simple->second);
                ctx->r2_ = std::max(simple->first, simple->second);
                ctx->val_e_ = first_level >= 0 ? first_level : m;
                ctx->val_f_ = ctx->val_e_;
                break;
            }
            // repeated residue root: absorb the shared digit and retry
            BaseScalar step =
                BaseScalar::constant(*repeated, f) *
                (f.kind == Backend::TSeries
                     ? BaseScalar::t_monomial(m)
                     : BaseScalar::constant(rat_pow(Rat(f.prime), m), f));
            if (first_level < 0) first_level = m;
            shift = shift + step;
            nc = step * step - gc * step + nc;
            gc = gc - BaseScalar::constant(Rat(2), f) * step;
        }
        ctx->rel_precision_ = rel_precision;
        ctx->refine_to_relative(rel_precision);
        return ctx;
    }

    /// Context from exactly known roots, keeping the caller's labels.
    static std::shared_ptr<const QuadExtContext>
    from_exact_roots(const BaseScalar& e, const BaseScalar& f) {
        auto ctx = std::make_shared<QuadExtContext>();
        ctx->g_ = e + f;
        ctx->n_ = e * f;
        ctx->mode_ = Mode::Exact;
        ctx->e_exact_ = e;
        ctx->f_exact_ = f;
        return ctx;
    }

    const BaseScalar& g() const { return g_; }
    const BaseScalar& n() const { return n_; }
    const FieldSpec& field() const { return g_.field(); }
    bool rational_split() const { return mode_ == Mode::Exact; }

    const BaseScalar& e_exact() const { return e_exact_; }
    const BaseScalar& f_exact() const { return f_exact_; }

    /// Exact valuations of the two roots (from the Newton polygon).
    long val_e() const { return val_e_; }
    long val_f() const { return val_f_; }

    /// Approximations of the roots with the current window.
    Approx e_approx() const { return e_approx_; }
    Approx f_approx() const { return f_approx_; }
    long current_end() const { return end_; }
    long hard_cap() const { return cap_; }

    /// Extend both root windows to absolute precision `end`.
    void refine_to(long end) const {
        if (mode_ == Mode::Exact) return;
        if (end <= end_) return;
        if (end > cap_) throw PrecisionExceeded("requested precision beyond the hard cap");
        compute_roots(end);
    }

    void refine_to_relative(long rel) const {
        if (mode_ == Mode::Exact) return;
        refine_to(std::max(val_e_, val_f_) + rel);
    }

private:
    enum class Mode { Exact, SeparatedVals, ResidueRoots };

    static long long_val(const ExtVal& v) {
        Rat q = v.value();
        if (den(q) != 1) throw std::logic_error("non-integer valuation");
        return static_cast<long>(num(q));
    }

    void set_exact_roots(BaseScalar r1, BaseScalar r2) {
        mode_ = Mode::Exact;
        // deterministic labelling: smaller valuation first, then the
        // canonical string as a tie break
        bool swap_them;
        ExtVal v1 = r1.val(), v2 = r2.val();
        if (v1 != v2)
            swap_them = v2 < v1;
        else
            swap_them = r2.str() < r1.str();
        if (swap_them) std::swap(r1, r2);
        e_exact_ = r1;
        f_exact_ = r2;
    }

    void compute_roots(long end) const {
        const FieldSpec& f = g_.field();
        long slack = 4 + std::max<long>(0, std::abs(val_e_)) + std::max<long>(0, std::abs(val_f_));
        long work_end = end + slack;
        Approx gA = Approx::from_scalar(g_, work_end);
        Approx gcA = Approx::from_scalar(gc_, work_end);
        Approx ncA = Approx::from_scalar(nc_, work_end);
        Approx two = Approx::from_scalar(BaseScalar::constant(Rat(2), f), work_end);
        Approx start = mode_ == Mode::SeparatedVals
                           ? gcA
                           : Approx::from_scalar(
                                 BaseScalar::constant(r1_, f) *
                                     (f.kind == Backend::TSeries
                                          ? BaseScalar::t_monomial(level_)
                                          : BaseScalar::constant(rat_pow(Rat(f.prime), level_), f)),
                                 work_end);
        Approx z = newton(start, gcA, ncA, two);
        Approx shiftA = Approx::from_scalar(shift_, work_end);
        e_approx_ = shiftA + z;
        f_approx_ = gA - e_approx_;
        end_ = std::min(end, std::min(e_approx_.end(), f_approx_.end()));
        if (e_approx_.val().value_or(val_e_) != val_e_ ||
            f_approx_.val().value_or(val_f_) != val_f_)
            throw std::logic_error("root approximation disagrees with the Newton polygon");
    }

    static Approx newton(Approx x, const Approx& g, const Approx& n, const Approx& two) {
        for (int iter = 0; iter < 64; ++iter) {
            Approx fx = x * x - g * x + n;
            Approx dfx = two * x - g;
            if (!fx.determined()) return x;
            x = x - fx / dfx;
        }
        throw PrecisionExceeded("Hensel iteration did not stabilise");
    }

    BaseScalar g_, n_;
    Mode mode_ = Mode::Exact;
    BaseScalar e_exact_, f_exact_;
    BaseScalar shift_, gc_, nc_;
    long level_ = 0;
    Rat r1_, r2_;
    long val_e_ = 0, val_f_ = 0;
    long cap_ = 4096;
    long rel_precision_ = 64;
    mutable Approx e_approx_ = Approx::undetermined(FieldSpec::tseries(), 0);
    mutable Approx f_approx_ = Approx::undetermined(FieldSpec::tseries(), 0);
    mutable long end_ = 0;

    friend class QuadExt;
};

using QuadExtCtxPtr = std::shared_ptr<const QuadExtContext>;

/// Element u + v E of the quadratic extension; u, v exact base
/// scalars.  Ring operations reduce by E^2 = g E - n; division goes
/// through the conjugate and the norm.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(QuadExtCtxPtr ctx, BaseScalar u, BaseScalar v)
        : ctx_(std::move(ctx)), u_(std::move(u)), v_(std::move(v)) {}

    static QuadExt from_base(const QuadExtCtxPtr& ctx, const BaseScalar& u) {
        return QuadExt(ctx, u, BaseScalar::constant(Rat(0), ctx->field()));
    }
    static QuadExt root_e(const QuadExtCtxPtr& ctx) {
        return QuadExt(ctx, BaseScalar::constant(Rat(0), ctx->field()),
                       BaseScalar::constant(Rat(1), ctx->field()));
    }
    /// f = g - E, the conjugate root.
    static QuadExt root_f(const QuadExtCtxPtr& ctx) {
        return QuadExt(ctx, ctx->g(), BaseScalar::constant(Rat(-1), ctx->field()));
    }

    const QuadExtCtxPtr& ctx() const { return ctx_; }
    const BaseScalar& base_part() const { return u_; }
    const BaseScalar& root_part() const { return v_; }
    bool is_base() const { return v_.is_zero(); }
    bool is_zero() const { return u_.is_zero() && v_.is_zero(); }

    QuadExt conjugate() const { return QuadExt(ctx_, u_ + v_ * ctx_->g(), -v_); }

    /// Norm (u + vE)(u + vF) = u^2 + uvg + v^2 n, an exact base scalar.
    BaseScalar norm() const { return u_ * u_ + u_ * v_ * ctx_->g() + v_ * v_ * ctx_->n(); }

    friend QuadExt operator+(const QuadExt& a, const QuadExt& b) {
        return QuadExt(a.merged(b), a.u_ + b.u_, a.v_ + b.v_);
    }
    friend QuadExt operator-(const QuadExt& a, const QuadExt& b) {
        return QuadExt(a.merged(b), a.u_ - b.u_, a.v_ - b.v_);
    }
    QuadExt operator-() const { return QuadExt(ctx_, -u_, -v_); }
    friend QuadExt operator*(const QuadExt& a, const QuadExt& b) {
        auto ctx = a.merged(b);
        BaseScalar real = a.u_ * b.u_ - a.v_ * b.v_ * ctx->n();
        BaseScalar root = a.u_ * b.v_ + a.v_ * b.u_ + a.v_ * b.v_ * ctx->g();
        return QuadExt(ctx, real, root);
    }
    friend QuadExt operator/(const QuadExt& a, const QuadExt& b) {
        auto ctx = a.merged(b);
        if (b.is_zero()) throw DivisionByZero();
        BaseScalar nb = b.norm();
        if (nb.is_zero()) throw DivisionByZero("division by a zero divisor");
        QuadExt prod = a * b.conjugate();
        return QuadExt(ctx, prod.u_ / nb, prod.v_ / nb);
    }

    friend bool operator==(const QuadExt& a, const QuadExt& b) {
        return a.u_ == b.u_ && a.v_ == b.v_;
    }

    /// Exact valuation of u + vE.  Ties between val(u) and val(vE) are
    /// broken by window evaluation against the refinable root
    /// approximations, cross-checked with the exact norm.
    ExtVal val() const {
        if (v_.is_zero()) return u_.val();
        if (ctx_->rational_split()) return (u_ + v_ * ctx_->e_exact()).val();
        if (u_.is_zero()) return v_.val() + ExtVal(Rat(ctx_->val_e()));
        ExtVal vu = u_.val();
        ExtVal vve = v_.val() + ExtVal(Rat(ctx_->val_e()));
        if (vu != vve) return min(vu, vve);

        BaseScalar nrm = norm();
        if (nrm.is_zero())
            throw std::logic_error("vanishing norm with an irrational root");
        ExtVal vnorm = nrm.val();
        long end = ctx_->current_end();
        for (;;) {
            ctx_->refine_to(end);
            Approx ua = Approx::from_scalar(u_, ctx_->current_end());
            Approx va = Approx::from_scalar(v_, ctx_->current_end());
            Approx xa = ua + va * ctx_->e_approx();
            Approx ca = ua + va * ctx_->f_approx();
            auto vx = xa.val();
            auto vc = ca.val();
            if (vx && vc) {
                if (ExtVal(Rat(*vx)) + ExtVal(Rat(*vc)) != vnorm)
                    throw std::logic_error("conjugate valuations disagree with the norm");
                return ExtVal(Rat(*vx));
            }
            if (vx && !vc) return ExtVal(Rat(*vx));
            if (vc && !vx) return vnorm - ExtVal(Rat(*vc));
            if (end >= ctx_->hard_cap())
                throw PrecisionExceeded("valuation undetermined at the precision cap");
            end = std::min(2 * std::max<long>(end, 16), ctx_->hard_cap());
        }
    }

private:
    QuadExtCtxPtr merged(const QuadExt& o) const {
        if (ctx_ && o.ctx_ && ctx_ != o.ctx_)
            throw BackendMismatch("mixed quadratic extension contexts");
        return ctx_ ? ctx_ : o.ctx_;
    }

    QuadExtCtxPtr ctx_;
    BaseScalar u_, v_;
};

/// Convenience wrapper matching the spec operation: solve X^2 - gX + ac
/// for (e, f) with e + f = g, e f = ac.
inline QuadExtCtxPtr solve_quadratic_ef(const BaseScalar& a, const BaseScalar& c,
                                        const BaseScalar& g, long rel_precision = 64,
                                        long hard_cap = 4096) {
    return QuadExtContext::solve(g, a * c, rel_precision, hard_cap);
}

} // namespace bltrop
