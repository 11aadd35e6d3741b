#include "zdb/interval.hpp"

#include <algorithm>
#include <cstdlib>

namespace zdb {

namespace {

unsigned join(const Interval& a, const Interval& b) { return std::max(a.bits(), b.bits()); }

// r = x*y rounded with rnd, treating 0*inf as 0 (endpoint limit semantics).
void mul_ep(mpfr_ptr r, mpfr_srcptr x, mpfr_srcptr y, mpfr_rnd_t rnd) {
    if ((mpfr_zero_p(x) && mpfr_inf_p(y)) || (mpfr_inf_p(x) && mpfr_zero_p(y))) {
        mpfr_set_zero(r, 1);
        return;
    }
    mpfr_mul(r, x, y, rnd);
}

struct Tmp {
    mpfr_t v;
    explicit Tmp(unsigned bits) { mpfr_init2(v, bits); }
    ~Tmp() { mpfr_clear(v); }
    Tmp(const Tmp&) = delete;
    Tmp& operator=(const Tmp&) = delete;
};

std::string fmt(mpfr_srcptr x, int digits, bool up) {
    char* buf = nullptr;
    if (up)
        mpfr_asprintf(&buf, "%.*RUe", digits, x);
    else
        mpfr_asprintf(&buf, "%.*RDe", digits, x);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

// MPFR keeps the exponent range per thread; the default one overflows near 10^(3e8)
void widen_exponents() {
    thread_local const bool done = [] {
        mpfr_set_emax(mpfr_get_emax_max());
        mpfr_set_emin(mpfr_get_emin_min());
        return true;
    }();
    static_cast<void>(done);
}

}  // namespace

Interval::Interval(unsigned bits) {
    widen_exponents();
    mpfr_init2(lo_, bits);
    mpfr_init2(hi_, bits);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(long v, unsigned bits) {
    widen_exponents();
    mpfr_init2(lo_, bits);
    mpfr_init2(hi_, bits);
    mpfr_set_si(lo_, v, MPFR_RNDD);
    mpfr_set_si(hi_, v, MPFR_RNDU);
}

Interval::Interval(const Interval& o) {
    widen_exponents();
    mpfr_init2(lo_, mpfr_get_prec(o.lo_));
    mpfr_init2(hi_, mpfr_get_prec(o.hi_));
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept {
    mpfr_init2(lo_, MPFR_PREC_MIN);
    mpfr_init2(hi_, MPFR_PREC_MIN);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o) {
    if (this != &o) {
        mpfr_set_prec(lo_, mpfr_get_prec(o.lo_));
        mpfr_set_prec(hi_, mpfr_get_prec(o.hi_));
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

void Interval::check() {
    if (mpfr_nan_p(lo_) || mpfr_nan_p(hi_)) throw DomainError("interval operation produced NaN");
    if (mpfr_cmp(lo_, hi_) > 0) throw DomainError("interval with lo > hi");
}

Interval Interval::dec(std::string_view s, unsigned bits) { return dec(s, s, bits); }

Interval Interval::dec(std::string_view lo, std::string_view hi, unsigned bits) {
    Interval r(bits);
    std::string a(lo), b(hi);
    char* end = nullptr;
    mpfr_strtofr(r.lo_, a.c_str(), &end, 10, MPFR_RNDD);
    if (a.empty() || *end != '\0') throw DomainError("bad decimal literal: " + a);
    mpfr_strtofr(r.hi_, b.c_str(), &end, 10, MPFR_RNDU);
    if (b.empty() || *end != '\0') throw DomainError("bad decimal literal: " + b);
    r.check();
    return r;
}

Interval Interval::exact(double v, unsigned bits) {
    Interval r(bits);
    mpfr_set_d(r.lo_, v, MPFR_RNDD);
    mpfr_set_d(r.hi_, v, MPFR_RNDU);
    r.check();
    return r;
}

Interval Interval::ratio(long num, long den, unsigned bits) {
    return Interval(num, bits) / Interval(den, bits);
}

Interval Interval::hull_of(const Interval& a, const Interval& b) {
    Interval r(join(a, b));
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, unsigned bits) {
    Interval r(bits);
    mpfr_set(r.lo_, lo, MPFR_RNDD);
    mpfr_set(r.hi_, hi, MPFR_RNDU);
    r.check();
    return r;
}

Interval Interval::pos_inf_ray(const Interval& from) {
    Interval r = from;
    mpfr_set_inf(r.hi_, 1);
    return r;
}

double Interval::mid_d() const {
    if (!bounded()) return mpfr_get_d(lo_finite() ? lo_ : hi_, MPFR_RNDN);
    return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN));
}

bool Interval::contains(const Interval& x) const {
    return mpfr_lessequal_p(lo_, x.lo_) && mpfr_lessequal_p(x.hi_, hi_);
}

Interval Interval::lower() const { return from_endpoints(lo_, lo_, bits()); }
Interval Interval::upper() const { return from_endpoints(hi_, hi_, bits()); }

Interval Interval::midpoint() const {
    Interval r(bits());
    if (bounded()) {
        mpfr_add(r.lo_, lo_, hi_, MPFR_RNDN);
        mpfr_div_2ui(r.lo_, r.lo_, 1, MPFR_RNDN);
    } else if (lo_finite()) {
        mpfr_set(r.lo_, lo_, MPFR_RNDN);
    } else if (hi_finite()) {
        mpfr_set(r.lo_, hi_, MPFR_RNDN);
    } else {
        mpfr_set_zero(r.lo_, 1);
    }
    mpfr_set(r.hi_, r.lo_, MPFR_RNDN);
    return r;
}

Interval Interval::width() const {
    Interval r(bits());
    mpfr_sub(r.hi_, hi_, lo_, MPFR_RNDU);
    mpfr_set(r.lo_, r.hi_, MPFR_RNDD);
    return r;
}

Interval Interval::with_lo(const Interval& src) const { return from_endpoints(src.lo_, hi_, bits()); }
Interval Interval::with_hi(const Interval& src) const { return from_endpoints(lo_, src.hi_, bits()); }

Interval Interval::with_prec(unsigned b) const { return from_endpoints(lo_, hi_, b); }

std::string Interval::lo_str(int digits) const { return fmt(lo_, digits, false); }
std::string Interval::hi_str(int digits) const { return fmt(hi_, digits, true); }
std::string Interval::str(int digits) const { return "[" + lo_str(digits) + ", " + hi_str(digits) + "]"; }

Interval operator-(const Interval& a) {
    Interval r(a.bits());
    mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
    return r;
}

Interval operator+(const Interval& a, const Interval& b) {
    Interval r(join(a, b));
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    r.check();
    return r;
}

Interval operator-(const Interval& a, const Interval& b) {
    Interval r(join(a, b));
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    r.check();
    return r;
}

Interval operator*(const Interval& a, const Interval& b) {
    const unsigned bits = join(a, b);
    Interval r(bits);
    Tmp t(bits);
    mpfr_srcptr xs[2] = {a.lo_, a.hi_};
    mpfr_srcptr ys[2] = {b.lo_, b.hi_};
    bool first = true;
    for (auto x : xs)
        for (auto y : ys) {
            mul_ep(t.v, x, y, MPFR_RNDD);
            if (first || mpfr_less_p(t.v, r.lo_)) mpfr_set(r.lo_, t.v, MPFR_RNDD);
            mul_ep(t.v, x, y, MPFR_RNDU);
            if (first || mpfr_greater_p(t.v, r.hi_)) mpfr_set(r.hi_, t.v, MPFR_RNDU);
            first = false;
        }
    r.check();
    return r;
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) throw DivisionByZeroInterval("division by an interval containing 0");
    const unsigned bits = join(a, b);
    if (!a.bounded() || !b.bounded()) {
        Interval inv(bits);
        mpfr_ui_div(inv.lo_, 1, b.hi_, MPFR_RNDD);
        mpfr_ui_div(inv.hi_, 1, b.lo_, MPFR_RNDU);
        return a * inv;
    }
    Interval r(bits);
    Tmp t(bits);
    mpfr_srcptr xs[2] = {a.lo_, a.hi_};
    mpfr_srcptr ys[2] = {b.lo_, b.hi_};
    bool first = true;
    for (auto x : xs)
        for (auto y : ys) {
            mpfr_div(t.v, x, y, MPFR_RNDD);
            if (first || mpfr_less_p(t.v, r.lo_)) mpfr_set(r.lo_, t.v, MPFR_RNDD);
            mpfr_div(t.v, x, y, MPFR_RNDU);
            if (first || mpfr_greater_p(t.v, r.hi_)) mpfr_set(r.hi_, t.v, MPFR_RNDU);
            first = false;
        }
    r.check();
    return r;
}

Interval operator+(const Interval& a, long b) { return a + Interval(b, a.bits()); }
Interval operator+(long a, const Interval& b) { return Interval(a, b.bits()) + b; }
Interval operator-(const Interval& a, long b) { return a - Interval(b, a.bits()); }
Interval operator-(long a, const Interval& b) { return Interval(a, b.bits()) - b; }
Interval operator*(const Interval& a, long b) { return a * Interval(b, a.bits()); }
Interval operator*(long a, const Interval& b) { return Interval(a, b.bits()) * b; }
Interval operator/(const Interval& a, long b) { return a / Interval(b, a.bits()); }
Interval operator/(long a, const Interval& b) { return Interval(a, b.bits()) / b; }

bool certainly_lt(const Interval& a, const Interval& b) { return mpfr_less_p(a.hi(), b.lo()) != 0; }
bool certainly_le(const Interval& a, const Interval& b) { return mpfr_lessequal_p(a.hi(), b.lo()) != 0; }
bool overlaps(const Interval& a, const Interval& b) {
    return mpfr_lessequal_p(a.lo(), b.hi()) && mpfr_lessequal_p(b.lo(), a.hi());
}

namespace {

using Fn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

Interval monotone_up(const Interval& a, Fn f) {
    const unsigned bits = a.bits();
    Tmp l(bits), h(bits);
    f(l.v, a.lo(), MPFR_RNDD);
    f(h.v, a.hi(), MPFR_RNDU);
    return Interval::from_endpoints(l.v, h.v, bits);
}

}  // namespace

Interval exp(const Interval& a) { return monotone_up(a, mpfr_exp); }

Interval ln(const Interval& a) {
    if (mpfr_sgn(a.lo()) <= 0) throw DomainError("ln requires a > 0");
    return monotone_up(a, mpfr_log);
}

Interval sqrt(const Interval& a) {
    if (mpfr_sgn(a.lo()) < 0) throw DomainError("sqrt requires a >= 0");
    return monotone_up(a, mpfr_sqrt);
}

Interval asinh(const Interval& a) { return monotone_up(a, mpfr_asinh); }

Interval pow(const Interval& a, const Interval& b) {
    const int s = mpfr_sgn(a.lo());
    if (s < 0 || (s == 0 && mpfr_sgn(b.lo()) <= 0)) throw DomainError("pow requires a > 0");
    // x^y is monotone in each argument separately, so extremes sit at corners.
    const unsigned bits = join(a, b);
    Tmp t(bits), l(bits), h(bits);
    mpfr_srcptr xs[2] = {a.lo(), a.hi()};
    mpfr_srcptr ys[2] = {b.lo(), b.hi()};
    bool first = true;
    for (auto x : xs)
        for (auto y : ys) {
            mpfr_pow(t.v, x, y, MPFR_RNDD);
            if (mpfr_nan_p(t.v)) throw DomainError("pow produced NaN");
            if (first || mpfr_less_p(t.v, l.v)) mpfr_set(l.v, t.v, MPFR_RNDD);
            mpfr_pow(t.v, x, y, MPFR_RNDU);
            if (first || mpfr_greater_p(t.v, h.v)) mpfr_set(h.v, t.v, MPFR_RNDU);
            first = false;
        }
    return Interval::from_endpoints(l.v, h.v, bits);
}

Interval pown(const Interval& a, long n) {
    if (n == 0) return Interval(1, a.bits());
    if (n < 0) return 1 / pown(a, -n);
    const unsigned bits = a.bits();
    Tmp l(bits), h(bits);
    if (n % 2 == 1 || mpfr_sgn(a.lo()) >= 0) {
        mpfr_pow_si(l.v, a.lo(), n, MPFR_RNDD);
        mpfr_pow_si(h.v, a.hi(), n, MPFR_RNDU);
        return Interval::from_endpoints(l.v, h.v, bits);
    }
    if (mpfr_sgn(a.hi()) <= 0) {
        mpfr_pow_si(l.v, a.hi(), n, MPFR_RNDD);
        mpfr_pow_si(h.v, a.lo(), n, MPFR_RNDU);
        return Interval::from_endpoints(l.v, h.v, bits);
    }
    Tmp t(bits);
    mpfr_pow_si(h.v, a.lo(), n, MPFR_RNDU);
    mpfr_pow_si(t.v, a.hi(), n, MPFR_RNDU);
    mpfr_max(h.v, h.v, t.v, MPFR_RNDU);
    mpfr_set_zero(l.v, 1);
    return Interval::from_endpoints(l.v, h.v, bits);
}

Interval sqr(const Interval& a) { return pown(a, 2); }

Interval abs(const Interval& a) {
    if (mpfr_sgn(a.lo()) >= 0) return a;
    if (mpfr_sgn(a.hi()) <= 0) return -a;
    const unsigned bits = a.bits();
    Tmp z(bits), h(bits);
    mpfr_set_zero(z.v, 1);
    mpfr_neg(h.v, a.lo(), MPFR_RNDU);
    mpfr_max(h.v, h.v, a.hi(), MPFR_RNDU);
    return Interval::from_endpoints(z.v, h.v, bits);
}

Interval min(const Interval& a, const Interval& b) {
    const unsigned bits = join(a, b);
    Tmp l(bits), h(bits);
    mpfr_min(l.v, a.lo(), b.lo(), MPFR_RNDD);
    mpfr_min(h.v, a.hi(), b.hi(), MPFR_RNDU);
    return Interval::from_endpoints(l.v, h.v, bits);
}

Interval max(const Interval& a, const Interval& b) {
    const unsigned bits = join(a, b);
    Tmp l(bits), h(bits);
    mpfr_max(l.v, a.lo(), b.lo(), MPFR_RNDD);
    mpfr_max(h.v, a.hi(), b.hi(), MPFR_RNDU);
    return Interval::from_endpoints(l.v, h.v, bits);
}

Interval intersect(const Interval& a, const Interval& b) {
    if (!overlaps(a, b)) throw DomainError("empty intersection");
    const unsigned bits = join(a, b);
    Tmp l(bits), h(bits);
    mpfr_max(l.v, a.lo(), b.lo(), MPFR_RNDD);
    mpfr_min(h.v, a.hi(), b.hi(), MPFR_RNDU);
    return Interval::from_endpoints(l.v, h.v, bits);
}

Interval div_nonneg(const Interval& a, const Interval& b) {
    if (mpfr_sgn(a.lo()) < 0 || mpfr_sgn(b.lo()) < 0) throw DomainError("div_nonneg needs a, b >= 0");
    const unsigned bits = join(a, b);
    Tmp l(bits), h(bits);
    if (mpfr_inf_p(b.hi()))
        mpfr_set_zero(l.v, 1);
    else
        mpfr_div(l.v, a.lo(), b.hi(), MPFR_RNDD);
    if (mpfr_zero_p(b.lo()) || mpfr_inf_p(a.hi()))
        mpfr_set_inf(h.v, 1);
    else
        mpfr_div(h.v, a.hi(), b.lo(), MPFR_RNDU);
    if (mpfr_nan_p(l.v)) mpfr_set_zero(l.v, 1);
    return Interval::from_endpoints(l.v, h.v, bits);
}

Interval const_pi(unsigned bits) {
    Tmp l(bits), h(bits);
    mpfr_const_pi(l.v, MPFR_RNDD);
    mpfr_const_pi(h.v, MPFR_RNDU);
    return Interval::from_endpoints(l.v, h.v, bits);
}

Interval const_e(unsigned bits) { return exp(Interval(1, bits)); }

Interval const_ln2(unsigned bits) {
    Tmp l(bits), h(bits);
    mpfr_const_log2(l.v, MPFR_RNDD);
    mpfr_const_log2(h.v, MPFR_RNDU);
    return Interval::from_endpoints(l.v, h.v, bits);
}

Interval log_pow_ratio(const Interval& x, const Interval& k, const Interval& q) {
    const unsigned bits = x.bits();
    if (!(mpfr_cmp_ui(x.lo(), 1) > 0)) throw DomainError("log_pow_ratio needs x > 1");
    if (mpfr_sgn(k.lo()) < 0 || mpfr_sgn(q.lo()) <= 0) throw DomainError("log_pow_ratio needs k >= 0, q > 0");
    auto at = [&](const Interval& p) {
        if (!p.hi_finite()) return Interval(0, bits);
        return pow(ln(p), k) / pow(p, q);
    };
    const Interval f_lo = at(x.lower());
    const Interval f_hi = at(x.upper());
    const Interval peak = exp(k / q);
    if (certainly_le(peak, x.lower())) return Interval::hull_of(f_hi.lower(), f_lo.upper());
    if (certainly_le(x.upper(), peak)) return Interval::hull_of(f_lo.lower(), f_hi.upper());
    const Interval kq = k / q;
    const Interval top = (mpfr_zero_p(k.lo()) && mpfr_zero_p(k.hi())) ? Interval(1, bits) : pow(kq, k) * exp(-k);
    return Interval::hull_of(min(f_lo, f_hi).lower(), top.upper());
}

namespace {

Interval decay_core(const Interval& x, const Interval& p, const Interval& k, const Interval& a,
                    const Interval& c, const Interval& q) {
    const unsigned bits = x.bits();
    auto naive = [&](const Interval& v) {
        return pow(v, p) * pow(ln(v), k) * exp(a * v - c * pow(v, q));
    };
    auto at = [&](const Interval& v) {
        if (!v.hi_finite()) return Interval(0, bits);
        return naive(v);
    };
    auto dlog = [&](const Interval& v) {
        return p / v + k / (v * ln(v)) + a - c * q * pow(v, q - 1);
    };
    const Interval xl = x.lower();
    if (mpfr_sgn(dlog(xl).hi()) < 0) return Interval::hull_of(at(x.upper()).lower(), at(xl).upper());
    if (x.hi_finite()) {
        const Interval xh = x.upper();
        if (mpfr_sgn(dlog(xh).lo()) > 0) return Interval::hull_of(at(xl).lower(), at(xh).upper());
        return naive(x);
    }
    // Find a finite point beyond which the function decreases.
    Interval x1 = xl * 2;
    for (int i = 0; i < 400 && mpfr_sgn(dlog(x1).hi()) >= 0; ++i) x1 = x1 * 2;
    if (mpfr_sgn(dlog(x1).hi()) >= 0) throw DomainError("pow_exp_decay: no decay located");
    const Interval head = naive(x.with_hi(x1));
    return Interval::hull_of(Interval(0, bits), head);
}

}  // namespace

Interval pow_exp_decay(const Interval& x, const Interval& p, const Interval& k, const Interval& a,
                       const Interval& c, const Interval& q) {
    if (!(mpfr_cmp_ui(x.lo(), 1) > 0)) throw DomainError("pow_exp_decay needs x > 1");
    if (mpfr_sgn(k.lo()) < 0 || mpfr_sgn(a.lo()) < 0 || mpfr_sgn(c.lo()) <= 0 || mpfr_cmp_ui(q.lo(), 1) < 0)
        throw DomainError("pow_exp_decay parameter out of range");
    if (mpfr_sgn(p.lo()) >= 0) return decay_core(x, p, k, a, c, q);
    if (mpfr_sgn(p.hi()) <= 0) {
        const Interval zero(0, x.bits());
        Interval xp = pow(x, p);
        if (!x.hi_finite()) xp = Interval::hull_of(zero, xp);
        return xp * decay_core(x, zero, k, a, c, q);
    }
    throw DomainError("pow_exp_decay: p must not straddle 0");
}

std::pair<Interval, Interval> bisect(const Interval& x, SplitKind kind) {
    const unsigned bits = x.bits();
    Tmp m(bits);
    if (!x.hi_finite() && x.lo_finite()) {
        if (mpfr_sgn(x.lo()) > 0)
            mpfr_mul_ui(m.v, x.lo(), 16, MPFR_RNDN);
        else
            mpfr_set_ui(m.v, 1, MPFR_RNDN);
    } else if (!x.lo_finite() && x.hi_finite()) {
        if (mpfr_sgn(x.hi()) < 0)
            mpfr_mul_ui(m.v, x.hi(), 16, MPFR_RNDN);
        else
            mpfr_set_si(m.v, -1, MPFR_RNDN);
    } else if (!x.lo_finite()) {
        mpfr_set_zero(m.v, 1);
    } else if (kind == SplitKind::Geometric && mpfr_sgn(x.lo()) > 0 &&
               mpfr_cmp_d(x.hi(), 4.0 * mpfr_get_d(x.lo(), MPFR_RNDN)) > 0) {
        mpfr_mul(m.v, x.lo(), x.hi(), MPFR_RNDN);
        mpfr_sqrt(m.v, m.v, MPFR_RNDN);
    } else {
        mpfr_add(m.v, x.lo(), x.hi(), MPFR_RNDN);
        mpfr_div_2ui(m.v, m.v, 1, MPFR_RNDN);
    }
    // Keep the split point strictly inside when possible.
    if (mpfr_lessequal_p(m.v, x.lo()) || mpfr_greaterequal_p(m.v, x.hi())) {
        mpfr_add(m.v, x.lo(), x.hi(), MPFR_RNDN);
        mpfr_div_2ui(m.v, m.v, 1, MPFR_RNDN);
    }
    return {Interval::from_endpoints(x.lo(), m.v, bits), Interval::from_endpoints(m.v, x.hi(), bits)};
}

}  // namespace zdb
