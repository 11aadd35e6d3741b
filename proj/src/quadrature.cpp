#include "zdb/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace zdb {

namespace {

Interval zero_to(const Interval& u) { return Interval::hull_of(Interval(0, u.bits()), u.upper()); }

bool is_one(const Interval& c) { return mpfr_cmp_ui(c.lo(), 1) == 0 && mpfr_cmp_ui(c.hi(), 1) == 0; }

// Gamma(x) at a point x > 0: shift to w >= 40, then Stirling with eight
// Bernoulli terms; for real w the error is below the first omitted term.
Interval gamma_at(const Interval& x) {
    const unsigned bits = x.bits();
    Interval w = x, prod(1, bits);
    while (mpfr_cmp_ui(w.lo(), 40) < 0) {
        prod = prod * w;
        w = w + 1;
    }
    static const long num[] = {1, -1, 1, -1, 5, -691, 7, -3617};
    static const long den[] = {6, 30, 42, 30, 66, 2730, 6, 510};
    Interval s = (w - Interval::ratio(1, 2, bits)) * ln(w) - w + ln(2 * const_pi(bits)) / 2;
    for (int k = 1; k <= 8; ++k)
        s = s + Interval::ratio(num[k - 1], den[k - 1], bits) / (2 * k * (2 * k - 1) * pown(w, 2 * k - 1));
    const Interval rem = Interval::ratio(43867, 798, bits) / (18 * 17 * pown(w, 17));
    s = Interval::hull_of(s - rem, s + rem);
    return exp(s) / prod;
}

}  // namespace

Interval tail_upper_bound(const TailIntegralSpec& s, const Precision& prec) {
    const unsigned bits = prec.bits;
    const Interval a = s.a.with_prec(bits), c = s.c.with_prec(bits), b = s.b.with_prec(bits);
    const Interval p = s.p.with_prec(bits), v0 = s.v0.with_prec(bits);
    if (mpfr_sgn(a.lo()) < 0 || mpfr_sgn(b.lo()) <= 0 || mpfr_sgn(c.lo()) <= 0 || mpfr_cmp_ui(c.hi(), 1) > 0 ||
        mpfr_sgn(v0.lo()) < 0)
        throw DomainError("tail spec out of range");
    const bool linear = mpfr_cmp_ui(c.hi(), 1) == 0;
    if (linear && !is_one(c)) throw DomainError("tail spec: c must be a point when it reaches 1");
    if (linear && !certainly_lt(a, b)) throw NotDecaying("tail integrand does not decay (a >= b with c = 1)");

    Interval vstar = v0.lower();
    Interval beta(bits);
    Interval panels(0, bits);
    if (linear) {
        beta = (b - a).lower();
    } else {
        auto slope_gap = [&](const Interval& v) { return b - a * c * pow(v, c - 1); };
        bool ok = mpfr_sgn(vstar.lo()) > 0 && mpfr_sgn(slope_gap(vstar).lo()) > 0;
        if (ok && mpfr_cmp(slope_gap(vstar).lo(), (b / 2).lo()) >= 0) {
            beta = slope_gap(vstar).lower();
        } else {
            // Past v_c the slope is at most -b/2; cover [v0, v_c] by unit panels.
            const Interval vc = pow(2 * a * c / b, 1 / (1 - c));
            std::uint64_t n = 0;
            Interval sum(0, bits);
            Interval left = vstar;
            while (!certainly_le(vc, left) || mpfr_sgn(left.lo()) == 0) {
                if (++n > prec.max_subdivisions) throw DepthExhausted("tail panels exceeded max_subdivisions");
                const Interval right = left + 1;
                const Interval v = left.with_hi(right);
                sum = sum + exp(a * pow(v, c) - b * v) * pow(v, p);
                left = right.lower();
            }
            vstar = left;
            beta = slope_gap(vstar).lower();
            panels = sum.upper();
        }
    }
    if (mpfr_sgn(beta.lo()) <= 0) throw NotDecaying("tail slope bound is not negative");

    // Tail: v^p <= v*^{p-n} v^n for v >= v*, n = ceil(p), then integrate
    // e^{-beta (v - v*)} (v* + t)^n exactly.
    const double phi_top = std::ceil(p.hi_d());
    const long n = phi_top > 0 ? static_cast<long>(phi_top) : 0;
    Interval head = exp(a * pow(vstar, c) - b * vstar);
    Interval tail(0, bits);
    if (mpfr_zero_p(vstar.lo())) {
        if (!p.is_point() || mpfr_cmp_si(p.lo(), n) != 0)
            throw DomainError("tail spec: v0 = 0 needs a nonnegative integer p");
        Interval fact(1, bits);
        for (long k = 2; k <= n; ++k) fact = fact * k;
        tail = head * fact / pown(beta, n + 1);
    } else {
        if (mpfr_cmp_ui(vstar.lo(), 1) < 0 && !p.is_point())
            throw DomainError("tail spec: interval p needs v* >= 1");
        Interval acc(0, bits);
        Interval coef(1, bits);  // n!/(n-k)!
        for (long k = 0; k <= n; ++k) {
            if (k > 0) coef = coef * (n - k + 1);
            acc = acc + coef / (pown(vstar, k) * pown(beta, k + 1));
        }
        tail = head * pow(vstar, p.upper()) * acc;
    }
    return zero_to(panels + tail);
}

Interval gamma_kernel_integral(const Interval& q, const Interval& b) {
    const unsigned bits = std::max(q.bits(), b.bits());
    if (mpfr_cmp_si(q.lo(), -1) <= 0 || mpfr_cmp_ui(q.hi(), 1) > 0 || mpfr_sgn(b.lo()) <= 0)
        throw DomainError("gamma_kernel_integral needs q in (-1, 1], b > 0");
    // Gamma(q+1) <= 1 on [0,1]; Gamma(z) < 1/z on (0,1).
    Interval G(1, bits);
    if (mpfr_sgn(q.lo()) < 0) G = max(G, 1 / (q.lower() + 1));
    // Gamma is convex on (0, inf), so its max over q+1 sits at an endpoint.
    const Interval x = q.with_prec(bits) + 1;
    G = min(G, max(gamma_at(x.lower()), gamma_at(x.upper())));
    return zero_to(G * pow(b, -(q + 1)));
}

GammaSplitBound finite_gamma_bound_parts(const Interval& amb, const Interval& L, const Interval& A) {
    if (mpfr_cmp_si(amb.lo(), -1) <= 0 || mpfr_sgn(amb.hi()) >= 0)
        throw DomainError("finite_gamma_bound needs alpha - beta in (-1, 0)");
    if (mpfr_sgn(A.lo()) <= 0 || !certainly_le(A, L)) throw DomainError("finite_gamma_bound needs L >= A > 0");
    const Interval delta = -amb;
    const Interval k = 2 / (1 - delta);
    const Interval s_a = asinh(A / delta);
    const Interval s_l = asinh(L / delta);
    return {k * s_a, k * (s_l - s_a), k * s_l};
}

Interval finite_gamma_bound_integral(const Interval& amb, const Interval& L, const Interval& A) {
    return finite_gamma_bound_parts(amb, L, A).total;
}

}  // namespace zdb
