#include "zdb/density.hpp"

#include <algorithm>

namespace zdb {

namespace {

void check_sigma(const Interval& sigma) {
    if (mpfr_cmp_d(sigma.lo(), 0.98) < 0 || mpfr_cmp_ui(sigma.hi(), 1) > 0)
        throw DomainError("sigma must lie in [0.98, 1]");
}

void check_logT(const Interval& logT) {
    if (mpfr_less_p(logT.lo(), ln(Interval(3, logT.bits())).lo())) throw DomainError("T must be >= 3");
}

Interval u15(const Interval& sigma) { return pow(1 - sigma, Interval::ratio(3, 2, sigma.bits())); }

Interval log_term(const Interval& logT, long num, long den) {
    return pow(logT, Interval::ratio(num, den, logT.bits()));
}

}  // namespace

Interval DensityBound::eval(const Interval& sigma, const Interval& logT) const {
    const Interval u = 1 - sigma;
    const Interval e = form == DensityForm::ThreeHalves ? pow(u, Interval::ratio(3, 2, u.bits())) : u;
    return A * exp(B * e * logT) * log_term(logT, c_num, c_den);
}

namespace table {

const char* c1_general_str(TRange r) {
    static const char* v[] = {"4.68e23", "4.59e23", "1.45e23", "9.77e21"};
    return v[static_cast<int>(r)];
}
const char* c1_prime_str(TRange r) {
    static const char* v[] = {"2.15e23", "1.89e23", "4.42e22", "4.72e20"};
    return v[static_cast<int>(r)];
}
Interval c1_general(TRange r, unsigned bits) { return Interval::dec(c1_general_str(r), bits); }
Interval c1_prime(TRange r, unsigned bits) { return Interval::dec(c1_prime_str(r), bits); }
Interval c2_general(unsigned bits) { return Interval::dec("7.65e10", bits); }
Interval third_term(unsigned bits) { return Interval::dec("0.27", bits); }
Interval theorem2_constant(unsigned bits) { return Interval::dec("4.45e12", bits); }

}  // namespace table

Interval theorem1_general(const Interval& sigma, const Interval& logT) {
    check_sigma(sigma);
    check_logT(logT);
    const unsigned bits = logT.bits();
    const TRange r = trange_of(logT);
    const Interval s = sigma.with_prec(bits);
    const Interval lam = ln(logT);
    const Interval v = u15(s);
    const Interval t1 = table::c1_general(r, bits) * exp(Interval::dec("57.8875", bits) * v * logT) *
                        log_term(logT, 19703, 1800);
    const Interval t2 = table::c2_general(bits) * exp(Interval::dec("33.08", bits) * v * logT) * log_term(logT, 503, 45);
    const Interval t3 = table::third_term(bits) * log_term(logT, 7, 5);
    return (t1 + t2 + t3) * lam;
}

Interval theorem1_simple(const Interval& sigma, const Interval& logT) {
    check_sigma(sigma);
    check_logT(logT);
    const unsigned bits = logT.bits();
    const DensityBound d{table::c1_prime(trange_of(logT), bits), Interval::dec("57.8875", bits), 10393, 900,
                         DensityForm::ThreeHalves};
    return d.eval(sigma.with_prec(bits), logT);
}

Interval theorem2(const Interval& sigma, const Interval& logT) {
    check_sigma(sigma);
    const unsigned bits = logT.bits();
    if (!certainly_le(Interval::dec("6.7e12", bits), logT)) throw DomainError("theorem2 needs log T >= 6.7e12");
    const DensityBound d{table::theorem2_constant(bits), Interval::dec("57.8875", bits), 10393, 900,
                         DensityForm::ThreeHalves};
    return d.eval(sigma.with_prec(bits), logT);
}

Interval ingham_type(const Interval& sigma, const Interval& logT, const Interval& C) {
    check_logT(logT);
    const unsigned bits = logT.bits();
    if (mpfr_cmp_ui(C.lo(), 1) < 0) throw DomainError("ingham_type needs C >= 1");
    const DensityBound d{C.with_prec(bits), Interval::ratio(8, 3, bits), 3, 1, DensityForm::Linear};
    return d.eval(sigma.with_prec(bits), logT);
}

namespace {

// (log(C'1/C) + (7693/900) loglog T) / log T
Interval crossover_rhs(const Interval& logT, const Interval& C, const Interval& C1p) {
    const unsigned bits = logT.bits();
    return (ln(C1p.with_prec(bits) / C.with_prec(bits)) + Interval::ratio(7693, 900, bits) * ln(logT)) / logT;
}

}  // namespace

Interval sigma_crossover(const Interval& logT, const Interval& C, const Interval& C1p) {
    check_logT(logT);
    const Interval s = 1 - Interval::ratio(3, 8, logT.bits()) * crossover_rhs(logT, C, C1p);
    if (mpfr_sgn(s.lo()) <= 0) throw NoCrossover("crossover threshold is not positive");
    return s;
}

Interval sigma_crossover_implicit(const Interval& logT, const Interval& C, const Interval& C1p) {
    check_logT(logT);
    const unsigned bits = logT.bits();
    const Interval r = crossover_rhs(logT, C, C1p);
    const Interval k = Interval::dec("57.8875", bits);
    const Interval e32 = Interval::ratio(3, 2, bits);
    auto F = [&](const Interval& u) { return Interval::ratio(8, 3, bits) * u - k * pow(u, e32); };
    // F increases on [0, u_peak], u_peak = (16/(9k))^2.
    const Interval peak = sqr(Interval(16, bits) / (9 * k));
    const Interval peak_lo = peak.lower();
    if (!certainly_le(r, F(peak_lo))) throw NoCrossover("implicit crossover: threshold above the peak");
    Interval lo(0, bits), hi = peak_lo;
    for (int i = 0; i < static_cast<int>(bits); ++i) {
        const auto halves = bisect(lo.with_hi(hi), SplitKind::Arithmetic);
        const Interval mid = halves.first.upper();
        const Interval f = F(mid);
        if (certainly_lt(f, r))
            lo = mid;
        else if (certainly_ge(f, r))
            hi = mid;
        else
            break;
        if (mpfr_equal_p(lo.hi(), hi.lo())) break;
    }
    return 1 - lo.with_hi(hi);
}

Interval t_regime_boundary(const Interval& C, const Interval& C1p) {
    const unsigned bits = std::max(C.bits(), C1p.bits());
    if (mpfr_cmp_ui(C.lo(), 1) < 0) throw DomainError("t_regime_boundary needs C >= 1");
    auto h = [&](const Interval& L) {
        return zero_free_gap(ZeroFreeRegionId::KorobovVinogradov, L) -
               Interval::ratio(3, 8, bits) * crossover_rhs(L, C, C1p);
    };
    Interval lo(10, bits), hi = Interval::dec("1e15", bits);
    if (!(mpfr_sgn(h(lo).hi()) < 0 && mpfr_sgn(h(hi).lo()) > 0))
        throw BracketFailure("no certified sign change on [10, 1e15]");
    for (int i = 0; i < 4 * static_cast<int>(bits); ++i) {
        const Interval mid = bisect(lo.with_hi(hi), SplitKind::Geometric).first.upper();
        if (mpfr_equal_p(mid.lo(), lo.lo()) || mpfr_equal_p(mid.lo(), hi.lo())) break;
        const Interval v = h(mid);
        if (mpfr_sgn(v.hi()) < 0)
            lo = mid;
        else if (mpfr_sgn(v.lo()) > 0)
            hi = mid;
        else
            break;
    }
    return lo.with_hi(hi);
}

}  // namespace zdb
