#include "zdb/bounds.hpp"

namespace zdb {

namespace constants {
Interval A(unsigned bits) { return Interval::dec("70.6995", bits); }
Interval B(unsigned bits) { return Interval::dec("4.43795", bits); }
Interval D1(unsigned bits) { return Interval::dec("1.01e12", bits); }
Interval D2(unsigned bits) { return Interval::dec("7.26e6", bits); }
}  // namespace constants

std::string to_string(ZeroFreeRegionId id) {
    switch (id) {
        case ZeroFreeRegionId::Classical: return "Classical";
        case ZeroFreeRegionId::Intermediate: return "Intermediate";
        case ZeroFreeRegionId::Littlewood: return "Littlewood";
        case ZeroFreeRegionId::KorobovVinogradov: return "KorobovVinogradov";
    }
    return "?";
}

std::string to_string(TRange r) {
    switch (r) {
        case TRange::R1: return "R1";
        case TRange::R2: return "R2";
        case TRange::R3: return "R3";
        case TRange::R4: return "R4";
    }
    return "?";
}

Interval log_3e12(unsigned bits) { return ln(Interval::dec("3e12", bits)); }

namespace {

const char* kUpper[] = {"46.2", "170.2", "481958"};

Interval upper_of(int i, unsigned bits) { return Interval::dec(kUpper[i], bits); }

}  // namespace

Interval trange_logT(TRange r, unsigned bits) {
    switch (r) {
        case TRange::R1: return log_3e12(bits).with_hi(upper_of(0, bits));
        case TRange::R2: return upper_of(0, bits).with_hi(upper_of(1, bits));
        case TRange::R3: return upper_of(1, bits).with_hi(upper_of(2, bits));
        case TRange::R4: return Interval::pos_inf_ray(upper_of(2, bits));
    }
    throw DomainError("bad range");
}

TRange trange_of(const Interval& logT) {
    const unsigned bits = logT.bits();
    // Comparison against the enclosure of the decimal boundary: a logT typed
    // as "46.2" has the same enclosure and lands in the lower range.
    for (int i = 0; i < 3; ++i) {
        const Interval b = upper_of(i, bits);
        if (mpfr_lessequal_p(logT.hi(), b.hi())) {
            if (i > 0 && !mpfr_greater_p(logT.lo(), upper_of(i - 1, bits).hi()))
                throw RangeStraddle("log T interval straddles a range boundary");
            return static_cast<TRange>(i);
        }
    }
    if (!mpfr_greater_p(logT.lo(), upper_of(2, bits).hi()))
        throw RangeStraddle("log T interval straddles a range boundary");
    return TRange::R4;
}

bool below_verified_height(const Interval& logT) {
    return mpfr_less_p(logT.lo(), log_3e12(logT.bits()).lo()) != 0;
}

ZeroFreeRegionId region_of(TRange r) {
    switch (r) {
        case TRange::R1: return ZeroFreeRegionId::Classical;
        case TRange::R2: return ZeroFreeRegionId::Intermediate;
        case TRange::R3: return ZeroFreeRegionId::Littlewood;
        case TRange::R4: return ZeroFreeRegionId::KorobovVinogradov;
    }
    throw DomainError("bad range");
}

Interval zero_free_gap(ZeroFreeRegionId region, const Interval& logT) {
    const unsigned bits = logT.bits();
    if (mpfr_less_p(logT.lo(), ln(Interval(3, bits)).lo())) throw DomainError("zero_free_gap needs T >= 3");
    const Interval lam = ln(logT);
    switch (region) {
        case ZeroFreeRegionId::Classical:
            return 1 / (Interval::dec("5.558691", bits) * logT);
        case ZeroFreeRegionId::Intermediate: {
            const Interval J = j_function(logT);
            const Interval num = Interval::dec("0.04962", bits) - Interval::dec("0.0196", bits) / (J + Interval::dec("1.15", bits));
            return num / (J + Interval::dec("0.685", bits) + Interval::dec("0.155", bits) * lam);
        }
        case ZeroFreeRegionId::Littlewood:
            return lam / (Interval::dec("21.233", bits) * logT);
        case ZeroFreeRegionId::KorobovVinogradov:
            return 1 / (Interval::dec("53.989", bits) * pow(logT, Interval::ratio(2, 3, bits)) *
                        pow(lam, Interval::ratio(1, 3, bits)));
    }
    throw DomainError("bad region");
}

Interval j_function(const Interval& logT) {
    const unsigned bits = logT.bits();
    if (mpfr_cmp_ui(logT.lo(), 1) < 0) throw DomainError("j_function needs T >= e");
    return logT / 6 + ln(logT) + ln(Interval::dec("0.618", bits));
}

bool j_bound_holds(const Interval& logT) {
    return certainly_lt(j_function(logT), logT / 4 + Interval::dec("1.8521", logT.bits()));
}

std::optional<ZeroFreeRegionId> widest_region(const Interval& logT) {
    const ZeroFreeRegionId ids[] = {ZeroFreeRegionId::Classical, ZeroFreeRegionId::Intermediate,
                                    ZeroFreeRegionId::Littlewood, ZeroFreeRegionId::KorobovVinogradov};
    for (auto cand : ids) {
        const Interval g = zero_free_gap(cand, logT);
        bool wins = true;
        for (auto other : ids)
            if (other != cand && !certainly_gt(g, zero_free_gap(other, logT))) wins = false;
        if (wins) return cand;
    }
    return std::nullopt;
}

Interval log_richert_M(const Interval& alpha, const Interval& logT) {
    const unsigned bits = logT.bits();
    if (mpfr_cmp_d(alpha.lo(), 0.5) < 0 || mpfr_cmp_ui(alpha.hi(), 1) > 0)
        throw DomainError("richert_M needs alpha in [1/2, 1]");
    if (mpfr_less_p(logT.lo(), ln(Interval(3, bits)).lo())) throw DomainError("richert_M needs T >= 3");
    const Interval e = pow(1 - alpha, Interval::ratio(3, 2, bits));
    return ln(constants::A(bits)) + constants::B(bits) * e * logT + Interval::ratio(2, 3, bits) * ln(logT);
}

Interval richert_M(const Interval& alpha, const Interval& T) {
    if (mpfr_cmp_ui(T.lo(), 3) < 0) throw DomainError("richert_M needs T >= 3");
    return exp(log_richert_M(alpha, ln(T)));
}

Interval nt_main(const Interval& T) {
    const unsigned bits = T.bits();
    const Interval twopi = 2 * const_pi(bits);
    return T / twopi * ln(T / (twopi * const_e(bits)));
}

Interval nt_error(const Interval& T) {
    const unsigned bits = T.bits();
    if (mpfr_less_p(T.lo(), const_e(bits).lo())) throw DomainError("N(T) bound needs T >= e");
    const Interval L = ln(T);
    const Interval ll = ln(max(L, Interval(1, bits)));
    return Interval::dec("0.1038", bits) * L + Interval::dec("0.2573", bits) * ll + Interval::dec("9.3675", bits);
}

Interval nt_upper(const Interval& T) { return nt_main(T) + nt_error(T); }
Interval nt_lower(const Interval& T) { return nt_main(T) - nt_error(T); }

Interval stirling_gamma_upper(const Interval& sigma, const Interval& t, const Interval& z_abs) {
    const unsigned bits = t.bits();
    if (t.contains_zero()) throw DomainError("stirling bound needs t != 0");
    const Interval at = abs(t);
    if (!certainly_le(at, z_abs) && mpfr_less_p(z_abs.lo(), at.lo())) throw DomainError("stirling bound needs |z| >= |t|");
    const Interval pi = const_pi(bits);
    return sqrt(2 * pi) * pow(at, sigma - Interval::ratio(1, 2, bits)) * exp(-pi * at / 2 + 1 / (6 * z_abs));
}

DivisorSumBound divisor_sum_bound(const Interval& x) {
    const unsigned bits = x.bits();
    if (mpfr_cmp_ui(x.lo(), 2) < 0) throw DomainError("divisor sum bound needs x >= 2");
    const Interval L = ln(x);
    const Interval pi = const_pi(bits);
    const Interval D1 = 1 / sqr(pi);
    const Interval D2 = Interval::dec("0.745", "0.746", bits);
    const Interval D3 = Interval::dec("0.824", "0.825", bits);
    const Interval D4 = Interval::dec("0.461", "0.462", bits);
    const Interval main = D1 * x * pown(L, 3) + D2 * x * sqr(L) + D3 * x * L + D4 * x;
    const Interval band = Interval::dec("9.73", bits) * pow(x, Interval::ratio(3, 4, bits)) * L +
                          Interval::dec("0.73", bits) * sqrt(x);
    DivisorSumBound r{(main + band).upper(), (main - band).lower(), false, false, x * pown(L, 3) / 4, x * pown(L, 3)};
    r.quarter_form_applies = mpfr_cmp_ui(x.lo(), 433) >= 0;
    r.unit_form_applies = mpfr_cmp_ui(x.lo(), 7) >= 0;
    return r;
}

Interval divisor_sum_upper(const Interval& x) { return divisor_sum_bound(x).upper; }

}  // namespace zdb
