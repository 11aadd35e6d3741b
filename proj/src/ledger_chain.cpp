#include <algorithm>
#include <map>
#include <mutex>

#include "ledger_internal.hpp"

namespace zdb {

namespace {

void check_sigma(const Interval& sigma) {
    if (mpfr_cmp_ui(sigma.hi(), 1) >= 0) throw SingularExponent("sigma = 1 makes the X, Y exponents singular");
    if (mpfr_cmp_d(sigma.lo(), 0.98) < 0) throw DomainError("sigma must lie in [0.98, 1)");
}

ledger::UL ul_of(const Interval& sigma, const Interval& logT) {
    check_sigma(sigma);
    return {1 - sigma, logT.with_prec(sigma.bits())};
}

}  // namespace

Interval log_x_of(const Interval& sigma, const Interval& logT) { return ledger::log_x(ul_of(sigma, logT)); }
Interval log_y_of(const Interval& sigma, const Interval& logT) { return ledger::log_y(ul_of(sigma, logT)); }
Interval x_of(const Interval& sigma, const Interval& logT) { return exp(log_x_of(sigma, logT)); }
Interval y_of(const Interval& sigma, const Interval& logT) { return exp(log_y_of(sigma, logT)); }

}  // namespace zdb

namespace zdb::ledger {

const TRange kRanges[4] = {TRange::R1, TRange::R2, TRange::R3, TRange::R4};

const char* budget_str(TRange r) {
    static const char* s[] = {"98.99", "98.864", "81.93", "52.51"};
    return s[static_cast<int>(r)];
}

Q q(const std::string& dec) {
    std::string mant = dec;
    long e10 = 0;
    if (auto p = dec.find_first_of("eE"); p != std::string::npos) {
        mant = dec.substr(0, p);
        e10 = std::stol(dec.substr(p + 1));
    }
    std::string digits;
    for (char c : mant)
        if (c != '.') digits += c;
    if (const auto dot = mant.find('.'); dot != std::string::npos)
        e10 -= static_cast<long>(mant.size() - dot - 1);
    // a leading 0 would make cpp_int read octal
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
    Q v{boost::multiprecision::cpp_int(digits)};
    boost::multiprecision::cpp_int ten = 1;
    for (long i = 0; i < (e10 < 0 ? -e10 : e10); ++i) ten *= 10;
    return e10 < 0 ? v / Q(ten) : v * Q(ten);
}

Interval to_interval(const Q& v, unsigned bits) {
    return Interval::dec(numerator(v).str(), bits) / Interval::dec(denominator(v).str(), bits);
}

std::string q_str(const Q& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

const Consts& K(unsigned bits) {
    static std::mutex mu;
    static std::map<unsigned, Consts> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(bits);
    if (it != cache.end()) return it->second;
    Consts c{constants::A(bits), constants::B(bits), constants::D1(bits), constants::D2(bits),
             Interval(bits), Interval(bits), Interval(bits), ln(Interval(3, bits)), const_ln2(bits),
             ln(Interval(10, bits)), const_pi(bits), Interval(bits)};
    c.logA = ln(c.A);
    c.logD1 = ln(c.D1);
    c.logD2 = ln(c.D2);
    c.b5 = c.B * pow(Interval(5, bits), Interval::ratio(3, 2, bits));
    return cache.emplace(bits, std::move(c)).first->second;
}

std::optional<UL> clip(const Interval& u, const Interval& l, ZeroFreeRegionId reg) {
    const Interval gap = zero_free_gap(reg, l);
    if (mpfr_greater_p(gap.lo(), u.hi())) return std::nullopt;
    if (mpfr_less_p(u.lo(), gap.lo())) return UL{u.with_lo(gap), l};
    return UL{u, l};
}

Interval log_m3(const UL& p) {
    const auto& k = K(p.u.bits());
    const unsigned bits = p.u.bits();
    const Interval l3 = p.l + k.log3;
    return k.logA + k.B * pow(5 * p.u, Interval::ratio(3, 2, bits)) * l3 + Interval::ratio(2, 3, bits) * ln(l3);
}

Interval u_log_y(const UL& p) {
    const auto& k = K(p.u.bits());
    const unsigned bits = p.u.bits();
    return Interval::ratio(7, 12, bits) * (k.logD2 + log_m3(p)) + Interval::ratio(1661, 1200, bits) * ln(p.l);
}

Interval u_log_x(const UL& p) {
    const auto& k = K(p.u.bits());
    return (k.logD1 + log_m3(p) + 5 * ln(p.l)) / 3;
}

Interval log_y(const UL& p) { return div_nonneg(u_log_y(p), p.u); }
Interval log_x(const UL& p) { return div_nonneg(u_log_x(p), p.u); }

namespace {

bool kv_tail(const UL& p) { return !p.l.hi_finite(); }

// lambda / (u l)
Interval lam_ul(const UL& p) {
    const unsigned bits = p.u.bits();
    const Interval one(1, bits);
    if (!kv_tail(p)) return log_pow_ratio(p.l, one, one) / p.u;
    const Interval kv = Interval::dec("53.989", bits) *
                        pow(log_pow_ratio(p.l, Interval(4, bits), one), Interval::ratio(1, 3, bits));
    if (p.u.contains_zero()) return kv;
    return min(log_pow_ratio(p.l, one, one) / p.u, kv);
}

}  // namespace

Interval inv_ul(const UL& p) {
    const unsigned bits = p.u.bits();
    if (!kv_tail(p)) return 1 / (p.u * p.l);
    const Interval one(1, bits);
    const Interval kv =
        Interval::dec("53.989", bits) * pow(log_pow_ratio(p.l, one, one), Interval::ratio(1, 3, bits));
    if (p.u.contains_zero()) return kv;
    return min(1 / (p.u * p.l), kv);
}

Interval lam3_ul(const UL& p) {
    // log(l + log 3) <= lambda + log 3 / l
    const auto& k = K(p.u.bits());
    return lam_ul(p) + ln(1 + k.log3 / p.l) * inv_ul(p);
}

Interval ratio_y(const UL& p) {
    const auto& k = K(p.u.bits());
    const unsigned bits = p.u.bits();
    const Interval c = Interval::ratio(7, 12, bits);
    return c * (k.logD2 + k.logA) * inv_ul(p) + c * k.b5 * sqrt(p.u) * (1 + k.log3 / p.l) +
           c * Interval::ratio(2, 3, bits) * lam3_ul(p) + Interval::ratio(1661, 1200, bits) * lam_ul(p);
}

Interval c0_of(const Interval& logY) {
    const unsigned bits = logY.bits();
    const Interval t = exp(-logY);
    const Interval D = Interval::hull_of(Interval(0, bits), Interval::dec("1e-5", bits));
    return (1 - t * (1 - t / 2) - D) / 2;
}

Chain chain(const UL& p) {
    const auto& k = K(p.u.bits());
    const unsigned bits = p.u.bits();
    Chain c{log_y(p), Interval(bits), Interval(bits), Interval(bits), Interval(bits), Interval(bits)};
    const Interval one(1, bits);
    c.c0 = c0_of(c.logY);
    c.C1 = c.c0 / ((1 + log_pow_ratio(c.logY, one, one)) / k.ln2 - 1 / c.logY);
    const Interval c109 = Interval::dec("0.109", bits);
    c.C3 = c109 / sqr(c.C1);
    const Interval alpha = 1 - 5 * p.u;
    c.C2 = 1 - Interval::dec("1e-4", bits) - Interval::dec("2.427e11", bits) * c.C3 * exp(1 / (6 * alpha)) / k.D1 -
           Interval::dec("1e-70", bits);
    c.C4 = c109 * c.c0 / (pown(c.C1, 3) * c.C2);
    return c;
}

Interval c5_of(const Chain& c, const Interval& ry) { return 32 * c.C4 * pown(ry, 6); }

Interval script_c(const UL& p, const Interval& c5) {
    const auto& k = K(p.u.bits());
    const unsigned bits = p.u.bits();
    return c5 * pow(k.D2 * k.A, Interval::ratio(7, 6, bits)) *
           pow(Interval(3, bits), Interval::dec("57.8875", bits) * pow(p.u, Interval::ratio(3, 2, bits))) *
           pow(1 + k.log3 / p.l, Interval::ratio(7, 9, bits));
}

}  // namespace zdb::ledger
