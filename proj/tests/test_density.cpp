#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "zdb/density.hpp"

using namespace zdb;

namespace {

constexpr unsigned kBits = 128;

Interval D(const char* s) { return Interval::dec(s, kBits); }
Interval N(long v) { return Interval(v, kBits); }

// |x - v| < 1e-13 |v| for a decimal oracle value v quoted to 15 digits
bool near(const Interval& x, const char* v) {
    const Interval d = Interval::dec(v, kBits);
    return certainly_lt(abs(x - d), Interval::dec("1e-13", kBits) * abs(d));
}
Interval R(long p, long q) { return Interval::ratio(p, q, kBits); }

}  // namespace

TEST_CASE("printed tables") {
    CHECK(table::c1_general(TRange::R1, kBits).contains(D("4.68e23")));
    CHECK(table::c1_prime(TRange::R4, kBits).contains(D("4.72e20")));
    CHECK(table::c2_general(kBits).contains(D("7.65e10")));
    CHECK(table::third_term(kBits).contains(D("0.27")));
    CHECK(table::theorem2_constant(kBits).contains(D("4.45e12")));
    CHECK(std::string(table::c1_prime_str(TRange::R2)) == "1.89e23");
}

TEST_CASE("theorem1 forms at sigma = 1") {
    const Interval one = N(1), l = N(100);
    // mpmath: 2.35514342240268e46 and 1.64922759228529e46
    const Interval s = theorem1_simple(one, l);
    CHECK(overlaps(s, D("1.89e23") * pow(l, R(10393, 900))));
    CHECK(near(s, "2.35514342240268e46"));

    const Interval g = theorem1_general(one, l);
    const Interval expect = (D("4.59e23") * pow(l, R(19703, 1800)) + D("7.65e10") * pow(l, R(503, 45)) +
                             D("0.27") * pow(l, D("1.4"))) *
                            ln(l);
    CHECK(overlaps(g, expect));
    CHECK(near(g, "1.64922759228529e46"));
}

TEST_CASE("theorem1_general has the third-term floor") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> S(0.98, 1.0), L(29.0, 400.0);
    for (int i = 0; i < 50; ++i) {
        const Interval s = Interval::exact(S(rng), kBits), l = Interval::exact(L(rng), kBits);
        if (!overlaps(l, D("46.2")) && !overlaps(l, D("170.2")))
            CHECK(certainly_le(D("0.27") * pow(l, D("1.4")) * ln(l), theorem1_general(s, l)));
    }
}

TEST_CASE("theorem1_general at sigma = 0.98, T = 1e13") {
    const Interval l = ln(D("1e13"));
    const Interval g = theorem1_general(D("0.98"), l);
    CHECK(g.bounded());
    const Interval w = g.width() / g;
    CHECK(certainly_lt(w, D("1e-12")));
}

TEST_CASE("theorem1_simple against the general form") {
    const Interval s = D("0.99"), l = N(200);
    CHECK(certainly_le(theorem1_general(s, l), theorem1_simple(s, l)));
    CHECK_THROWS_AS(theorem1_simple(s, Interval::dec("170", "171", kBits)), RangeStraddle);
    CHECK_THROWS_AS(theorem1_simple(D("0.5"), l), DomainError);
}

TEST_CASE("theorem1_simple decreases in sigma") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> S(0.98, 1.0);
    const Interval l = N(300);
    for (int i = 0; i < 20; ++i) {
        double a = S(rng), b = S(rng);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        CHECK(certainly_le(theorem1_simple(Interval::exact(b, kBits), l), theorem1_simple(Interval::exact(a, kBits), l)));
    }
}

TEST_CASE("theorem2") {
    const Interval l = D("6.7e12"), one = N(1);
    const Interval t = theorem2(one, l);
    // mpmath: 5.76795141735103e160
    CHECK(near(t, "5.76795141735103e160"));
    CHECK(certainly_le(t, theorem1_simple(one, l)));
    CHECK(theorem2(D("0.999"), D("1e13")).bounded());
    CHECK_THROWS_AS(theorem2(one, N(1000)), DomainError);
}

TEST_CASE("Ingham-type comparator") {
    const Interval l = ln(D("3e12"));
    CHECK(overlaps(ingham_type(N(1), l, N(5)), 5 * pown(l, 3)));
    // mpmath: 109758.135261324
    CHECK(near(ingham_type(D("0.98"), l, N(1)), "109758.135261324"));
    CHECK_THROWS_AS(ingham_type(N(1), l, D("0.5")), DomainError);
}

TEST_CASE("crossover threshold") {
    const Interval l = N(10000);
    // C = C'1: sigma* = 1 - (3/8)(7693/900) loglog T/log T = 0.997047702146599
    const Interval c = D("4.42e22");
    const Interval s = sigma_crossover(l, c, c);
    CHECK(near(s, "0.997047702146599"));
    CHECK(certainly_lt(N(0), s));
    CHECK(certainly_lt(s, N(1)));

    // threshold is negative at T = 3e12 (mpmath: -0.0759)
    CHECK_THROWS_AS(sigma_crossover(ln(D("3e12")), N(1), D("2.15e23")), NoCrossover);
}

TEST_CASE("the simplified crossover drops the u^{3/2} term") {
    // At T = e^10000 with sigma 0.001 below the simplified threshold the
    // Ingham-type bound is still the smaller one: mpmath gives log theorem1
    // = 421.35 against log Ingham = 185.17.
    const Interval l = N(10000);
    const Interval s = sigma_crossover(l, N(1), D("4.42e22")) - D("0.001");
    const Interval sp = s.lower();
    CHECK(certainly_lt(ingham_type(sp, l, N(1)), theorem1_simple(sp, l)));
    CHECK(ln(theorem1_simple(sp, l)).subset_of(Interval::dec("421.34", "421.36", kBits)));
    CHECK(ln(ingham_type(sp, l, N(1))).subset_of(Interval::dec("185.16", "185.18", kBits)));
}

TEST_CASE("regime boundary") {
    const Interval b = t_regime_boundary(N(1), D("4.72e20"));
    CHECK(certainly_le(b, D("6.7e12")));
    const Interval big = t_regime_boundary(N(1), D("4.72e22"));
    CHECK(certainly_lt(b, big));
    const Interval c1000 = t_regime_boundary(N(1000), D("4.72e20"));
    CHECK(certainly_lt(c1000, b));
}
