#include "zdb/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <boost/multiprecision/cpp_int.hpp>

namespace zdb::oracle {

namespace {

void check_range(std::uint64_t x) {
    if (x < 2 || x > kSieveCap) throw CapExceeded("x must lie in [2, 1e8]");
}

// Bernoulli numbers B_0..B_n (Akiyama-Tanigawa over exact rationals).
std::vector<Real> bernoulli_table(int n) {
    using boost::multiprecision::cpp_rational;
    std::vector<cpp_rational> a(n + 1);
    std::vector<Real> b(n + 1);
    for (int m = 0; m <= n; ++m) {
        a[m] = cpp_rational(1, m + 1);
        for (int j = m; j >= 1; --j) a[j - 1] = j * (a[j - 1] - a[j]);
        b[m] = Real(numerator(a[0])) / Real(denominator(a[0]));
    }
    return b;
}

constexpr int kMaxTerms = 100;

const std::vector<Real>& bernoulli() {
    static const std::vector<Real> table = bernoulli_table(2 * kMaxTerms + 2);
    return table;
}

std::string sci(const Real& v) { return v.str(100, std::ios_base::scientific); }

}  // namespace

std::vector<std::uint64_t> divisor_sums_at(const std::vector<std::uint64_t>& xs) {
    std::vector<std::uint64_t> out(xs.size());
    if (xs.empty()) return out;
    for (auto x : xs) check_range(x);
    std::vector<std::size_t> order(xs.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto i, auto j) { return xs[i] < xs[j]; });
    const std::uint64_t xmax = xs[order.back()];

    constexpr std::uint64_t seg = 1 << 18;
    std::vector<std::uint32_t> cnt(seg);
    std::uint64_t acc = 0;
    std::size_t qi = 0;
    for (std::uint64_t lo = 1; lo <= xmax; lo += seg) {
        const std::uint64_t hi = std::min(lo + seg - 1, xmax);
        std::fill(cnt.begin(), cnt.end(), 0);
        // each divisor pair (i, n/i) with i <= n/i
        for (std::uint64_t i = 1; i * i <= hi; ++i) {
            const std::uint64_t sq = i * i;
            std::uint64_t n = std::max(sq, (lo + i - 1) / i * i);
            for (; n <= hi; n += i) cnt[n - lo] += n == sq ? 1 : 2;
        }
        for (std::uint64_t n = lo; n <= hi; ++n) {
            const std::uint64_t d = cnt[n - lo];
            acc += d * d;
            while (qi < order.size() && xs[order[qi]] == n) out[order[qi++]] = acc;
        }
    }
    return out;
}

std::uint64_t divisor_sum_bruteforce(std::uint64_t x) { return divisor_sums_at({x}).front(); }

std::uint64_t divisor_sum_pairs(std::uint64_t x) {
    if (x > 10000) throw CapExceeded("pair counting is limited to x <= 1e4");
    std::vector<std::uint64_t> c(x + 1, 0);
    for (std::uint64_t a = 1; a <= x; ++a)
        for (std::uint64_t b = 1; a * b <= x; ++b) ++c[a * b];
    std::uint64_t s = 0;
    for (std::uint64_t n = 1; n <= x; ++n) s += c[n] * c[n];
    return s;
}

std::uint32_t divisor_count(std::uint64_t n) {
    std::uint32_t d = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        std::uint32_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        d *= e + 1;
    }
    return n > 1 ? 2 * d : d;
}

std::pair<Real, Real> log_abs_gamma(const Real& sigma, const Real& t) {
    using boost::multiprecision::abs;
    using boost::multiprecision::atan2;
    using boost::multiprecision::ceil;
    using boost::multiprecision::cos;
    using boost::multiprecision::log;
    using boost::multiprecision::sqrt;

    if (t == 0 && sigma <= 0 && sigma == ceil(sigma)) throw PoleError("Gamma has a pole at a nonpositive integer");
    long shift = 0;
    if (sigma < 64) shift = static_cast<long>(ceil(Real(64) - sigma));
    Real S = 0;
    for (long j = 0; j < shift; ++j) {
        const Real x = sigma + j;
        S += log(x * x + t * t) / 2;
    }
    const Real x = sigma + shift;
    const Real r2 = x * x + t * t;
    const Real logw = log(r2) / 2;
    const Real theta = atan2(t, x);
    const Real pi = boost::math::constants::pi<Real>();
    Real main = (x - Real(0.5)) * logw - t * theta - x + log(2 * pi) / 2;

    // w^{-(2k-1)} for k = 1, 2, ...
    Real pr = x / r2, pi_ = -t / r2;
    const Real zr = (x * x - t * t) / (r2 * r2), zi = -2 * x * t / (r2 * r2);
    const auto& B = bernoulli();
    const Real absw = sqrt(r2);
    const Real sec_half = 1 / sqrt((1 + x / absw) / 2);
    const Real target = Real(1) / Real(boost::multiprecision::pow(Real(2), 320));
    Real rem = 0;
    Real wpow = absw;  // |w|^{2k-1}
    for (int k = 1; k <= kMaxTerms; ++k) {
        main += B[2 * k] / (Real(2 * k) * (2 * k - 1)) * pr;
        const Real nr = pr * zr - pi_ * zi;
        pi_ = pr * zi + pi_ * zr;
        pr = nr;
        wpow *= r2;
        const int m = 2 * k + 2;
        rem = abs(B[m]) / (Real(m) * (m - 1) * wpow) * boost::multiprecision::pow(sec_half, m);
        if (rem < target) break;
    }
    const Real err = rem + Real(1) / Real(boost::multiprecision::pow(Real(2), 260));
    return {main - S, err};
}

Interval gamma_reference(const std::string& sigma, const std::string& t, const Precision& prec) {
    const Real s(sigma), tt(t);
    if (boost::multiprecision::abs(tt) > 1000) throw std::domain_error("gamma_reference needs |t| <= 1e3");
    const auto [v, err] = log_abs_gamma(s, tt);
    const Real slack = Real(1) / Real(boost::multiprecision::pow(Real(2), 280));
    const Real lo = boost::multiprecision::exp(v - err) * (1 - slack);
    const Real hi = boost::multiprecision::exp(v + err) * (1 + slack);
    return Interval::dec(sci(lo), sci(hi), prec.bits);
}

Interval gamma_reference(double sigma, double t, const Precision& prec) {
    return gamma_reference(sci(Real(sigma)), sci(Real(t)), prec);
}

Real to_real(mpfr_srcptr v) {
    if (mpfr_inf_p(v)) return mpfr_sgn(v) > 0 ? std::numeric_limits<Real>::infinity()
                                              : -std::numeric_limits<Real>::infinity();
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.110Re", v);
    Real r(buf);
    mpfr_free_str(buf);
    return r;
}

bool encloses(const Interval& x, const Real& v) {
    mpfr_t m;
    mpfr_init2(m, 400);
    mpfr_set_str(m, sci(v).c_str(), 10, MPFR_RNDN);
    const bool ok = mpfr_lessequal_p(x.lo(), m) && mpfr_lessequal_p(m, x.hi());
    mpfr_clear(m);
    return ok;
}

HMInstance hm_random(std::uint64_t seed, int max_R, int max_dim) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    HMInstance inst;
    inst.seed = seed;
    inst.R = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_R));
    inst.dim = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_dim));
    auto draw = [&] {
        Eigen::VectorXcd v(inst.dim);
        for (int i = 0; i < inst.dim; ++i) {
            const double re = U(rng);
            v[i] = {re, U(rng)};
        }
        return v;
    };
    inst.xi = draw();
    for (int r = 0; r < inst.R; ++r) inst.phis.push_back(draw());
    return inst;
}

HMResult hm_test(const HMInstance& inst) {
    // (u, v) = sum u_i conj(v_i); Eigen's v.dot(u) conjugates v.
    auto ip = [](const Eigen::VectorXcd& u, const Eigen::VectorXcd& v) { return v.dot(u); };
    HMResult r;
    const double nxi = inst.xi.norm();
    double gram = 0, rowmax = 0;
    for (const auto& pr : inst.phis) {
        const double a = std::abs(ip(inst.xi, pr));
        r.lhs1 += a;
        r.lhs2_squared += a * a;
        double row = 0;
        for (const auto& ps : inst.phis) row += std::abs(ip(pr, ps));
        gram += row;
        rowmax = std::max(rowmax, row);
    }
    r.rhs1 = nxi * std::sqrt(gram);
    r.rhs2 = nxi * nxi * rowmax;
    r.lhs2_printed = r.lhs1;
    auto le = [](double a, double b) { return a <= b * (1 + 1e-12) + 1e-300; };
    r.holds1 = le(r.lhs1, r.rhs1);
    r.holds2 = le(r.lhs2_squared, r.rhs2);
    r.holds2_printed = le(r.lhs2_printed, r.rhs2);
    return r;
}

std::int64_t mollifier_coeff(std::uint64_t n, std::uint64_t X) {
    if (n < 1 || n > kSieveCap) throw CapExceeded("n must lie in [1, 1e8]");
    std::vector<std::uint64_t> primes;
    std::uint64_t m = n;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        primes.push_back(p);
        while (m % p == 0) m /= p;
    }
    if (m > 1) primes.push_back(m);
    std::int64_t a = 0;
    const std::size_t k = primes.size();
    for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
        std::uint64_t d = 1;
        int bits = 0;
        for (std::size_t i = 0; i < k && d <= X; ++i)
            if (mask >> i & 1) {
                d *= primes[i];
                ++bits;
            }
        if (d <= X) a += bits % 2 ? -1 : 1;
    }
    return a;
}

}  // namespace zdb::oracle
