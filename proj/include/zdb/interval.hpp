#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <mpfr.h>

namespace zdb {

struct Precision {
    unsigned bits = 128;
    std::uint64_t max_subdivisions = 1000000;
};

struct DivisionByZeroInterval : std::domain_error {
    using std::domain_error::domain_error;
};

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Closed interval [lo, hi] over the extended reals. Endpoints are MPFR
// numbers; every operation rounds lo down and hi up. NaN is never stored.
class Interval {
public:
    explicit Interval(unsigned bits = 128);
    Interval(long v, unsigned bits);
    Interval(const Interval& o);
    Interval(Interval&& o) noexcept;
    Interval& operator=(const Interval& o);
    Interval& operator=(Interval&& o) noexcept;
    ~Interval();

    // Enclosure of a decimal literal such as "0.3386" or "1.01e12".
    static Interval dec(std::string_view s, unsigned bits);
    // Hull of two decimal literals.
    static Interval dec(std::string_view lo, std::string_view hi, unsigned bits);
    static Interval exact(double v, unsigned bits);
    static Interval ratio(long num, long den, unsigned bits);
    static Interval hull_of(const Interval& a, const Interval& b);
    static Interval from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, unsigned bits);
    static Interval pos_inf_ray(const Interval& from);  // [from.lo, +inf]

    unsigned bits() const { return static_cast<unsigned>(mpfr_get_prec(lo_)); }
    mpfr_srcptr lo() const { return lo_; }
    mpfr_srcptr hi() const { return hi_; }
    double lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }
    double mid_d() const;

    bool is_point() const { return mpfr_equal_p(lo_, hi_) != 0; }
    bool lo_finite() const { return mpfr_number_p(lo_) != 0; }
    bool hi_finite() const { return mpfr_number_p(hi_) != 0; }
    bool bounded() const { return lo_finite() && hi_finite(); }
    bool contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
    bool contains(const Interval& x) const;
    bool subset_of(const Interval& x) const { return x.contains(*this); }

    Interval lower() const;  // [lo, lo]
    Interval upper() const;  // [hi, hi]
    Interval midpoint() const;
    Interval width() const;  // upper bound of hi - lo, as a point
    Interval with_lo(const Interval& src) const;  // [src.lo, hi]
    Interval with_hi(const Interval& src) const;  // [lo, src.hi]
    Interval with_prec(unsigned bits) const;

    // Decimal strings, lower rounded down and upper rounded up.
    std::string lo_str(int digits = 40) const;
    std::string hi_str(int digits = 40) const;
    std::string str(int digits = 12) const;

    friend Interval operator-(const Interval& a);
    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    friend Interval operator/(const Interval& a, const Interval& b);

private:
    mpfr_t lo_;
    mpfr_t hi_;
    void check();
};

Interval operator+(const Interval& a, long b);
Interval operator+(long a, const Interval& b);
Interval operator-(const Interval& a, long b);
Interval operator-(long a, const Interval& b);
Interval operator*(const Interval& a, long b);
Interval operator*(long a, const Interval& b);
Interval operator/(const Interval& a, long b);
Interval operator/(long a, const Interval& b);

// Certainly-true comparisons.
bool certainly_lt(const Interval& a, const Interval& b);
bool certainly_le(const Interval& a, const Interval& b);
inline bool certainly_gt(const Interval& a, const Interval& b) { return certainly_lt(b, a); }
inline bool certainly_ge(const Interval& a, const Interval& b) { return certainly_le(b, a); }
bool overlaps(const Interval& a, const Interval& b);

Interval exp(const Interval& a);
Interval ln(const Interval& a);
Interval sqrt(const Interval& a);
Interval pow(const Interval& a, const Interval& b);
Interval pown(const Interval& a, long n);
Interval sqr(const Interval& a);
Interval asinh(const Interval& a);
Interval abs(const Interval& a);
Interval min(const Interval& a, const Interval& b);
Interval max(const Interval& a, const Interval& b);
Interval intersect(const Interval& a, const Interval& b);  // throws if disjoint

// a / b for a >= 0, b >= 0 with x/0 = +inf.
Interval div_nonneg(const Interval& a, const Interval& b);

Interval const_pi(unsigned bits);
Interval const_e(unsigned bits);
Interval const_ln2(unsigned bits);

// (log x)^k / x^q for x > 1, k >= 0, q > 0; increasing below e^{k/q},
// decreasing above, with value 0 at +inf.
Interval log_pow_ratio(const Interval& x, const Interval& k, const Interval& q);

// x^p (log x)^k exp(a x - c x^q) for x >= e, k >= 0, a >= 0, c > 0, q >= 1.
// Monotone pieces are located from the sign of the log-derivative; the
// value at +inf is 0 when the decay term dominates.
Interval pow_exp_decay(const Interval& x, const Interval& p, const Interval& k,
                       const Interval& a, const Interval& c, const Interval& q);

enum class SplitKind { Arithmetic, Geometric };

// Halves of x; geometric splits use sqrt(lo*hi), and [a, inf] splits at 16a.
std::pair<Interval, Interval> bisect(const Interval& x, SplitKind kind);

}  // namespace zdb
