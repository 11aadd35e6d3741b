#pragma once

#include <optional>
#include <string>

#include "zdb/interval.hpp"

namespace zdb {

enum class ZeroFreeRegionId { Classical, Intermediate, Littlewood, KorobovVinogradov };
enum class TRange { R1, R2, R3, R4 };

std::string to_string(ZeroFreeRegionId id);
std::string to_string(TRange r);

struct RangeStraddle : std::domain_error {
    using std::domain_error::domain_error;
};

// All functions of the height T take L = log T, since the interesting T
// (e^481958, exp(6.7e12)) are far outside any floating range.

Interval log_3e12(unsigned bits);

// Closed log T interval of a range; R1 starts at log(3e12), R4 ends at +inf.
Interval trange_logT(TRange r, unsigned bits);
// Range holding every point of logT; boundary points go to the lower range.
// Heights below 3e12 are reported as R1 (see below_verified_height).
TRange trange_of(const Interval& logT);
bool below_verified_height(const Interval& logT);

// Natural zero-free region for a range.
ZeroFreeRegionId region_of(TRange r);

// g(T) with no zeros for sigma >= 1 - g(T).
Interval zero_free_gap(ZeroFreeRegionId region, const Interval& logT);

// J(T) = log T / 6 + loglog T + log 0.618.
Interval j_function(const Interval& logT);
// Certified J(T) < log T / 4 + 1.8521.
bool j_bound_holds(const Interval& logT);

// Region whose gap certifiably beats the other three, or nothing on overlap.
std::optional<ZeroFreeRegionId> widest_region(const Interval& logT);

// M(alpha, T) = 70.6995 T^{B(1-alpha)^{3/2}} (log T)^{2/3}, B = 4.43795.
Interval richert_M(const Interval& alpha, const Interval& T);
Interval log_richert_M(const Interval& alpha, const Interval& logT);

// |N(T) - (T/2pi) log(T/(2 pi e))| <= 0.1038 log T + 0.2573 loglog T + 9.3675.
Interval nt_main(const Interval& T);
Interval nt_error(const Interval& T);
Interval nt_upper(const Interval& T);
Interval nt_lower(const Interval& T);

// |Gamma(sigma + it)| <= sqrt(2 pi) |t|^{sigma - 1/2} exp(-pi|t|/2 + 1/(6|z|)).
Interval stirling_gamma_upper(const Interval& sigma, const Interval& t, const Interval& z_abs);

struct DivisorSumBound {
    Interval upper;
    Interval lower;
    bool quarter_form_applies = false;  // sum <= x log^3 x / 4 claimed for x >= 433
    bool unit_form_applies = false;     // sum <= x log^3 x claimed for x >= 7
    Interval quarter_form;              // x log^3 x / 4
    Interval unit_form;                 // x log^3 x
};

// sum_{n<=x} d(n)^2 = D1 x log^3 x + D2 x log^2 x + D3 x log x + D4 x
//                     + theta (9.73 x^{3/4} log x + 0.73 x^{1/2}).
DivisorSumBound divisor_sum_bound(const Interval& x);
Interval divisor_sum_upper(const Interval& x);

namespace constants {
Interval A(unsigned bits);   // 70.6995
Interval B(unsigned bits);   // 4.43795
Interval D1(unsigned bits);  // 1.01e12
Interval D2(unsigned bits);  // 7.26e6
}  // namespace constants

}  // namespace zdb
