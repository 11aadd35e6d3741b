#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "zdb/interval.hpp"

namespace zdb::oracle {

// Reference code deliberately avoids the interval module. Only the final
// conversion of gamma_reference to an Interval touches it.

using Real = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<300, boost::multiprecision::digit_base_2>,
    boost::multiprecision::et_off>;

struct CapExceeded : std::domain_error {
    using std::domain_error::domain_error;
};

struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

inline constexpr std::uint64_t kSieveCap = 100000000;

// Exact sum_{n<=x} d(n)^2 by a segmented divisor sieve; 2 <= x <= 1e8.
std::uint64_t divisor_sum_bruteforce(std::uint64_t x);
// Same sums for many x in one sieve pass; results follow the input order.
std::vector<std::uint64_t> divisor_sums_at(const std::vector<std::uint64_t>& xs);
// #{(a,b,c,d): ab = cd <= x}, for x <= 1e4.
std::uint64_t divisor_sum_pairs(std::uint64_t x);
std::uint32_t divisor_count(std::uint64_t n);

// |Gamma(sigma + it)| from the shifted Stirling series with an explicit
// remainder; sigma and t are decimal strings so the point is exact.
Interval gamma_reference(const std::string& sigma, const std::string& t, const Precision& prec);
Interval gamma_reference(double sigma, double t, const Precision& prec);
// log |Gamma| at 300 bits and its absolute error bound.
std::pair<Real, Real> log_abs_gamma(const Real& sigma, const Real& t);

// True iff the interval contains v (v compared at 300 bits).
bool encloses(const Interval& x, const Real& v);
Real to_real(mpfr_srcptr v);

struct HMInstance {
    int R = 1;
    int dim = 1;
    Eigen::VectorXcd xi;
    std::vector<Eigen::VectorXcd> phis;
    std::uint64_t seed = 0;
};

HMInstance hm_random(std::uint64_t seed, int max_R = 8, int max_dim = 8);

struct HMResult {
    double lhs1 = 0, rhs1 = 0;
    bool holds1 = false;
    double lhs2_squared = 0, rhs2 = 0;  // sum |(xi,phi_r)|^2 <= |xi|^2 max_r sum_s |(phi_r,phi_s)|
    bool holds2 = false;
    double lhs2_printed = 0;  // sum |(xi,phi_r)| against the same right side
    bool holds2_printed = false;
};

HMResult hm_test(const HMInstance& inst);

// a(n) = sum_{d | n, d <= X} mu(d).
std::int64_t mollifier_coeff(std::uint64_t n, std::uint64_t X);

}  // namespace zdb::oracle
