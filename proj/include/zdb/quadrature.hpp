#pragma once

#include "zdb/interval.hpp"

namespace zdb {

struct NotDecaying : std::domain_error {
    using std::domain_error::domain_error;
};

struct DepthExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Integrand exp(a v^c - b v) v^p on [v0, inf). Interval parameters are
// read as "every value in the interval"; the bound covers all of them.
struct TailIntegralSpec {
    Interval a;
    Interval c;
    Interval b;
    Interval p;
    Interval v0;
};

// Returns [0, U] with the integral <= U.
Interval tail_upper_bound(const TailIntegralSpec& spec, const Precision& prec);

// Upper bound of int_0^inf v^q e^{-bv} dv = Gamma(q+1)/b^{q+1}.
Interval gamma_kernel_integral(const Interval& q, const Interval& b);

struct GammaSplitBound {
    Interval part1;  // |v| <= A_split
    Interval part2;  // A_split <= |v| <= L
    Interval total;  // |v| <= L
};

// Bounds for int_{-L}^{L} |Gamma(alpha - beta + iv)| dv through
// |Gamma(x + iv)| <= 1/(|x + iv| (x + 1)), integrated exactly.
GammaSplitBound finite_gamma_bound_parts(const Interval& alpha_minus_beta, const Interval& L,
                                         const Interval& A_split);
Interval finite_gamma_bound_integral(const Interval& alpha_minus_beta, const Interval& L,
                                     const Interval& A_split);

}  // namespace zdb
