#pragma once

#include <string>

#include "zdb/bounds.hpp"
#include "zdb/interval.hpp"

namespace zdb {

struct NoCrossover : std::domain_error {
    using std::domain_error::domain_error;
};

struct BracketFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class DensityForm { ThreeHalves, Linear };

// A T^{B u^{3/2}} (log T)^{c_num/c_den}, or A T^{B u} (log T)^c for Linear.
struct DensityBound {
    Interval A;
    Interval B;
    long c_num;
    long c_den;
    DensityForm form;

    Interval eval(const Interval& sigma, const Interval& logT) const;
};

// Printed constant tables.
namespace table {
Interval c1_general(TRange r, unsigned bits);  // 4.68e23, 4.59e23, 1.45e23, 9.77e21
Interval c1_prime(TRange r, unsigned bits);    // 2.15e23, 1.89e23, 4.42e22, 4.72e20
Interval c2_general(unsigned bits);            // 7.65e10
Interval third_term(unsigned bits);            // 0.27
Interval theorem2_constant(unsigned bits);     // 4.45e12
const char* c1_general_str(TRange r);
const char* c1_prime_str(TRange r);
}  // namespace table

// sigma in [0.98, 1]; logT >= log 3. Heights below 3e12 use the R1 constants.
Interval theorem1_general(const Interval& sigma, const Interval& logT);
Interval theorem1_simple(const Interval& sigma, const Interval& logT);
Interval theorem2(const Interval& sigma, const Interval& logT);
Interval ingham_type(const Interval& sigma, const Interval& logT, const Interval& C);

// sigma* = 1 - (3/8)(log(C'1/C)/log T + (7693/900) loglog T / log T).
Interval sigma_crossover(const Interval& logT, const Interval& C, const Interval& C1prime);
// Same comparison keeping the 57.8875 u^{3/2} term: smallest u with
// (8/3)u - 57.8875 u^{3/2} >= (log(C'1/C) + (7693/900) loglog T)/log T.
Interval sigma_crossover_implicit(const Interval& logT, const Interval& C, const Interval& C1prime);

// Bracket in log T of the point where the KV gap meets 1 - sigma*.
Interval t_regime_boundary(const Interval& C, const Interval& C1prime);

}  // namespace zdb
