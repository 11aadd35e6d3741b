#pragma once

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "zdb/bounds.hpp"
#include "zdb/density.hpp"
#include "zdb/ledger.hpp"
#include "zdb/quadrature.hpp"

namespace zdb::ledger {

using Q = boost::multiprecision::cpp_rational;

// Exact value of a decimal literal such as "1.04e24".
Q q(const std::string& dec);
Interval to_interval(const Q& v, unsigned bits);
std::string q_str(const Q& v);

struct Consts {
    Interval A, B, D1, D2, logA, logD1, logD2, log3, ln2, ln10, pi, b5;  // b5 = B 5^{3/2}
};
const Consts& K(unsigned bits);

// (u, l) with u = 1 - sigma, l = log T; u clipped to the zero-free gap.
struct UL {
    Interval u, l;
};
std::optional<UL> clip(const Interval& u, const Interval& l, ZeroFreeRegionId reg);

Interval log_m3(const UL& p);   // log M(alpha, 3T)
Interval u_log_y(const UL& p);  // u log Y
Interval u_log_x(const UL& p);
Interval log_y(const UL& p);
Interval log_x(const UL& p);
Interval inv_ul(const UL& p);    // 1/(u l), tail form on unbounded l (KV gap only)
Interval lam3_ul(const UL& p);   // log(l + log 3)/(u l), same
Interval ratio_y(const UL& p);   // log Y / log T

struct Chain {
    Interval logY, c0, C1, C2, C3, C4;
};
Chain chain(const UL& p);
Interval c0_of(const Interval& logY);
// C5 and script C with the given log Y / log T factor.
Interval c5_of(const Chain& c, const Interval& ry);
Interval script_c(const UL& p, const Interval& c5);

// Hypotheses shared across checks.
const char* budget_str(TRange r);
extern const TRange kRanges[4];

enum class Kind { Const, Exact, Box, Custom };

struct ExactOut {
    bool holds;
    Interval computed;
    Interval claimed;
};

struct Claim {
    std::string id, what;
    Direction dir = Direction::Le;
    std::string claimed_text;
    Kind kind = Kind::Const;
    std::function<Interval(unsigned)> claimed;  // default: the decimal claimed_text
    std::function<Interval(const Precision&)> value;
    std::function<ExactOut(unsigned)> exact;
    // Box claims
    std::vector<std::string> dims;  // "u", "logT" or an auxiliary name
    std::function<Box(unsigned)> root;
    std::vector<SplitKind> split;
    BoxFn f;
    std::function<std::vector<Box>(const Box&)> probes;
    std::function<std::optional<Box>(std::mt19937_64&, unsigned)> sample;
    std::function<SubResult(const Precision&)> custom;
    std::string note;
    std::function<std::string(const Precision&)> extra_note;
};

struct CheckDef {
    std::string id, anchor, notes;
    std::vector<std::string> symbols;
    std::vector<Claim> claims;
};

const std::vector<CheckDef>& registry();

SubResult evaluate(const Claim& c, const Precision& prec);
ParamBox to_param_box(const std::vector<std::string>& dims, const Box& b);

// Certified extremum of a (u, log T) expression over a range box.
using RangeFn = std::function<Interval(const UL&)>;
BnbResult range_extremum(TRange r, const RangeFn& fn, Extremum dir, const Precision& prec,
                         std::optional<Interval> claim = std::nullopt, double rel_tol = 1e-7);

// Largest certified gap over the four zero-free regions (KV alone on an
// unbounded log T).
Interval best_gap(const Interval& l);
std::vector<Box> range_probes(const Box& b, const std::function<Interval(const Interval&)>& gap);

}  // namespace zdb::ledger
