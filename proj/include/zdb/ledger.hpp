#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zdb/bounds.hpp"
#include "zdb/interval.hpp"

namespace zdb {

struct SingularExponent : std::domain_error {
    using std::domain_error::domain_error;
};

struct UnknownCheck : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// log X and log Y for alpha = 5 sigma - 4; sigma must stay below 1.
//   X = (D1 M(alpha,3T) log^5 T)^{1/(3(1-sigma))}
//   Y = (D2 M(alpha,3T))^{7/(12(1-sigma))} (log T)^{1661/(1200(1-sigma))}
Interval log_x_of(const Interval& sigma, const Interval& logT);
Interval log_y_of(const Interval& sigma, const Interval& logT);
// exp of the above; +inf once the value leaves the MPFR exponent range.
Interval x_of(const Interval& sigma, const Interval& logT);
Interval y_of(const Interval& sigma, const Interval& logT);

using Box = std::vector<Interval>;

enum class Extremum { Min, Max };

struct BnbOptions {
    std::vector<SplitKind> split;            // per dimension, default Arithmetic
    std::optional<Interval> claim;           // stop early once decided against this bound
    double rel_tol = 1e-7;                   // refinement target once decided
    std::uint64_t refine_cap = 400;          // extra subdivisions after the decision
    std::function<std::vector<Box>(const Box&)> probes;  // points evaluated for the inner bound
};

struct BnbResult {
    Interval extremum;     // certified enclosure of the min or max
    Box argopt_hull;       // hull of boxes that may still hold the optimiser
    Box witness;           // point box attaining the inner bound
    std::uint64_t subdivisions = 0;
    bool exhausted = false;  // budget ran out before the claim was decided
};

// f returns nothing on boxes that are infeasible. The extremum of f over the
// feasible part of root is enclosed; subdivision takes the dimension with the
// widest relative width.
using BoxFn = std::function<std::optional<Interval>(const Box&)>;
BnbResult branch_and_bound_extremum(const BoxFn& f, const Box& root, Extremum dir, const Precision& prec,
                                    const BnbOptions& opt = {});

enum class Verdict { Pass, Fail, Inconclusive };
enum class Direction { Le, Ge, Lt, Eq };

std::string to_string(Verdict v);
std::string to_string(Direction d);

// Parameter box in the natural variables: sigma, log T and named auxiliary ranges.
struct ParamBox {
    std::optional<Interval> sigma;
    std::optional<Interval> logT;
    std::vector<std::pair<std::string, Interval>> aux;
    std::string str() const;
};

struct SubResult {
    std::string id;  // e.g. L26a
    std::string what;
    Verdict verdict = Verdict::Inconclusive;
    Interval computed;
    Interval claimed;
    std::string claimed_text;
    Direction direction = Direction::Le;
    std::uint64_t subdivisions = 0;
    ParamBox box;
    std::optional<ParamBox> witness;
    std::string note;
};

struct CheckResult {
    std::string id;
    Verdict verdict = Verdict::Inconclusive;
    Interval computed;
    Interval claimed;
    std::string claimed_text;
    Direction direction = Direction::Le;
    std::uint64_t subdivisions = 0;
    std::string paper_anchor;
    std::string notes;
    std::vector<SubResult> subs;
};

std::vector<std::string> check_ids();      // L01..L32
std::vector<std::string> subclaim_ids();   // every L..x id
CheckResult verify(const std::string& id, const Precision& prec);
std::vector<CheckResult> run_all(const Precision& prec);

struct SpotAudit {
    int samples = 0;
    int violations = 0;  // points where the claim is certainly false
    int skipped = 0;     // infeasible draws
};

// Re-evaluates a sub-claim at random feasible points of its box at the given
// precision. Constant claims are evaluated once.
SpotAudit spot_audit(const std::string& sub_id, int samples, std::uint64_t seed, unsigned bits);

}  // namespace zdb
