#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

#include "ledger_internal.hpp"

namespace zdb {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

std::string to_string(Direction d) {
    switch (d) {
        case Direction::Le: return "<=";
        case Direction::Ge: return ">=";
        case Direction::Lt: return "<";
        case Direction::Eq: return "=";
    }
    return "?";
}

std::string ParamBox::str() const {
    std::string s;
    auto add = [&](const std::string& name, const Interval& x) {
        if (!s.empty()) s += ", ";
        s += name + "=" + x.str(12);
    };
    if (sigma) add("sigma", *sigma);
    if (logT) add("logT", *logT);
    for (const auto& [n, x] : aux) add(n, x);
    return s;
}

}  // namespace zdb

namespace zdb::ledger {

namespace {

bool holds(const Interval& v, const Interval& c, Direction d) {
    switch (d) {
        case Direction::Le: return mpfr_lessequal_p(v.hi(), c.lo());
        case Direction::Lt: return mpfr_less_p(v.hi(), c.lo());
        case Direction::Ge: return mpfr_greaterequal_p(v.lo(), c.hi());
        case Direction::Eq: return v.is_point() && c.is_point() && mpfr_equal_p(v.lo(), c.lo());
    }
    return false;
}

bool violated(const Interval& v, const Interval& c, Direction d) {
    switch (d) {
        case Direction::Le: return mpfr_greater_p(v.lo(), c.hi());
        case Direction::Lt: return mpfr_greaterequal_p(v.lo(), c.hi());
        case Direction::Ge: return mpfr_less_p(v.hi(), c.lo());
        case Direction::Eq: return !overlaps(v, c);
    }
    return false;
}

Verdict verdict_of(const Interval& v, const Interval& c, Direction d) {
    if (holds(v, c, d)) return Verdict::Pass;
    if (violated(v, c, d)) return Verdict::Fail;
    return Verdict::Inconclusive;
}

Interval claimed_of(const Claim& c, unsigned bits) {
    return c.claimed ? c.claimed(bits) : Interval::dec(c.claimed_text, bits);
}

// Relative distance from the claim, negative when violated; used to pick
// the tightest sub-claim for the check summary.
double margin(const SubResult& s) {
    const double c = std::fabs(s.claimed.mid_d());
    const double scale = c > 0 ? c : 1.0;
    if (s.direction == Direction::Ge) return (s.computed.lo_d() - s.claimed.hi_d()) / scale;
    if (s.direction == Direction::Eq) return 0;
    return (s.claimed.lo_d() - s.computed.hi_d()) / scale;
}

int rank(Verdict v) { return v == Verdict::Fail ? 2 : v == Verdict::Inconclusive ? 1 : 0; }

std::optional<Box> generic_sample(const Claim& c, std::mt19937_64& rng, unsigned bits) {
    const Box root = c.root(bits);
    Box p;
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (std::size_t i = 0; i < root.size(); ++i) {
        const double lo = root[i].lo_d();
        const double hi = root[i].hi_finite() ? root[i].hi_d() : lo * 1e4;
        const bool geo = i < c.split.size() && c.split[i] == SplitKind::Geometric && lo > 0;
        const double t = U(rng);
        double x = geo ? lo * std::pow(hi / lo, t) : lo + (hi - lo) * t;
        x = std::clamp(x, lo, hi);
        Interval xi = Interval::exact(x, bits);
        if (!root[i].contains(xi)) xi = root[i].lower();
        p.push_back(xi);
    }
    return p;
}

}  // namespace

ParamBox to_param_box(const std::vector<std::string>& dims, const Box& b) {
    ParamBox pb;
    for (std::size_t i = 0; i < dims.size() && i < b.size(); ++i) {
        if (dims[i] == "u")
            pb.sigma = 1 - b[i];
        else if (dims[i] == "logT")
            pb.logT = b[i];
        else
            pb.aux.emplace_back(dims[i], b[i]);
    }
    return pb;
}

BnbResult range_extremum(TRange r, const RangeFn& fn, Extremum dir, const Precision& prec,
                         std::optional<Interval> claim, double rel_tol) {
    const unsigned bits = prec.bits;
    const ZeroFreeRegionId reg = region_of(r);
    BoxFn f = [reg, fn](const Box& b) -> std::optional<Interval> {
        auto p = clip(b[0], b[1], reg);
        if (!p) return std::nullopt;
        return fn(*p);
    };
    BnbOptions opt;
    opt.split = {SplitKind::Arithmetic, SplitKind::Geometric};
    opt.claim = std::move(claim);
    opt.rel_tol = rel_tol;
    opt.probes = [reg](const Box& b) {
        return range_probes(b, [reg](const Interval& l) { return zero_free_gap(reg, l); });
    };
    const Box root{Interval(0, bits).with_hi(Interval::dec("0.02", bits)), trange_logT(r, bits)};
    auto res = branch_and_bound_extremum(f, root, dir, prec, opt);
    if (res.exhausted) throw DepthExhausted("branch and bound ran out of subdivisions");
    return res;
}

SubResult evaluate(const Claim& c, const Precision& prec) {
    const unsigned bits = prec.bits;
    SubResult s;
    s.id = c.id;
    s.what = c.what;
    s.direction = c.dir;
    s.claimed_text = c.claimed_text;
    s.note = c.note;
    try {
        switch (c.kind) {
            case Kind::Const: {
                s.claimed = claimed_of(c, bits);
                s.computed = c.value(prec);
                s.verdict = verdict_of(s.computed, s.claimed, c.dir);
                break;
            }
            case Kind::Exact: {
                const ExactOut e = c.exact(bits);
                s.computed = e.computed;
                s.claimed = e.claimed;
                s.verdict = e.holds ? Verdict::Pass : Verdict::Fail;
                break;
            }
            case Kind::Box: {
                s.claimed = claimed_of(c, bits);
                BnbOptions opt;
                opt.split = c.split;
                opt.claim = s.claimed;
                opt.probes = c.probes;
                const Extremum ext = c.dir == Direction::Ge ? Extremum::Min : Extremum::Max;
                const Box root = c.root(bits);
                const BnbResult r = branch_and_bound_extremum(c.f, root, ext, prec, opt);
                s.computed = r.extremum;
                s.subdivisions = r.subdivisions;
                s.box = to_param_box(c.dims, root);
                s.verdict = verdict_of(s.computed, s.claimed, c.dir);
                if (s.verdict == Verdict::Fail) s.witness = to_param_box(c.dims, r.witness);
                break;
            }
            case Kind::Custom: {
                SubResult r = c.custom(prec);
                r.id = s.id;
                r.what = s.what;
                r.direction = s.direction;
                if (r.claimed_text.empty()) r.claimed_text = s.claimed_text;
                if (r.note.empty()) r.note = s.note;
                s = std::move(r);
                break;
            }
        }
        if (c.extra_note) {
            const std::string extra = c.extra_note(prec);
            s.note += (s.note.empty() ? "" : "; ") + extra;
        }
    } catch (const DepthExhausted& e) {
        s.verdict = Verdict::Inconclusive;
        s.note += (s.note.empty() ? "" : "; ") + std::string("subdivision budget exhausted");
    }
    return s;
}

}  // namespace zdb::ledger

namespace zdb {

using namespace ledger;

namespace {

const CheckDef& find_check(const std::string& id) {
    for (const auto& c : registry())
        if (c.id == id) return c;
    throw UnknownCheck("unknown check id: " + id);
}

CheckResult run_check(const CheckDef& def, const Precision& prec) {
    CheckResult r;
    r.id = def.id;
    r.paper_anchor = def.anchor;
    for (const auto& c : def.claims) r.subs.push_back(evaluate(c, prec));
    const SubResult* primary = nullptr;
    int worst = 0;
    for (const auto& s : r.subs) {
        worst = std::max(worst, rank(s.verdict));
        r.subdivisions += s.subdivisions;
    }
    for (const auto& s : r.subs)
        if (rank(s.verdict) == worst && worst > 0) {
            primary = &s;
            break;
        }
    if (!primary)
        for (const auto& s : r.subs)
            if (!primary || margin(s) < margin(*primary)) primary = &s;
    r.verdict = worst == 2 ? Verdict::Fail : worst == 1 ? Verdict::Inconclusive : Verdict::Pass;
    r.computed = primary->computed;
    r.claimed = primary->claimed;
    r.claimed_text = primary->claimed_text;
    r.direction = primary->direction;
    std::string notes = primary->id + ": " + primary->what;
    if (!def.notes.empty()) notes += "; " + def.notes;
    for (const auto& s : r.subs) {
        if (s.verdict != Verdict::Pass) {
            notes += "; " + s.id + " " + to_string(s.verdict) + " computed " + s.computed.str(8);
            if (s.witness) notes += " at " + s.witness->str();
        }
        if (!s.note.empty()) notes += "; " + s.id + ": " + s.note;
    }
    r.notes = notes;
    return r;
}

}  // namespace

std::vector<std::string> check_ids() {
    std::vector<std::string> ids;
    for (const auto& c : registry()) ids.push_back(c.id);
    return ids;
}

std::vector<std::string> subclaim_ids() {
    std::vector<std::string> ids;
    for (const auto& c : registry())
        for (const auto& s : c.claims) ids.push_back(s.id);
    return ids;
}

CheckResult verify(const std::string& id, const Precision& prec) { return run_check(find_check(id), prec); }

std::vector<CheckResult> run_all(const Precision& prec) {
    const auto& reg = registry();
    std::vector<std::future<CheckResult>> jobs;
    for (const auto& def : reg) jobs.push_back(std::async(std::launch::async, [&def, prec] { return run_check(def, prec); }));
    std::vector<CheckResult> out;
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

SpotAudit spot_audit(const std::string& sub_id, int samples, std::uint64_t seed, unsigned bits) {
    const Claim* claim = nullptr;
    for (const auto& c : registry())
        for (const auto& s : c.claims)
            if (s.id == sub_id) claim = &s;
    if (!claim) throw UnknownCheck("unknown sub-claim id: " + sub_id);
    SpotAudit a;
    const Precision prec{bits, 1000000};
    switch (claim->kind) {
        case Kind::Const: {
            a.samples = 1;
            a.violations = violated(claim->value(prec), claimed_of(*claim, bits), claim->dir) ? 1 : 0;
            return a;
        }
        case Kind::Exact:
            a.samples = 1;
            a.violations = claim->exact(bits).holds ? 0 : 1;
            return a;
        case Kind::Custom:
            a.samples = 1;
            a.violations = claim->custom(prec).verdict == Verdict::Fail ? 1 : 0;
            return a;
        case Kind::Box: break;
    }
    std::mt19937_64 rng(seed);
    const Interval c = claimed_of(*claim, bits);
    for (int i = 0; i < samples; ++i) {
        auto p = claim->sample ? claim->sample(rng, bits) : generic_sample(*claim, rng, bits);
        if (!p) {
            ++a.skipped;
            continue;
        }
        auto v = claim->f(*p);
        if (!v) {
            ++a.skipped;
            continue;
        }
        ++a.samples;
        if (violated(*v, c, claim->dir)) ++a.violations;
    }
    return a;
}

}  // namespace zdb
