#include <algorithm>
#include <cmath>
#include <limits>

#include "zdb/ledger.hpp"

namespace zdb {

namespace {

struct Node {
    Box box;
    Interval val;
};

bool hi_less(const Node& a, const Node& b) { return mpfr_less_p(a.val.hi(), b.val.hi()) != 0; }

double rel_width(const Interval& x) {
    if (!x.bounded()) return std::numeric_limits<double>::infinity();
    const double lo = x.lo_d(), hi = x.hi_d();
    const double scale = std::max({std::fabs(lo), std::fabs(hi), 1e-300});
    return (hi - lo) / scale;
}

Box point_box(const Box& b, bool upper_corner, bool mid) {
    Box p;
    p.reserve(b.size());
    for (const auto& x : b) {
        if (mid)
            p.push_back(x.midpoint());
        else if (upper_corner && x.hi_finite())
            p.push_back(x.upper());
        else if (x.lo_finite())
            p.push_back(x.lower());
        else
            p.push_back(x.midpoint());
    }
    return p;
}

Box hull(const Box& a, const Box& b) {
    Box h;
    for (std::size_t i = 0; i < a.size(); ++i) h.push_back(Interval::hull_of(a[i], b[i]));
    return h;
}

}  // namespace

BnbResult branch_and_bound_extremum(const BoxFn& f, const Box& root, Extremum dir, const Precision& prec,
                                    const BnbOptions& opt) {
    const unsigned bits = prec.bits;
    const bool neg = dir == Extremum::Min;
    auto eval = [&](const Box& b) -> std::optional<Interval> {
        auto v = f(b);
        if (!v) return std::nullopt;
        return neg ? -*v : *v;
    };
    std::optional<Interval> claim;
    if (opt.claim) claim = neg ? -*opt.claim : *opt.claim;

    Interval L = Interval::dec("-inf", bits);
    bool have_L = false;
    BnbResult res;

    auto probe = [&](const Box& b) {
        std::vector<Box> pts;
        if (opt.probes)
            pts = opt.probes(b);
        else
            pts = {point_box(b, false, true), point_box(b, false, false), point_box(b, true, false)};
        for (const auto& p : pts) {
            auto v = eval(p);
            if (!v) continue;
            if (!have_L || mpfr_greater_p(v->lo(), L.lo())) {
                L = v->lower();
                have_L = true;
                res.witness = p;
            }
        }
    };

    std::vector<Node> heap;
    std::vector<Node> leaves;
    {
        Box r;
        for (const auto& x : root) r.push_back(x.with_prec(bits));
        auto v = eval(r);
        if (!v) throw DomainError("branch and bound: empty feasible set");
        heap.push_back({r, *v});
        probe(r);
    }

    auto upper = [&]() {
        Interval U = Interval::dec("-inf", bits);
        if (!heap.empty()) U = heap.front().val.upper();
        for (const auto& n : leaves)
            if (mpfr_greater_p(n.val.hi(), U.hi())) U = n.val.upper();
        return U;
    };

    std::uint64_t refines = 0;
    const std::vector<SplitKind> kinds =
        opt.split.empty() ? std::vector<SplitKind>(root.size(), SplitKind::Arithmetic) : opt.split;
    while (!heap.empty()) {
        const Interval U = upper();
        const bool decided = claim && (mpfr_lessequal_p(U.hi(), claim->lo()) ||
                                       (have_L && mpfr_greater_p(L.lo(), claim->hi())));
        if (have_L && U.hi_finite()) {
            const double u = U.hi_d(), l = L.lo_d();
            if (u - l <= opt.rel_tol * std::max(std::fabs(l), 1e-300)) break;
        }
        if (claim && have_L && mpfr_greater_p(L.lo(), claim->hi())) break;  // witness found
        if (decided && refines >= opt.refine_cap) break;
        if (res.subdivisions >= prec.max_subdivisions) {
            res.exhausted = !decided;
            break;
        }
        std::pop_heap(heap.begin(), heap.end(), hi_less);
        Node node = std::move(heap.back());
        heap.pop_back();
        if (have_L && mpfr_less_p(node.val.hi(), L.lo())) continue;

        std::size_t dim = 0;
        double best = -1;
        for (std::size_t i = 0; i < node.box.size(); ++i) {
            const double w = rel_width(node.box[i]);
            if (w > best) {
                best = w;
                dim = i;
            }
        }
        if (best <= std::ldexp(1.0, -static_cast<int>(bits) + 8)) {
            leaves.push_back(std::move(node));
            continue;
        }
        auto [a, b] = bisect(node.box[dim], kinds[dim]);
        ++res.subdivisions;
        if (decided) ++refines;
        for (auto* half : {&a, &b}) {
            Box child = node.box;
            child[dim] = *half;
            auto v = eval(child);
            if (!v) continue;
            probe(child);
            if (have_L && mpfr_less_p(v->hi(), L.lo())) continue;
            heap.push_back({std::move(child), *v});
            std::push_heap(heap.begin(), heap.end(), hi_less);
        }
    }

    Interval U = upper();
    if (have_L && mpfr_less_p(U.hi(), L.lo())) U = L;
    Interval ext = Interval::from_endpoints(L.lo(), U.hi(), bits);
    if (!heap.empty() || !leaves.empty()) {
        bool first = true;
        for (const auto* set : {&heap, &leaves})
            for (const auto& n : *set) {
                if (have_L && mpfr_less_p(n.val.hi(), L.lo())) continue;
                res.argopt_hull = first ? n.box : hull(res.argopt_hull, n.box);
                first = false;
            }
    }
    res.extremum = neg ? -ext : ext;
    return res;
}

}  // namespace zdb
