#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zdb/bounds.hpp"
#include "zdb/density.hpp"
#include "zdb/ledger.hpp"

using namespace zdb;
using json = nlohmann::ordered_json;

namespace {

struct BadConfig : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string sigma, logT, C = "1", scan, checks = "all", format = "text";
    unsigned bits = 128;
    std::uint64_t max_sub = 1000000;
};

int digits_for(unsigned bits) { return static_cast<int>(bits * 0.30103) + 2; }

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string r = "\"";
    for (char c : s) r += c == '"' ? std::string("\"\"") : std::string(1, c);
    return r + "\"";
}

Interval parse_dec(const std::string& s, unsigned bits, const char* what) {
    try {
        return Interval::dec(s, bits);
    } catch (const std::exception&) {
        throw BadConfig(std::string("cannot parse ") + what + ": " + s);
    }
}

struct Scan {
    double lo, hi;
    int steps;
    std::string lo_s, hi_s;
};

Scan parse_scan(const std::string& s) {
    const auto a = s.find(':'), b = s.rfind(':');
    if (a == std::string::npos || a == b) throw BadConfig("--scan expects lo:hi:steps");
    Scan r{};
    r.lo_s = s.substr(0, a);
    r.hi_s = s.substr(a + 1, b - a - 1);
    try {
        r.lo = std::stod(r.lo_s);
        r.hi = std::stod(r.hi_s);
        r.steps = std::stoi(s.substr(b + 1));
    } catch (const std::exception&) {
        throw BadConfig("--scan expects lo:hi:steps");
    }
    if (!(r.lo > 0) || !(r.hi >= r.lo)) throw BadConfig("--scan needs 0 < lo <= hi");
    if (r.steps < 1) throw BadConfig("--scan needs steps >= 1");
    return r;
}

// Scan points as decimal strings; the endpoints keep their typed form.
std::vector<std::string> scan_points(const Scan& s) {
    std::vector<std::string> pts;
    for (int i = 0; i < s.steps; ++i) {
        if (i == 0) {
            pts.push_back(s.lo_s);
            continue;
        }
        if (i == s.steps - 1) {
            pts.push_back(s.hi_s);
            continue;
        }
        std::ostringstream o;
        o.precision(17);
        o << s.lo + (s.hi - s.lo) * i / (s.steps - 1);
        pts.push_back(o.str());
    }
    return pts;
}

void emit_rows(const Config& cfg, const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& r : rows) {
            json o;
            for (std::size_t i = 0; i < header.size(); ++i) o[header[i]] = r[i];
            arr.push_back(o);
        }
        std::cout << arr.dump(2) << "\n";
        return;
    }
    const char* sep = cfg.format == "csv" ? "," : "  ";
    for (std::size_t i = 0; i < header.size(); ++i) std::cout << (i ? sep : "") << header[i];
    std::cout << "\n";
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) std::cout << (i ? sep : "") << (cfg.format == "csv" ? csv_quote(r[i]) : r[i]);
        std::cout << "\n";
    }
}

int cmd_eval(const Config& cfg) {
    if (cfg.sigma.empty() || cfg.logT.empty()) throw BadConfig("eval needs --sigma and --logT");
    const unsigned bits = cfg.bits;
    const Interval sigma = parse_dec(cfg.sigma, bits, "--sigma");
    const Interval logT = parse_dec(cfg.logT, bits, "--logT");
    if (mpfr_cmp_d(sigma.lo(), 0.98) < 0 || mpfr_cmp_ui(sigma.hi(), 1) > 0)
        throw BadConfig("precondition violated: sigma must lie in [0.98, 1]");
    if (mpfr_sgn(logT.lo()) <= 0) throw BadConfig("precondition violated: logT must be > 0");
    if (mpfr_less_p(logT.lo(), ln(Interval(3, bits)).lo())) throw BadConfig("precondition violated: T must be >= 3");
    const Interval C = parse_dec(cfg.C, bits, "--C");

    const TRange r = trange_of(logT);
    const auto widest = widest_region(logT);
    const int dg = digits_for(bits);
    std::vector<std::vector<std::string>> rows;
    auto add = [&](const std::string& name, const Interval& v) { rows.push_back({name, v.lo_str(dg), v.hi_str(dg)}); };
    add("theorem1_general", theorem1_general(sigma, logT));
    add("theorem1_simple", theorem1_simple(sigma, logT));
    if (certainly_le(Interval::dec("6.7e12", bits), logT)) add("theorem2", theorem2(sigma, logT));
    add("ingham_type", ingham_type(sigma, logT, C));
    for (auto id : {ZeroFreeRegionId::Classical, ZeroFreeRegionId::Intermediate, ZeroFreeRegionId::Littlewood,
                    ZeroFreeRegionId::KorobovVinogradov})
        add("gap_" + to_string(id), zero_free_gap(id, logT));

    const std::string region = widest ? to_string(*widest) : "INCONCLUSIVE";
    const bool below = below_verified_height(logT);
    if (cfg.format == "json") {
        json o;
        o["sigma"] = cfg.sigma;
        o["logT"] = cfg.logT;
        o["trange"] = to_string(r);
        o["region"] = region;
        o["below_verified_height"] = below;
        for (const auto& row : rows) o[row[0]] = {{"lo", row[1]}, {"hi", row[2]}};
        std::cout << o.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        std::cout << "quantity,lo,hi\n";
        std::cout << "trange," << to_string(r) << "," << to_string(r) << "\n";
        std::cout << "region," << region << "," << region << "\n";
        for (const auto& row : rows) std::cout << row[0] << "," << row[1] << "," << row[2] << "\n";
    } else {
        std::cout << "range " << to_string(r) << (below ? " (below verified height 3e12, R1 constants)" : "") << "\n";
        std::cout << "widest zero-free region " << region << "\n";
        for (const auto& row : rows) std::cout << row[0] << " [" << row[1] << ", " << row[2] << "]\n";
    }
    return 0;
}

std::vector<std::string> selected_checks(const std::string& spec) {
    const auto all = check_ids();
    if (spec == "all") return all;
    std::vector<std::string> ids;
    std::stringstream ss(spec);
    std::string id;
    while (std::getline(ss, id, ',')) {
        if (std::find(all.begin(), all.end(), id) == all.end()) throw BadConfig("unknown check id: " + id);
        ids.push_back(id);
    }
    if (ids.empty()) throw BadConfig("--checks is empty");
    return ids;
}

int cmd_verify(const Config& cfg) {
    const auto ids = selected_checks(cfg.checks);
    const Precision prec{cfg.bits, cfg.max_sub};
    std::vector<CheckResult> res;
    if (ids.size() == check_ids().size())
        res = run_all(prec);
    else
        for (const auto& id : ids) res.push_back(verify(id, prec));

    const int dg = digits_for(cfg.bits);
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& r : res)
            arr.push_back({{"id", r.id},
                           {"verdict", to_string(r.verdict)},
                           {"computed_lo", r.computed.lo_str(dg)},
                           {"computed_hi", r.computed.hi_str(dg)},
                           {"claimed", r.claimed_text},
                           {"direction", to_string(r.direction)},
                           {"subdivisions", r.subdivisions},
                           {"paper_anchor", r.paper_anchor},
                           {"notes", r.notes}});
        std::cout << arr.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        std::cout << "id,verdict,computed_lo,computed_hi,claimed,direction,subdivisions,paper_anchor,notes\n";
        for (const auto& r : res)
            std::cout << r.id << "," << to_string(r.verdict) << "," << r.computed.lo_str(dg) << "," << r.computed.hi_str(dg)
                      << "," << csv_quote(r.claimed_text) << "," << csv_quote(to_string(r.direction)) << "," << r.subdivisions
                      << "," << csv_quote(r.paper_anchor) << "," << csv_quote(r.notes) << "\n";
    } else {
        for (const auto& r : res) {
            std::cout << r.id << " " << to_string(r.verdict) << "  " << r.computed.str(10) << " " << to_string(r.direction)
                      << " " << r.claimed_text << "  (" << r.paper_anchor << ")\n";
            for (const auto& s : r.subs) {
                std::cout << "    " << s.id << " " << to_string(s.verdict) << "  " << s.what << ": " << s.computed.str(10)
                          << " " << to_string(s.direction) << " " << s.claimed_text;
                if (s.witness) std::cout << "  witness " << s.witness->str();
                if (!s.note.empty()) std::cout << "  [" << s.note << "]";
                std::cout << "\n";
            }
        }
    }
    bool fail = false, inconclusive = false;
    for (const auto& r : res) {
        fail |= r.verdict == Verdict::Fail;
        inconclusive |= r.verdict == Verdict::Inconclusive;
    }
    return fail ? 1 : inconclusive ? 3 : 0;
}

int cmd_crossover(const Config& cfg) {
    if (cfg.scan.empty()) throw BadConfig("crossover needs --scan lo:hi:steps");
    const Scan sc = parse_scan(cfg.scan);
    const unsigned bits = cfg.bits;
    const Interval C = parse_dec(cfg.C, bits, "--C");
    if (mpfr_cmp_ui(C.lo(), 1) < 0) throw BadConfig("--C must be >= 1");
    const int dg = digits_for(bits);
    std::vector<std::vector<std::string>> rows;
    for (const auto& p : scan_points(sc)) {
        const Interval l = parse_dec(p, bits, "--scan");
        if (mpfr_less_p(l.lo(), ln(Interval(3, bits)).lo())) throw BadConfig("--scan needs log T >= log 3");
        const Interval kv = 1 - zero_free_gap(ZeroFreeRegionId::KorobovVinogradov, l);
        const Interval c1p = table::c1_prime(trange_of(l), bits);
        try {
            const Interval s = sigma_crossover(l, C, c1p);
            const std::string st = certainly_ge(s, kv) ? "ABOVE_KV" : certainly_lt(s, kv) ? "BELOW_KV" : "INCONCLUSIVE";
            rows.push_back({p, s.lo_str(dg), s.hi_str(dg), kv.lo_str(dg), kv.hi_str(dg), st});
        } catch (const NoCrossover&) {
            rows.push_back({p, "NO_CROSSOVER", "NO_CROSSOVER", kv.lo_str(dg), kv.hi_str(dg), "NO_CROSSOVER"});
        }
    }
    emit_rows(cfg, {"logT", "sigma_star_lo", "sigma_star_hi", "kv_boundary_lo", "kv_boundary_hi", "status"}, rows);
    return 0;
}

int cmd_regions(const Config& cfg) {
    if (cfg.scan.empty()) throw BadConfig("regions needs --scan lo:hi:steps");
    const Scan sc = parse_scan(cfg.scan);
    const unsigned bits = cfg.bits;
    const int dg = digits_for(bits);
    std::vector<std::vector<std::string>> rows;
    const ZeroFreeRegionId ids[] = {ZeroFreeRegionId::Classical, ZeroFreeRegionId::Intermediate,
                                    ZeroFreeRegionId::Littlewood, ZeroFreeRegionId::KorobovVinogradov};
    for (const auto& p : scan_points(sc)) {
        const Interval l = parse_dec(p, bits, "--scan");
        if (mpfr_less_p(l.lo(), ln(Interval(3, bits)).lo())) throw BadConfig("--scan needs log T >= log 3");
        std::vector<std::string> row{p};
        for (auto id : ids) {
            const Interval g = zero_free_gap(id, l);
            row.push_back(g.lo_str(dg));
            row.push_back(g.hi_str(dg));
        }
        const auto w = widest_region(l);
        row.push_back(w ? to_string(*w) : "INCONCLUSIVE");
        rows.push_back(row);
    }
    emit_rows(cfg,
              {"logT", "classical_lo", "classical_hi", "intermediate_lo", "intermediate_hi", "littlewood_lo",
               "littlewood_hi", "kv_lo", "kv_hi", "widest"},
              rows);
    return 0;
}

const SubResult& sub(const CheckResult& r, const std::string& id) {
    for (const auto& s : r.subs)
        if (s.id == id) return s;
    throw std::logic_error("missing sub-claim " + id);
}

int cmd_table(const Config& cfg) {
    const Precision prec{cfg.bits, cfg.max_sub};
    const unsigned bits = cfg.bits;
    const int dg = digits_for(bits);
    std::vector<std::vector<std::string>> rows;
    auto add = [&](const std::string& name, const std::string& range, const std::string& printed, const Interval& v,
                   const std::string& flag) { rows.push_back({name, range, printed, v.lo_str(dg), v.hi_str(dg), flag}); };
    auto flag_of = [](Verdict v) { return v == Verdict::Pass ? std::string("ok") : "DISCREPANCY(" + to_string(v) + ")"; };

    const CheckResult c1 = verify("L03", prec), c3 = verify("L04", prec), c2 = verify("L14", prec),
                      c4 = verify("L15", prec), c5 = verify("L16", prec), sc = verify("L18", prec),
                      fin = verify("L25", prec), c10 = verify("L24", prec);
    const char* letters = "abcd";
    const Interval h = Interval::dec("0.45", bits);
    for (int i = 0; i < 4; ++i) {
        const TRange r = static_cast<TRange>(i);
        const std::string rs = to_string(r), L(1, letters[i]);
        for (const auto& [name, chk] : std::vector<std::pair<std::string, const CheckResult*>>{
                 {"C1", &c1}, {"C3", &c3}, {"C2", &c2}, {"C4", &c4}, {"C5", &c5}, {"script_C", &sc}}) {
            const SubResult& s = sub(*chk, chk->id + L);
            add(name, rs, s.claimed_text, s.computed, flag_of(s.verdict));
        }
        const SubResult& s = sub(sc, "L18" + L);
        const Interval g1 = h * s.computed;
        add("script_C1", rs, table::c1_general_str(r), g1,
            certainly_le(g1, table::c1_general(r, bits)) ? "ok" : "DISCREPANCY(INCONCLUSIVE)");
        const SubResult& p = sub(fin, std::string("L25") + static_cast<char>('g' + i));
        add("script_C1_prime", rs, p.claimed_text, p.computed, flag_of(p.verdict));
    }
    add("script_C2", "all", "7.65e10", h * sub(c10, "L24b").computed,
        certainly_le(h * sub(c10, "L24b").computed, table::c2_general(bits)) ? "ok" : "DISCREPANCY(INCONCLUSIVE)");
    const SubResult& third = sub(fin, "L25f");
    add("third_term", "all", third.claimed_text, third.computed, flag_of(third.verdict));
    emit_rows(cfg, {"constant", "range", "printed", "computed_lo", "computed_hi", "flag"}, rows);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified zero-density bounds and constant ledger"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    if (const char* env = std::getenv("ZDB_PRECISION_BITS")) {
        try {
            cfg.bits = static_cast<unsigned>(std::stoul(env));
        } catch (const std::exception&) {
            std::cerr << "error: ZDB_PRECISION_BITS is not a number\n";
            return 2;
        }
    }
    app.add_option("--sigma", cfg.sigma, "sigma as a decimal");
    app.add_option("--logT", cfg.logT, "log T as a decimal");
    app.add_option("--C", cfg.C, "Ingham-type constant C");
    app.add_option("--scan", cfg.scan, "log T scan lo:hi:steps");
    app.add_option("--checks", cfg.checks, "comma separated check ids or all");
    app.add_option("--format", cfg.format, "json, csv or text");
    app.add_option("--precision-bits", cfg.bits, "working precision in bits");
    app.add_option("--max-subdivisions", cfg.max_sub, "branch-and-bound budget");
    auto* eval = app.add_subcommand("eval", "density bounds at one point");
    auto* ver = app.add_subcommand("verify", "run ledger checks");
    auto* cross = app.add_subcommand("crossover", "sigma* scan against the KV boundary");
    auto* regions = app.add_subcommand("regions", "zero-free region gaps");
    auto* table = app.add_subcommand("table", "constant tables, printed against computed");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    try {
        if (cfg.format != "json" && cfg.format != "csv" && cfg.format != "text")
            throw BadConfig("--format must be json, csv or text");
        if (cfg.bits < 53) throw BadConfig("precision must be at least 53 bits");
        if (cfg.max_sub < 1) throw BadConfig("--max-subdivisions must be >= 1");
        if (*eval) return cmd_eval(cfg);
        if (*ver) return cmd_verify(cfg);
        if (*cross) return cmd_crossover(cfg);
        if (*regions) return cmd_regions(cfg);
        if (*table) return cmd_table(cfg);
    } catch (const BadConfig& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
