#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + (env.empty() ? "" : " ") + ZDB_BIN + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    const int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& s) {
    std::vector<std::vector<std::string>> rows;
    std::size_t pos = 0;
    while (pos < s.size()) {
        const auto end = s.find('\n', pos);
        const std::string line = s.substr(pos, end - pos);
        pos = end == std::string::npos ? s.size() : end + 1;
        std::vector<std::string> cells;
        std::size_t a = 0;
        while (true) {
            const auto b = line.find(',', a);
            cells.push_back(line.substr(a, b - a));
            if (b == std::string::npos) break;
            a = b + 1;
        }
        rows.push_back(cells);
    }
    return rows;
}

}  // namespace

TEST_CASE("eval") {
    const Run a = run("eval --sigma 1.0 --logT 100");
    CHECK(a.code == 0);
    CHECK(a.out.find("theorem1_simple") != std::string::npos);
    CHECK(a.out.find("range R2") != std::string::npos);
    CHECK(a.out.find("ingham_type") != std::string::npos);

    const Run b = run("eval --sigma 0.98 --logT 28.73 --format json");
    REQUIRE(b.code == 0);
    const auto j = nlohmann::json::parse(b.out);
    CHECK(j["trange"] == "R1");
    CHECK(j["region"] == "Classical");
    CHECK(j.contains("theorem1_general"));
    CHECK_FALSE(j.contains("theorem2"));

    CHECK(run("eval --sigma 0.5 --logT 100").code == 2);
    CHECK(run("eval --sigma 0.99").code == 2);
    CHECK(run("eval --sigma 0.99 --logT -3").code == 2);
    CHECK(run("eval --sigma 0.99 --logT 7e12 --format json").out.find("theorem2") != std::string::npos);
}

TEST_CASE("verify exit codes and schema") {
    const Run a = run("verify --checks L26");
    CHECK(a.code == 0);
    CHECK(a.out.rfind("L26 PASS", 0) == 0);

    const Run j = run("verify --checks L26,L20,L25 --format json");
    CHECK(j.code == 1);
    const auto arr = nlohmann::json::parse(j.out);
    REQUIRE(arr.size() == 3);
    for (const auto& rec : arr) {
        CHECK(rec.size() == 9);
        for (const char* k : {"id", "verdict", "computed_lo", "computed_hi", "claimed", "direction", "paper_anchor", "notes"})
            CHECK_MESSAGE(rec.at(k).is_string(), k);
        CHECK(rec.at("subdivisions").is_number_unsigned());
    }
    CHECK(arr[2]["id"] == "L25");
    CHECK(arr[2]["verdict"] == "FAIL");

    CHECK(run("verify --checks L16,L18 --max-subdivisions 1").code == 3);
    CHECK(run("verify --checks NOPE").code == 2);
    CHECK(run("verify --checks L26 --format xml").code == 2);
    CHECK(run("verify --checks L26 --precision-bits 40").code == 2);
    CHECK(run("verify --checks L26", "ZDB_PRECISION_BITS=40").code == 2);
    CHECK(run("verify --checks L26", "ZDB_PRECISION_BITS=256").code == 0);
    CHECK(run("verify --bogus").code == 2);

    const Run c = run("verify --checks L26,L30 --format csv");
    const auto rows = csv_rows(c.out);
    CHECK(rows[0][0] == "id");
    CHECK(rows[1][0] == "L26");
    CHECK(rows[2][0] == "L30");
}

TEST_CASE("identical invocations give identical bytes") {
    const Run a = run("verify --checks L13,L20,L30 --format json");
    const Run b = run("verify --checks L13,L20,L30 --format json");
    CHECK(a.out == b.out);
}

TEST_CASE("precision changes the endpoint digits") {
    const Run a = run("verify --checks L30 --format json --precision-bits 64");
    const Run b = run("verify --checks L30 --format json --precision-bits 256");
    const auto ja = nlohmann::json::parse(a.out), jb = nlohmann::json::parse(b.out);
    CHECK(ja[0]["computed_hi"].get<std::string>().size() < jb[0]["computed_hi"].get<std::string>().size());
}

TEST_CASE("crossover") {
    const Run a = run("crossover --C 1 --scan 1e12:1e13:10 --format csv");
    REQUIRE(a.code == 0);
    const auto rows = csv_rows(a.out);
    REQUIRE(rows.size() == 11);
    int first_above = -1;
    for (int i = 1; i <= 10; ++i)
        if (rows[i][5] == "ABOVE_KV" && first_above < 0) first_above = i;
    REQUIRE(first_above > 1);
    CHECK(std::stod(rows[first_above - 1][0]) <= 6.7e12);
    CHECK(std::stod(rows[first_above][0]) >= 6.7e12);
    CHECK(rows[first_above - 1][5] == "BELOW_KV");
    for (int i = first_above; i <= 10; ++i) CHECK(rows[i][5] == "ABOVE_KV");

    const Run b = run("crossover --C 1 --scan 28:29:2 --format csv");
    CHECK(b.code == 0);
    const auto rb = csv_rows(b.out);
    REQUIRE(rb.size() == 3);
    CHECK(rb[1][1] == "NO_CROSSOVER");
    CHECK(rb[2][1] == "NO_CROSSOVER");

    CHECK(run("crossover --C 1 --scan 29:28:2").code == 2);
    CHECK(run("crossover --C 1 --scan 28:29").code == 2);
    CHECK(run("crossover --C 0.5 --scan 28:29:2").code == 2);
}

TEST_CASE("regions") {
    const Run a = run("regions --scan 40:40:1 --format csv");
    REQUIRE(a.code == 0);
    CHECK(csv_rows(a.out)[1].back() == "Classical");
    CHECK(csv_rows(run("regions --scan 100:100:1 --format csv").out)[1].back() == "Intermediate");
    CHECK(csv_rows(run("regions --scan 1e6:1e6:1 --format csv").out)[1].back() == "KorobovVinogradov");
    const std::string mid = csv_rows(run("regions --scan 481958:481958:1 --format csv").out)[1].back();
    CHECK((mid == "INCONCLUSIVE" || mid == "Littlewood" || mid == "KorobovVinogradov"));
    CHECK(run("regions --scan 5:1:3").code == 2);
}

TEST_CASE("table") {
    const Run a = run("table --format csv");
    REQUIRE(a.code == 0);
    const auto rows = csv_rows(a.out);
    bool c1p_r4 = false, c2 = false, third = false;
    for (const auto& r : rows) {
        if (r.size() < 6) continue;
        if (r[0] == "script_C1_prime" && r[1] == "R4") c1p_r4 = r[2] == "4.72e20";
        if (r[0] == "script_C2") c2 = r[2] == "7.65e10" && r[5] == "ok";
        if (r[0] == "third_term") third = r[2] == "0.27" && r[5].rfind("DISCREPANCY", 0) == 0;
    }
    CHECK(c1p_r4);
    CHECK(c2);
    CHECK(third);
}
