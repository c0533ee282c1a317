#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <json.hpp>
#include <string>

#include "genergy/graph6.hpp"

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const char* bin = std::getenv("GENERGY_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "GENERGY_BIN must point at the genergy binary");
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("cli energy") {
    auto r = run_cli("energy C~ --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["n"] == 4);
    CHECK(j["m"] == 6);
    CHECK(j["energy"] == doctest::Approx(6.0));
    CHECK(j["det"] == "-3");
    CHECK(j["singular"] == false);
    CHECK(j["eigenvalues"].size() == 4);

    auto singular = run_cli("energy Bg --format json");  // P3
    REQUIRE(singular.exit_code == 0);
    auto js = nlohmann::json::parse(singular.out);
    CHECK(js["singular"] == true);
    CHECK(js["det"] == "0");
}

TEST_CASE("cli bounds schema is stable") {
    auto r = run_cli("bounds Ch --format json");  // P4
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    for (const char* key :
         {"graph6", "n", "m", "avg_degree", "det", "energy", "bounds", "verdicts", "coverage"})
        CHECK_MESSAGE(j.contains(key), key);
    for (const char* key : {"log", "amgm", "variance", "quantity_C", "conjugate"})
        CHECK_MESSAGE(j["bounds"].contains(key), key);
    CHECK(j["verdicts"]["conjecture2"] == "fail");
    CHECK(j["verdicts"]["conjecture1"] == "pass");
    CHECK(j["bounds"]["log"] == doctest::Approx(4.1368221637).epsilon(1e-8));
    CHECK(j["energy"] == doctest::Approx(4.4721359550).epsilon(1e-8));

    // singular graphs render inapplicable bounds as nulls
    auto s = nlohmann::json::parse(run_cli("bounds Bg --format json").out);
    CHECK(s["bounds"]["log"].is_null());
    CHECK(s["verdicts"]["conjecture2"] == "not-applicable");
}

TEST_CASE("cli classify") {
    std::string c6 = genergy::to_graph6(genergy::cycle(6));
    auto r = run_cli("classify " + c6 + " --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["applicable"] == true);
    auto& cov = j["coverage"];
    CHECK(std::find(cov.begin(), cov.end(), "Regular") != cov.end());
    CHECK(std::find(cov.begin(), cov.end(), "Bipartite") != cov.end());

    auto na = nlohmann::json::parse(run_cli("classify C~ --format json").out);
    CHECK(na["applicable"] == false);  // order 4
}

TEST_CASE("cli scan json and csv agree") {
    auto js = run_cli("scan 5 --format json");
    REQUIRE(js.exit_code == 0);
    auto j = nlohmann::json::parse(js.out);
    CHECK(j["order"] == 5);
    CHECK(j["total_graphs"] == 34);
    CHECK(j["conjecture2_violations"].empty());

    auto cs = run_cli("scan 5 --format csv");
    REQUIRE(cs.exit_code == 0);
    CHECK(cs.out.find("metric,total_graphs,,,34,") != std::string::npos);
    std::uint64_t hist_total = 0;
    for (auto& [label, count] : j["coverage_histogram"].items()) {
        CHECK(cs.out.find("coverage," + label + ",,," + count.dump() + ",") != std::string::npos);
        hist_total += count.get<std::uint64_t>();
    }
    CHECK(hist_total > 0);
}

TEST_CASE("cli scan order 4 lists the two exceptions") {
    auto r = run_cli("scan 4 --format json");
    CHECK(r.exit_code == 0);  // expected exceptions, not counterexamples
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["conjecture2_violations"].size() == 2);
    for (auto& v : j["conjecture2_violations"]) CHECK(v["order"] == 4);

    // the csv rendering carries the identical violation numbers
    auto cs = run_cli("scan 4 --format csv");
    for (auto& v : j["conjecture2_violations"]) {
        char row[128];
        std::snprintf(row, sizeof(row), "violation,conjecture2,%s,4,%.10f,%.10f",
                      v["graph6"].get<std::string>().c_str(), v["energy"].get<double>(),
                      v["target"].get<double>());
        CHECK(cs.out.find(row) != std::string::npos);
    }
}

TEST_CASE("cli scan on a single graph6 literal") {
    auto r = run_cli("scan C~ --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["total_graphs"] == 1);
    CHECK(j["nonsingular_count"] == 1);
}

TEST_CASE("cli usage errors") {
    CHECK(run_cli("energy ,,,bogus").exit_code == 64);
    CHECK(run_cli("scan 10").exit_code == 64);          // long run not enabled
    CHECK(run_cli("verify --grid-points 0").exit_code == 64);
    CHECK(run_cli("nope").exit_code == 64);
}
