#include "core/common.hpp"
#include "core/suites.hpp"

#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace flokit;

namespace {

suite_config quick(const char* name, int trials, uint64_t seed) {
    suite_config cfg;
    cfg.suite = name;
    cfg.trials = trials;
    cfg.seed = seed;
    return cfg;
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

} // namespace

TEST_CASE("unknown suite name is rejected") {
    CHECK_THROWS_AS(run_suite(quick("not-a-suite", 1, 1)), error);
    try {
        run_suite(quick("not-a-suite", 1, 1));
    } catch (const error& e) {
        CHECK(e.code == errc::unknown_suite);
    }
}

TEST_CASE("every suite passes a reduced run") {
    struct row {
        const char* name;
        int trials;
    };
    // trial counts trimmed for unit-test speed; full sizes live in the
    // acceptance binary
    for (row r : {row{"lemma1", 2}, row{"lemma2-duality", 5}, row{"lemma3", 10},
                  row{"theorem1", 2}, row{"magic-identities", 200}, row{"tau-rho", 100},
                  row{"holder", 20}, row{"schmidt", 4}}) {
        CAPTURE(r.name);
        suite_config cfg = quick(r.name, r.trials, 42);
        if (std::string(r.name) == "lemma1") cfg.n = 1;
        if (std::string(r.name) == "theorem1") cfg.factors = 2;
        suite_summary res = run_suite(cfg);
        CHECK(res.passed);
        CHECK(res.failures == 0);
        CHECK(res.trials == r.trials);
        CHECK(!res.checks.empty());
        for (const suite_check& c : res.checks) {
            CAPTURE(c.name);
            CHECK(c.failures == 0);
            CHECK(c.max_error <= c.tolerance);
        }
    }
}

TEST_CASE("suite artifacts: CSV and JSON outputs") {
    suite_config cfg = quick("lemma3", 3, 7);
    cfg.out_prefix = "suite_artifact_test";
    suite_summary res = run_suite(cfg);
    CHECK(res.passed);

    std::vector<std::string> csv = read_lines("suite_artifact_test.csv");
    REQUIRE(csv.size() == 5); // comment, header, 3 data rows
    CHECK(csv[0].rfind("# lemma3 seed=7", 0) == 0);
    CHECK(csv[1] == "trial,l1_squared,lower_bound,gap,recon_error");
    for (int i = 2; i < 5; ++i) CHECK(csv[i].rfind(std::to_string(i - 2) + ",", 0) == 0);

    std::ifstream jf("suite_artifact_test.json");
    REQUIRE(jf.good());
    nlohmann::json j = nlohmann::json::parse(jf);
    CHECK(j["suite"] == "lemma3");
    CHECK(j["trials"] == 3);
    CHECK(j["seed"] == 7);
    CHECK(j["passed"] == true);
    CHECK(j["failures"] == 0);
    CHECK(j["checks"].is_array());
    CHECK(!j["checks"].empty());
    for (const auto& c : j["checks"]) {
        CHECK(c.contains("name"));
        CHECK(c.contains("max_error"));
        CHECK(c.contains("tolerance"));
    }

    // same seed reproduces the data rows byte for byte
    suite_config cfg2 = cfg;
    cfg2.out_prefix = "suite_artifact_test2";
    run_suite(cfg2);
    std::vector<std::string> csv2 = read_lines("suite_artifact_test2.csv");
    REQUIRE(csv2.size() == csv.size());
    for (std::size_t i = 1; i < csv.size(); ++i) CHECK(csv[i] == csv2[i]);

    for (const char* p : {"suite_artifact_test.csv", "suite_artifact_test.json",
                          "suite_artifact_test2.csv", "suite_artifact_test2.json"})
        std::remove(p);
}

TEST_CASE("suite name listing") {
    std::vector<std::string> names = suite_names();
    REQUIRE(names.size() == 8);
    CHECK(names.front() == "lemma1");
    CHECK(names.back() == "schmidt");
}

TEST_CASE("interpolation table for the phase family") {
    SUBCASE("small grid written to disk") {
        table_summary t = write_mphi_table("mphi_table_test.csv", 8, 4, 5, 1);
        CHECK(t.passed);
        CHECK(t.max_formula_error <= 1e-12);
        CHECK(t.max_optimizer_error <= 1e-6);
        std::vector<std::string> lines = read_lines("mphi_table_test.csv");
        REQUIRE(lines.size() == 10); // comment, header, 8 rows
        CHECK(lines[1] ==
              "phi,extent_closed,extent_lower,extent_upper,fidelity_closed,fidelity_optimized");
        // phi = 0 is a Gaussian point: extent 1, fidelity 1
        std::istringstream first(lines[2]);
        std::string cell;
        std::vector<double> vals;
        while (std::getline(first, cell, ',')) vals.push_back(std::stod(cell));
        REQUIRE(vals.size() == 6);
        CHECK(vals[0] == 0.0);
        CHECK(vals[1] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(vals[4] == doctest::Approx(1.0).epsilon(1e-12));
        std::remove("mphi_table_test.csv");
    }
    SUBCASE("summary-only run and grid validation") {
        table_summary t = write_mphi_table("", 4, 2, 9, 1);
        CHECK(t.passed);
        CHECK_THROWS_AS(write_mphi_table("", 1, 2, 9, 1), error);
    }
}
