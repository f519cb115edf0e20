#include "doctest.h"
#include "plurigreen/verify.hpp"

using namespace plurigreen;

TEST_CASE("unknown suites are rejected") {
    CHECK_FALSE(run_suite("no-such-suite", 7).has_value());
}

TEST_CASE("counterexample-weights suite passes and serializes") {
    const auto rep = run_suite("counterexample-weights", 7);
    REQUIRE(rep);
    CHECK(rep->all_pass());
    const Json j = verify_report_to_json(*rep);
    CHECK(j.at("suite") == "counterexample-weights");
    CHECK(j.at("seed") == 7);
    CHECK(j.at("pass") == true);
    CHECK(j.at("cases").size() == rep->cases.size());
}

TEST_CASE("riesz-vs-lelong suite holds the per-disc inequality") {
    const auto rep = run_suite("riesz-vs-lelong", 7);
    REQUIRE(rep);
    CHECK(rep->all_pass());
}

TEST_CASE("determinism suite") {
    const auto rep = run_suite("determinism", 7);
    REQUIRE(rep);
    for (const auto& c : rep->cases) {
        INFO(c.name, " observed=", c.observed);
        CHECK(c.pass);
    }
}

TEST_CASE("suite reports are reproducible byte-for-byte") {
    const auto a = run_suite("counterexample-weights", 11);
    const auto b = run_suite("counterexample-weights", 11);
    REQUIRE(a);
    REQUIRE(b);
    CHECK(verify_report_to_json(*a).dump() == verify_report_to_json(*b).dump());
}
