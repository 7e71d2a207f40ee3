#include <catch2/catch_amalgamated.hpp>

#include "property_suites.hpp"

TEST_CASE("pentagonal and quadratic searches are equivalent") {
    auto r = suites::pent_quad_equivalence();
    INFO(r.detail);
    CHECK(r.pass);
}

TEST_CASE("value identities over ten thousand indices") {
    auto r = suites::value_identities();
    INFO(r.detail);
    CHECK(r.pass);
}

TEST_CASE("isometry iterations never strand a solution") {
    auto r = suites::isometry_iteration();
    INFO(r.detail);
    CHECK(r.pass);
}

TEST_CASE("certified progressions transfer representability") {
    auto r = suites::progression_transfer();
    INFO(r.detail);
    CHECK(r.pass);
}

TEST_CASE("representability table matches a naive reference") {
    auto r = suites::table_against_brute_force();
    INFO(r.detail);
    CHECK(r.pass);
}
