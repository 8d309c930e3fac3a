#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <khoworks/annulus.hpp>
#include <khoworks/homology.hpp>
#include <khoworks/json_io.hpp>

#include "support/test_helpers.hpp"

using namespace khoworks;

TEST_CASE("bigraded homology round-trips") {
    BigradedHomology h = khovanov(torus2(-3));
    CHECK(bigraded_from_json(to_json(h)) == h);
    CHECK(bigraded_from_json(to_json(BigradedHomology{})) ==
          BigradedHomology{});
}

TEST_CASE("stratified homology round-trips") {
    StratifiedHomology h = stratified_homology(torus_annulus(-3, 2));
    CHECK(stratified_from_json(to_json(h)) == h);
}

TEST_CASE("polynomial round-trips") {
    LaurentPoly p;
    p.add_term(7, 1);
    p.add_term(-5, -3);
    CHECK(poly_from_json(to_json(p)) == p);
    CHECK(poly_from_json(to_json(LaurentPoly{})) == LaurentPoly{});
}

TEST_CASE("kbsm round-trips") {
    auto e = kbsm_torus2_oracle(-3);
    CHECK(kbsm_from_json(kbsm_to_json(e)) == e);
}

TEST_CASE("malformed json is rejected") {
    CHECK_THROWS_AS(bigraded_from_json("{not json"), MalformedInput);
    CHECK_THROWS_AS(poly_from_json("[]"), MalformedInput);
}

TEST_CASE("analysis report serializes its checks") {
    AnalysisReport r;
    r.checks.push_back({"demo", true, false, "detail"});
    std::string s = to_json(r);
    CHECK(s.find("\"demo\"") != std::string::npos);
    CHECK_FALSE(r.all_passed());
    r.checks[0].passed = true;
    CHECK(r.all_passed());
}
