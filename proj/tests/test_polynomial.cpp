#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <khoworks/homology.hpp>
#include <khoworks/polynomial.hpp>

#include "support/test_helpers.hpp"

using namespace khoworks;

namespace {

LaurentPoly poly(std::vector<std::pair<int, int>> terms) {
    LaurentPoly p;
    for (auto [e, c] : terms) p.add_term(e, c);
    return p;
}

LaurentPoly chain_euler(const LinkDiagram& d) {
    LaurentPoly sum;
    for (const auto& [ij, states] : chain_groups(d)) {
        auto [i, j] = ij;
        int sign = ((j - i) / 2) % 2 == 0 ? 1 : -1;
        sum.add_term(j, Int(sign) * Int(states.size()));
    }
    return sum;
}

LaurentPoly homology_euler(const BigradedHomology& h) {
    LaurentPoly sum;
    for (const auto& [ij, g] : h.groups) {
        auto [i, j] = ij;
        int sign = ((j - i) / 2) % 2 == 0 ? 1 : -1;
        sum.add_term(j, Int(sign) * Int(g.free_rank));
    }
    return sum;
}

}  // namespace

TEST_CASE("laurent arithmetic basics") {
    LaurentPoly a = poly({{2, 1}, {0, -3}});
    LaurentPoly b = poly({{-2, 2}});
    CHECK((a * b) == poly({{0, 2}, {-2, -6}}));
    CHECK((a + (-a)).zero());
    CHECK(a.pow(2) == poly({{4, 1}, {2, -6}, {0, 9}}));
    CHECK(a.shifted(3) == poly({{5, 1}, {3, -3}}));
    CHECK(a.scale_exponents(-1) == poly({{-2, 1}, {0, -3}}));
    CHECK_THROWS_AS(poly({{1, 1}, {0, 1}}).divide_exact(poly({{1, 2}})),
                    NonExpandable);
}

TEST_CASE("bracket golden values") {
    CHECK(*kauffman_bracket(torus2(-3)).normalized ==
          poly({{7, 1}, {3, -1}, {-5, -1}}));
    CHECK(*kauffman_bracket(LinkDiagram::parse("O")).normalized ==
          poly({{0, 1}}));
    CHECK(*kauffman_bracket(torus2(-2)).normalized ==
          poly({{4, -1}, {-4, -1}}));
}

TEST_CASE("empty link has unreduced bracket 1 and no normalized form") {
    Bracket b = kauffman_bracket(LinkDiagram{});
    CHECK(b.unreduced == poly({{0, 1}}));
    CHECK_FALSE(b.normalized.has_value());
}

TEST_CASE("bracket multiplicativity over disjoint union") {
    LinkDiagram a = torus2(-3), b = torus2(2);
    LinkDiagram u = compose(a, b, ComposeMode::disjoint);
    CHECK(kauffman_bracket(u).unreduced ==
          kauffman_bracket(a).unreduced * kauffman_bracket(b).unreduced);
}

TEST_CASE("jones basics and mirror symmetry") {
    CHECK(jones(LinkDiagram::parse("O"), Orientation{{0}}) == poly({{0, 1}}));
    for (const char* name : {"trefoil_left.pd", "6_2_2.pd", "8_19.pd"}) {
        LinkDiagram d = khtest::load_fixture(name);
        LaurentPoly v = jones(d, khtest::default_orientation(d));
        LaurentPoly rev;
        for (const auto& [e, c] : v.terms()) rev.add_term(-e, c);
        // the matching orientation of the mirror is some flip assignment,
        // not necessarily the all-zero one
        int ncomp = (int)components(d).size();
        bool found = false;
        for (int mask = 0; mask < (1 << ncomp) && !found; ++mask) {
            Orientation om;
            for (int k = 0; k < ncomp; ++k)
                om.flip.push_back((mask >> k) & 1);
            found = jones(mirror(d), om) == rev;
        }
        CHECK(found);
    }
}

TEST_CASE("chain-level Euler characteristic equals the bracket state sum") {
    std::mt19937 rng(23);
    for (int t = 0; t < 20; ++t) {
        LinkDiagram d = khtest::random_braid_diagram(rng, 8);
        CHECK(chain_euler(d) == kauffman_bracket(d).unreduced);
    }
}

TEST_CASE("homology-level Euler characteristic equals the bracket") {
    for (const char* name : {"trefoil_left.pd", "6_2_2.pd", "8_19.pd"}) {
        LinkDiagram d = khtest::load_fixture(name);
        CHECK(homology_euler(khovanov(d)) == kauffman_bracket(d).unreduced);
    }
}

TEST_CASE("alternating degree span of the bracket") {
    for (const char* name : {"trefoil_left.pd", "6_2_2.pd"}) {
        LinkDiagram d = khtest::load_fixture(name);
        auto [sp, sm] = special_states(d);
        int n = d.crossing_count();
        int top = n + 2 * smooth(d, sp).count;
        int bot = -n - 2 * smooth(d, sm).count;
        const LaurentPoly& nb = *kauffman_bracket(d).normalized;
        CHECK(nb.max_deg() == top - 2);
        CHECK(nb.min_deg() == bot + 2);
        CHECK(kauffman_bracket(d).unreduced.max_deg() == top);
        CHECK(kauffman_bracket(d).unreduced.min_deg() == bot);
    }
}

TEST_CASE("generating polynomial of hopf chains") {
    LaurentPoly2 ring;  // a^2 + a^-2
    ring.add_term(2, 0, 1);
    ring.add_term(-2, 0, 1);
    LaurentPoly2 step;  // a^4 b^2 + a^-4 b^-2
    step.add_term(4, 2, 1);
    step.add_term(-4, -2, 1);
    for (int n = 1; n <= 3; ++n) {
        BigradedHomology h = khovanov(hopf_chain(n));
        CHECK(kh_generating_polynomial(h) == ring * step.pow(n));
        CHECK(torsion_generating_polynomial(h).zero());
    }
}

TEST_CASE("generating polynomial of the unknot and of nothing") {
    BigradedHomology h = khovanov(LinkDiagram::parse("O"));
    LaurentPoly2 expect;
    expect.add_term(2, 0, 1);
    expect.add_term(-2, 0, 1);
    CHECK(kh_generating_polynomial(h) == expect);
    CHECK(kh_generating_polynomial(BigradedHomology{}).zero());
}

TEST_CASE("qt conversion of the left trefoil, w = -3") {
    QtTable t = qt_convert(khovanov(torus2(-3)), -3);
    LaurentPoly2 free_expect;  // (a, b) exponent pairs
    free_expect.add_term(-1, 0, 1);
    free_expect.add_term(-3, 0, 1);
    free_expect.add_term(-5, -2, 1);
    free_expect.add_term(-9, -3, 1);
    CHECK(t.free_part == free_expect);
    LaurentPoly2 tor_expect;
    tor_expect.add_term(-7, -2, 1);
    CHECK(t.torsion_part == tor_expect);
}

TEST_CASE("qt conversion at the origin") {
    BigradedHomology h;
    h.set(0, 0, khtest::Z(1));
    QtTable t = qt_convert(h, 0);
    LaurentPoly2 expect;
    expect.add_term(0, 0, 1);
    CHECK(t.free_part == expect);
}

TEST_CASE("qt conversion torsion table of the 6^2_2 link, w = -6") {
    LinkDiagram d = khtest::load_fixture("6_2_2.pd");
    QtTable t = qt_convert(khovanov(d), -6);
    LaurentPoly2 expect;  // Q^-6 t^-1 + Q^-8 t^-2 + Q^-10 t^-3 + Q^-12 t^-4
    expect.add_term(-6, -1, 1);
    expect.add_term(-8, -2, 1);
    expect.add_term(-10, -3, 1);
    expect.add_term(-12, -4, 1);
    CHECK(t.torsion_part == expect);
}

TEST_CASE("qt conversion rejects bad parity") {
    BigradedHomology h;
    h.set(0, 1, khtest::Z(1));
    CHECK_THROWS_AS(qt_convert(h, 0), ParityError);
}
