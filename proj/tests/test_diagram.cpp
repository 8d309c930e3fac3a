#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <khoworks/diagram.hpp>

#include "support/test_helpers.hpp"

using namespace khoworks;

TEST_CASE("pd parse round-trip") {
    std::string text = "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)";
    LinkDiagram d = LinkDiagram::parse(text);
    CHECK(d.crossing_count() == 3);
    CHECK(LinkDiagram::parse(d.serialize()).serialize() == d.serialize());
}

TEST_CASE("pd parse empty and free loops") {
    LinkDiagram d = LinkDiagram::parse("");
    CHECK(d.crossing_count() == 0);
    CHECK(d.n_free_loops() == 0);

    LinkDiagram l = LinkDiagram::parse("O O");
    CHECK(l.crossing_count() == 0);
    CHECK(l.n_free_loops() == 2);
}

TEST_CASE("pd parse rejects bad arc degrees") {
    CHECK_THROWS_AS(LinkDiagram::parse("X(1,2,3,4)"), ArcDegreeError);
    CHECK_THROWS_AS(LinkDiagram::parse("X(1,1,1,2) X(2,3,3,4)"),
                    ArcDegreeError);
    CHECK_THROWS_AS(LinkDiagram::parse("X(1,2"), MalformedInput);
}

TEST_CASE("pd comments are ignored") {
    LinkDiagram d =
        LinkDiagram::parse("# a trefoil\nX(1,5,2,4) X(3,1,4,6) X(5,3,6,2)\n");
    CHECK(d.crossing_count() == 3);
}

TEST_CASE("trefoil special state circle counts") {
    LinkDiagram d = torus2(-3);
    auto [sp, sm] = special_states(d);
    CHECK(smooth(d, sp).count == 3);
    CHECK(smooth(d, sm).count == 2);
}

TEST_CASE("special states are all-plus / all-minus") {
    LinkDiagram d = torus2(-3);
    auto [sp, sm] = special_states(d);
    REQUIRE(sp.markers.size() == 3);
    for (int8_t m : sp.markers) CHECK(m == 1);
    for (int8_t m : sm.markers) CHECK(m == -1);
    CHECK(sp.sigma() == 3);
    CHECK(sm.sigma() == -3);

    LinkDiagram e;
    auto [ep, em] = special_states(e);
    CHECK(ep.markers.empty());
    CHECK(em.markers.empty());
}

TEST_CASE("torus2(-n) positive state is an n-gon of circles") {
    for (int n : {2, 3, 4, 5}) {
        LinkDiagram d = torus2(-n);
        auto [sp, sm] = special_states(d);
        CHECK(smooth(d, sp).count == n);
    }
}

TEST_CASE("zero-crossing unknot smooths to one circle") {
    LinkDiagram d = LinkDiagram::parse("O");
    CHECK(smooth(d, KauffmanState{}).count == 1);
}

TEST_CASE("mirror is an involution on state circle counts") {
    LinkDiagram d = torus2(-3);
    LinkDiagram dd = mirror(mirror(d));
    for (int mask = 0; mask < 8; ++mask) {
        KauffmanState s;
        for (int k = 0; k < 3; ++k)
            s.markers.push_back((mask >> k) & 1 ? 1 : -1);
        CHECK(smooth(d, s).count == smooth(dd, s).count);
    }
}

TEST_CASE("mirror negates writhe") {
    LinkDiagram d = torus2(-3);
    Orientation o = khtest::default_orientation(d);
    CHECK(writhe(mirror(d), o) == -writhe(d, o));
}

TEST_CASE("left trefoil writhe is -3 under either orientation") {
    LinkDiagram d = torus2(-3);
    CHECK(writhe(d, Orientation{{0}}) == -3);
    CHECK(writhe(d, Orientation{{1}}) == -3);
    CHECK(writhe(LinkDiagram::parse("O"), Orientation{{0}}) == 0);
}

TEST_CASE("compose adds crossing counts") {
    LinkDiagram a = torus2(-3), b = torus2(-2);
    LinkDiagram u = compose(a, b, ComposeMode::disjoint);
    CHECK(u.crossing_count() == 5);
    LinkDiagram c = compose(a, b, ComposeMode::connected_sum,
                            a.arc_name(0), b.arc_name(0));
    CHECK(c.crossing_count() == 5);
    CHECK(components(c).size() ==
          components(a).size() + components(b).size() - 1);
}

TEST_CASE("disjoint unknots") {
    LinkDiagram u = LinkDiagram::parse("O");
    LinkDiagram d = compose(u, u, ComposeMode::disjoint);
    CHECK(d.crossing_count() == 0);
    CHECK(d.n_free_loops() == 2);
}

TEST_CASE("compose rejects unknown arcs") {
    LinkDiagram a = torus2(-3), b = torus2(-2);
    CHECK_THROWS_AS(
        compose(a, b, ComposeMode::connected_sum, "no-such-arc", b.arc_name(0)),
        UnknownArc);
}

TEST_CASE("families") {
    CHECK(torus2(-3).crossing_count() == 3);
    CHECK(torus2(2).crossing_count() == 2);
    CHECK(hopf_chain(2).crossing_count() == 4);
    CHECK_THROWS_AS(torus2(0), InvalidParameter);
    CHECK_THROWS_AS(hopf_chain(0), InvalidParameter);
}

TEST_CASE("flipping one marker changes the circle count by one") {
    std::mt19937 rng(7);
    for (int t = 0; t < 25; ++t) {
        LinkDiagram d = khtest::random_braid_diagram(rng, 7);
        int n = d.crossing_count();
        std::uniform_int_distribution<int> mask_d(0, (1 << n) - 1);
        int mask = mask_d(rng);
        KauffmanState s;
        for (int k = 0; k < n; ++k)
            s.markers.push_back((mask >> k) & 1 ? 1 : -1);
        int base = smooth(d, s).count;
        for (int k = 0; k < n; ++k) {
            KauffmanState t2 = s;
            t2.markers[k] = -t2.markers[k];
            int c = smooth(d, t2).count;
            CHECK(std::abs(c - base) == 1);
        }
    }
}

TEST_CASE("dual state bound, with equality on alternating fixtures") {
    std::mt19937 rng(11);
    for (int t = 0; t < 30; ++t) {
        LinkDiagram d = khtest::random_braid_diagram(rng, 8);
        if (!d.connected()) continue;
        auto [sp, sm] = special_states(d);
        CHECK(smooth(d, sp).count + smooth(d, sm).count <=
              d.crossing_count() + 2);
    }
    for (const char* name : {"trefoil_left.pd", "6_2_2.pd"}) {
        LinkDiagram d = khtest::load_fixture(name);
        auto [sp, sm] = special_states(d);
        CHECK(smooth(d, sp).count + smooth(d, sm).count ==
              d.crossing_count() + 2);
    }
}

TEST_CASE("disjoint union makes circle counts additive") {
    LinkDiagram a = torus2(-2), b = torus2(-3);
    LinkDiagram u = compose(a, b, ComposeMode::disjoint);
    KauffmanState s;
    s.markers = {1, -1, 1, 1, -1};
    KauffmanState sa, sb;
    sa.markers = {1, -1};
    sb.markers = {1, 1, -1};
    CHECK(smooth(u, s).count == smooth(a, sa).count + smooth(b, sb).count);
}

TEST_CASE("resolve_crossing drops one crossing") {
    LinkDiagram d = torus2(-3);
    for (int m : {1, -1}) {
        LinkDiagram r = resolve_crossing(d, 0, m);
        CHECK(r.crossing_count() == 2);
    }
}

TEST_CASE("braid closure basics") {
    // sigma_1^3 on 2 strands: a trefoil
    LinkDiagram d = braid_closure({1, 1, 1}, 2);
    CHECK(d.crossing_count() == 3);
    CHECK(components(d).size() == 1);
    // unused third strand becomes a free loop
    LinkDiagram e = braid_closure({1}, 3);
    CHECK(e.n_free_loops() == 1);
}
