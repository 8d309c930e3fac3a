#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <set>

#include <khoworks/homology.hpp>
#include <khoworks/state_graph.hpp>

#include "support/test_helpers.hpp"

using namespace khoworks;
using khtest::Z;
using khtest::Zn;

namespace {

BigradedHomology trefoil_golden() {
    return khtest::golden({{3, 9, Z(1)},
                           {1, 5, Zn(0, {2})},
                           {1, 1, Z(1)},
                           {-3, -3, Z(1)},
                           {-3, -7, Z(1)}});
}

}  // namespace

TEST_CASE("left trefoil chain dimensions") {
    auto groups = chain_groups(torus2(-3));
    auto dim = [&](int i, int j) {
        auto it = groups.find({i, j});
        return it == groups.end() ? 0 : (int)it->second.size();
    };
    CHECK(dim(3, 9) == 1);
    CHECK(dim(1, 5) == 3);
    CHECK(dim(3, 5) == 3);
    CHECK(dim(-3, 1) == 1);
    CHECK(dim(-1, 1) == 3);
    CHECK(dim(1, 1) == 6);
    CHECK(dim(3, 1) == 3);
    CHECK(dim(-3, -3) == 2);
    CHECK(dim(-1, -3) == 3);
    CHECK(dim(1, -3) == 3);
    CHECK(dim(3, -3) == 1);
    CHECK(dim(-3, -7) == 1);
    int total = 0;
    for (const auto& [ij, v] : groups) total += (int)v.size();
    CHECK(total == 30);
}

TEST_CASE("every enhanced state has consistent gradings") {
    LinkDiagram d = torus2(-3);
    for (const auto& [ij, states] : chain_groups(d))
        for (const EnhancedState& s : states) {
            CHECK(s.i == ij.first);
            CHECK(s.j == ij.second);
            CHECK(s.i == s.markers.sigma());
            int tau = 0;
            for (int8_t c : s.circle_signs) tau += c;
            CHECK(s.j == s.i + 2 * tau);
        }
}

TEST_CASE("unknot chain groups") {
    auto groups = chain_groups(LinkDiagram::parse("O"));
    REQUIRE(groups.size() == 2);
    CHECK(groups.at({0, 2}).size() == 1);
    CHECK(groups.at({0, -2}).size() == 1);
}

TEST_CASE("2-strand torus chain dimensions, even size") {
    for (int n : {4, 6}) {
        auto groups = chain_groups(torus2(-n));
        CHECK((int)groups.at({n - 2, 3 * n - 8}).size() == n * (n - 1));
        CHECK((int)groups.at({n - 4, 3 * n - 8}).size() == n * (n - 1) / 2);
    }
}

TEST_CASE("trefoil top differential has determinant 2") {
    IntegerMatrix m = differential(torus2(-3), 3, 5);
    CHECK(m.m.rows == 3);
    CHECK(m.m.cols == 3);
    SnfSummary s = smith_normal_form(m);
    CHECK(s.rank == 3);
    CHECK(s.invariant_factors == std::vector<long long>{1, 1, 2});
}

TEST_CASE("odd 2-strand torus top block is a circulant of determinant 2") {
    for (int n : {3, 5, 7}) {
        LinkDiagram d = torus2(-n);
        IntegerMatrix m = differential(d, n, 3 * n - 4);
        CHECK(m.m.rows == n);
        CHECK(m.m.cols == n);
        // two nonzero entries per column
        for (int c = 0; c < n; ++c) {
            int nz = 0;
            for (int r = 0; r < n; ++r) nz += m.m(r, c) != 0;
            CHECK(nz == 2);
        }
        SnfSummary s = smith_normal_form(m);
        CHECK(s.rank == n);
        CHECK(s.invariant_factors.back() == 2);
    }
}

TEST_CASE("empty gradings give empty matrices") {
    IntegerMatrix m = differential(torus2(-3), 99, 99);
    CHECK(m.m.rows * m.m.cols == 0);
}

TEST_CASE("d o d = 0 on the fixtures") {
    for (const char* name :
         {"trefoil_left.pd", "6_2_2.pd", "8_19.pd", "8_4_1.pd"}) {
        LinkDiagram d = khtest::load_fixture(name);
        for (const auto& [ij, states] : chain_groups(d)) {
            auto [i, j] = ij;
            IntegerMatrix a = differential(d, i, j);
            IntegerMatrix b = differential(d, i + 2, j);
            if (a.m.rows == 0 || b.m.cols == 0) continue;
            MatZ prod = matmul(to_matz(a.m), to_matz(b.m));
            CHECK(prod.is_zero());
        }
    }
}

TEST_CASE("left trefoil homology") {
    CHECK(khovanov(torus2(-3)) == trefoil_golden());
}

TEST_CASE("zero-crossing unknot homology") {
    CHECK(khovanov(LinkDiagram::parse("O")) ==
          khtest::golden({{0, 2, Z(1)}, {0, -2, Z(1)}}));
}

TEST_CASE("6^2_2 homology") {
    CHECK(khovanov(khtest::load_fixture("6_2_2.pd")) ==
          khtest::golden({{6, 14, Z(1)},
                          {6, 10, Z(1)},
                          {4, 10, Z(1)},
                          {2, 6, Zn(1, {2})},
                          {2, 2, Z(1)},
                          {0, 2, Zn(1, {2})},
                          {0, -2, Z(1)},
                          {-2, -2, Zn(1, {2})},
                          {-2, -6, Z(1)},
                          {-4, -6, Zn(0, {2})},
                          {-4, -10, Z(1)},
                          {-6, -10, Z(1)},
                          {-6, -14, Z(1)}}));
}

TEST_CASE("8_19 homology") {
    CHECK(khovanov(khtest::load_fixture("8_19.pd")) ==
          khtest::golden({{8, 14, Z(1)},
                          {8, 10, Z(1)},
                          {4, 6, Z(1)},
                          {2, 2, Zn(0, {2})},
                          {2, -2, Z(1)},
                          {0, 2, Z(1)},
                          {0, -2, Z(1)},
                          {-2, -6, Z(1)},
                          {-2, -10, Z(1)}}));
}

TEST_CASE("homology is independent of the crossing order") {
    LinkDiagram d = khtest::load_fixture("trefoil_left.pd");
    LinkDiagram r = LinkDiagram::parse("X(5,1,4,6) X(1,2,3,4) X(2,5,6,3)");
    CHECK(khovanov(d) == khovanov(r));
}

TEST_CASE("duality under taking the mirror image") {
    for (const char* name : {"trefoil_left.pd", "6_2_2.pd", "8_19.pd"}) {
        LinkDiagram d = khtest::load_fixture(name);
        BigradedHomology h = khovanov(d), hm = khovanov(mirror(d));
        for (const auto& [ij, g] : h.groups) {
            auto [i, j] = ij;
            CHECK(g.free_rank == hm.at(-i, -j).free_rank);
            CHECK(g.invariant_factors ==
                  hm.at(-i - 2, -j).invariant_factors);
        }
        for (const auto& [ij, g] : hm.groups) {
            auto [i, j] = ij;
            CHECK(g.free_rank == h.at(-i, -j).free_rank);
        }
    }
}

TEST_CASE("kuenneth for a disjoint unknot factor") {
    LinkDiagram d = khtest::load_fixture("trefoil_left.pd");
    LinkDiagram u = compose(d, LinkDiagram::parse("O"), ComposeMode::disjoint);
    BigradedHomology h = khovanov(d), hu = khovanov(u);
    // tensoring with Z at (0,2) + Z at (0,-2) doubles every group
    for (const auto& [ij, g] : h.groups) {
        auto [i, j] = ij;
        for (int dj : {2, -2}) {
            const AbelianGroup& got = hu.at(i, j + dj);
            CHECK(got.free_rank ==
                  g.free_rank + h.at(i, j + 2 * dj).free_rank);
        }
    }
}

TEST_CASE("extreme groups of adequate diagrams") {
    for (const char* name : {"trefoil_left.pd", "6_2_2.pd", "8_4_1.pd"}) {
        LinkDiagram d = khtest::load_fixture(name);
        auto [sp, sm] = special_states(d);
        int n = d.crossing_count();
        BigradedHomology h = khovanov(d);
        CHECK(h.at(n, n + 2 * smooth(d, sp).count) == Z(1));
        CHECK(h.at(-n, -n - 2 * smooth(d, sm).count) == Z(1));
    }
    // +-adequate only: top group guaranteed, bottom not
    LinkDiagram d = khtest::load_fixture("8_19.pd");
    auto [sp, sm] = special_states(d);
    CHECK(khovanov(d).at(8, 8 + 2 * smooth(d, sp).count) == Z(1));
}

TEST_CASE("reduced and co-reduced trefoil") {
    LinkDiagram d = torus2(-3);
    std::string bp = d.arc_name(0);
    CHECK(reduced(d, bp) == khtest::golden({{3, 9, Z(1)},
                                            {1, 5, Z(1)},
                                            {-3, -3, Z(1)}}));
    CHECK(coreduced(d, bp) == khtest::golden({{3, 5, Z(1)},
                                              {1, 1, Z(1)},
                                              {-3, -7, Z(1)}}));
}

TEST_CASE("reduced homology of the unknot") {
    LinkDiagram u = LinkDiagram::parse("O");
    CHECK(reduced(u, "") == khtest::golden({{0, 2, Z(1)}}));
    CHECK(coreduced(u, "") == khtest::golden({{0, -2, Z(1)}}));
}

TEST_CASE("reduced homology rejects unknown basepoints") {
    CHECK_THROWS_AS(reduced(torus2(-3), "nope"), UnknownArc);
}

TEST_CASE("rank bookkeeping between reduced, co-reduced and full") {
    for (const char* name : {"trefoil_left.pd", "6_2_2.pd"}) {
        LinkDiagram d = khtest::load_fixture(name);
        std::string bp = d.arc_name(0);
        BigradedHomology h = khovanov(d), hr = reduced(d, bp),
                         hc = coreduced(d, bp);
        std::set<std::pair<int, int>> support;
        for (const auto& [ij, g] : h.groups) support.insert(ij);
        for (const auto& [ij, g] : hr.groups) support.insert(ij);
        for (const auto& [ij, g] : hc.groups) support.insert(ij);
        for (auto [i, j] : support)
            CHECK(h.at(i, j).free_rank <=
                  hr.at(i, j).free_rank + hc.at(i, j).free_rank);
    }
}

TEST_CASE("the trefoil connecting map multiplies by 2") {
    // the long exact sequence pairs the co-reduced Z at (3,5) with the
    // reduced Z at (1,5); the only group structure consistent with the full
    // homology vanishing at (3,5) and being Z_2 at (1,5) is multiplication
    // by 2 with cokernel Z_2
    LinkDiagram d = torus2(-3);
    std::string bp = d.arc_name(0);
    BigradedHomology h = khovanov(d);
    CHECK(coreduced(d, bp).at(3, 5) == Z(1));
    CHECK(reduced(d, bp).at(1, 5) == Z(1));
    CHECK(h.at(3, 5).trivial());
    CHECK(h.at(1, 5) == Zn(0, {2}));
}

TEST_CASE("reduced homology of alternating fixtures is thin and torsion-free") {
    for (const char* name : {"trefoil_left.pd", "6_2_2.pd"}) {
        LinkDiagram d = khtest::load_fixture(name);
        auto [sp, sm] = special_states(d);
        int n = d.crossing_count(), s_plus = smooth(d, sp).count;
        BigradedHomology hr = reduced(d, d.arc_name(0));
        BigradedHomology hc = coreduced(d, d.arc_name(0));
        for (const auto& [ij, g] : hr.groups) {
            CHECK(g.torsion_free());
            auto [i, j] = ij;
            CHECK((n - i) % 2 == 0);
            CHECK(j == n + 2 * s_plus - 2 * (n - i));  // single diagonal
        }
        // co-reduced sits one diagonal lower with the same ranks
        for (const auto& [ij, g] : hr.groups) {
            auto [i, j] = ij;
            CHECK(hc.at(i, j - 4).free_rank == g.free_rank);
        }
    }
}

TEST_CASE("size limit is enforced") {
    HomologyOptions opt;
    opt.limit = 2;
    CHECK_THROWS_AS(khovanov(torus2(-3), opt), SizeLimit);
}

TEST_CASE("KHOWORKS_LIMIT drives the default budget") {
    setenv("KHOWORKS_LIMIT", "5", 1);
    CHECK(HomologyOptions::default_limit() == 5);
    unsetenv("KHOWORKS_LIMIT");
    CHECK(HomologyOptions::default_limit() == 16);
}

TEST_CASE("parallel computation matches serial") {
    LinkDiagram d = khtest::load_fixture("6_2_2.pd");
    HomologyOptions serial, parallel;
    parallel.jobs = 4;
    CHECK(khovanov(d, serial) == khovanov(d, parallel));
}
