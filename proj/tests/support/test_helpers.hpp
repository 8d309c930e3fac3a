#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <khoworks/diagram.hpp>
#include <khoworks/homology_types.hpp>

#ifndef KHOWORKS_FIXTURE_DIR
#error "KHOWORKS_FIXTURE_DIR must be defined by the build"
#endif

namespace khtest {

inline std::string fixture_path(const std::string& name) {
    return std::string(KHOWORKS_FIXTURE_DIR) + "/" + name;
}

inline khoworks::LinkDiagram load_fixture(const std::string& name) {
    std::ifstream in(fixture_path(name));
    std::stringstream ss;
    ss << in.rdbuf();
    return khoworks::LinkDiagram::parse(ss.str());
}

inline khoworks::AbelianGroup Z(int rank) {
    khoworks::AbelianGroup g;
    g.free_rank = rank;
    return g;
}

inline khoworks::AbelianGroup Zn(int rank, std::vector<long long> factors) {
    khoworks::AbelianGroup g;
    g.free_rank = rank;
    g.invariant_factors = std::move(factors);
    return g;
}

struct GoldenEntry {
    int i, j;
    khoworks::AbelianGroup g;
};

inline khoworks::BigradedHomology golden(std::vector<GoldenEntry> entries) {
    khoworks::BigradedHomology h;
    for (auto& e : entries) h.set(e.i, e.j, e.g);
    return h;
}

// Random connected diagrams as braid closures.  Words are rejected until the
// closure is connected and the crossing count fits the budget.
inline khoworks::LinkDiagram random_braid_diagram(std::mt19937& rng,
                                                  int max_crossings) {
    std::uniform_int_distribution<int> strands_d(2, 4);
    for (;;) {
        int strands = strands_d(rng);
        std::uniform_int_distribution<int> len_d(1, max_crossings);
        int len = len_d(rng);
        std::uniform_int_distribution<int> gen_d(1, strands - 1);
        std::uniform_int_distribution<int> sgn_d(0, 1);
        std::vector<int> word;
        for (int k = 0; k < len; ++k) {
            int g = gen_d(rng);
            word.push_back(sgn_d(rng) ? g : -g);
        }
        khoworks::LinkDiagram d = khoworks::braid_closure(word, strands);
        if (d.crossing_count() == 0) continue;
        if (d.crossing_count() > max_crossings) continue;
        return d;
    }
}

inline khoworks::Orientation default_orientation(const khoworks::LinkDiagram& d) {
    return khoworks::Orientation{
        std::vector<uint8_t>(khoworks::components(d).size(), 0)};
}

}  // namespace khtest
