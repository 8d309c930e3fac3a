#pragma once

#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

namespace khoworks {

// Finitely generated abelian group: free rank plus invariant factors
// d1 | d2 | ..., each >= 2.
struct AbelianGroup {
    int free_rank = 0;
    std::vector<long long> invariant_factors;

    bool trivial() const { return free_rank == 0 && invariant_factors.empty(); }
    bool torsion_free() const { return invariant_factors.empty(); }
    bool operator==(const AbelianGroup&) const = default;
};

// Mapping (i, j) -> group; only nonzero groups stored.
struct BigradedHomology {
    std::map<std::pair<int, int>, AbelianGroup> groups;

    const AbelianGroup& at(int i, int j) const {
        static const AbelianGroup zero{};
        auto it = groups.find({i, j});
        return it == groups.end() ? zero : it->second;
    }
    void set(int i, int j, AbelianGroup g) {
        if (!g.trivial()) groups[{i, j}] = std::move(g);
    }
    bool operator==(const BigradedHomology&) const = default;
};

// Mapping (i, j, k) -> group for the annulus version.
struct StratifiedHomology {
    std::map<std::tuple<int, int, int>, AbelianGroup> groups;

    const AbelianGroup& at(int i, int j, int k) const {
        static const AbelianGroup zero{};
        auto it = groups.find({i, j, k});
        return it == groups.end() ? zero : it->second;
    }
    void set(int i, int j, int k, AbelianGroup g) {
        if (!g.trivial()) groups[{i, j, k}] = std::move(g);
    }
    bool operator==(const StratifiedHomology&) const = default;
};

}  // namespace khoworks
