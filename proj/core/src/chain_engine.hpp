#pragma once

// Shared enhanced-state chain complex engine for the classical and annulus
// homology computations.  Internal to the library; not installed.

#include <cstdint>
#include <map>
#include <vector>

#include "khoworks/diagram.hpp"
#include "khoworks/homology_types.hpp"

namespace khoworks::detail {

enum class Variant { full, reduced, coreduced };

struct EngineConfig {
    const CutWeights* weights = nullptr;  // null = classical (all trivial)
    Variant variant = Variant::full;
    ArcId basepoint = -1;  // required for reduced/coreduced
    int limit = 16;
    int jobs = 1;
};

// A generator: marker mask (bit v = 1 means negative marker at crossing v)
// plus sign mask (bit c = 1 means circle c positive, canonical order).
struct Gen {
    std::uint32_t mask;
    std::uint32_t signs;
};

struct PrecomputedStates {
    // Indexed by marker mask.
    std::vector<StateCircles> circles;
    // Basepoint circle index per mask (only when basepoint >= 0).
    std::vector<int> base_circle;
};

PrecomputedStates precompute_states(const LinkDiagram& d,
                                    const EngineConfig& cfg);

// Gradings of a generator.
struct Grading3 {
    int i, j, k;
};
Grading3 grading_of(const LinkDiagram& d, const PrecomputedStates& pre,
                    std::uint32_t mask, std::uint32_t signs);

// All generators (respecting the reduced/coreduced restriction), bucketed
// by (j, k) then i; within a bucket, ordered by (mask, signs) ascending.
struct Slice {
    int j, k;
    std::map<int, std::vector<Gen>, std::greater<int>> levels;  // i desc
};

std::vector<Slice> build_slices(const LinkDiagram& d,
                                const PrecomputedStates& pre,
                                const EngineConfig& cfg);

// Matrix entries of d restricted to one source level of one slice:
// for each source generator (by index into `sources`), the list of
// (target Gen, +-1 coefficient).  For the coreduced variant targets landing
// in the positive-basepoint subcomplex are dropped; for reduced they cannot
// occur.
struct Entry {
    int src;
    Gen dst;
    int coeff;
};

std::vector<Entry> differential_entries(const LinkDiagram& d,
                                        const PrecomputedStates& pre,
                                        const EngineConfig& cfg,
                                        const std::vector<Gen>& sources);

// Full homology computation; classical callers read k == 0.
StratifiedHomology compute_homology(const LinkDiagram& d,
                                    const EngineConfig& cfg);

// Size guard; throws SizeLimit.
void check_size(const LinkDiagram& d, const EngineConfig& cfg);

}  // namespace khoworks::detail
