#pragma once

#include <map>
#include <string>
#include <vector>

#include "khoworks/diagram.hpp"
#include "khoworks/homology_types.hpp"
#include "khoworks/snf.hpp"

namespace khoworks {

// An enhanced state: a marker per crossing plus a sign per circle of the
// smoothed diagram (circles in canonical order: sorted by minimal position,
// free loops last).
struct EnhancedState {
    KauffmanState markers;
    std::vector<int8_t> circle_signs;  // +1 / -1
    int i = 0;                         // sigma(s)
    int j = 0;                         // sigma(s) + 2 tau(S)
};

// A differential block d_{i,j}: C_{i,j} -> C_{i-2,j}, with its bases.
struct IntegerMatrix {
    Mat64 m;  // rows indexed by target states, cols by source states
    std::vector<EnhancedState> row_basis, col_basis;
};

struct HomologyOptions {
    // Crossing-count budget.  The default honours the KHOWORKS_LIMIT
    // environment variable (falling back to 16).
    int limit = default_limit();
    int jobs = 1;

    static int default_limit();
};

// All enhanced states bucketed by grading.
std::map<std::pair<int, int>, std::vector<EnhancedState>> chain_groups(
    const LinkDiagram& d, const HomologyOptions& opt = {});

IntegerMatrix differential(const LinkDiagram& d, int i, int j,
                           const HomologyOptions& opt = {});

SnfSummary smith_normal_form(const IntegerMatrix& m);

BigradedHomology khovanov(const LinkDiagram& d,
                          const HomologyOptions& opt = {});

// Homology of the subcomplex of states whose basepoint circle is positive.
// The basepoint is an arc label; for a crossingless diagram the empty label
// selects the first free loop.
BigradedHomology reduced(const LinkDiagram& d, const std::string& basepoint,
                         const HomologyOptions& opt = {});

// Homology of the quotient by that subcomplex.
BigradedHomology coreduced(const LinkDiagram& d, const std::string& basepoint,
                           const HomologyOptions& opt = {});

}  // namespace khoworks
