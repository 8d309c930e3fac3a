#pragma once

#include <string>
#include <vector>

#include "khoworks/diagram.hpp"
#include "khoworks/homology_types.hpp"

namespace khoworks {

// Gradings where a theorem guarantees a Z_2 torsion summand.
struct TorsionPrediction {
    enum class Reason {
        odd_cycle_plus,
        odd_cycle_minus,
        even_cycle_plus,
        even_cycle_minus,
    };
    struct Slot {
        int i, j;
        Reason reason;
    };
    std::vector<Slot> slots;
};

const char* to_string(TorsionPrediction::Reason r);

TorsionPrediction predict_torsion(const LinkDiagram& d);

// Thickness of a homology support: minimal (k1, k2) with
//   N - 2|s-| - 4*k2 <= j - 2i <= 2|s+| - N + 4*k1
// on all nonzero groups, plus k = k1 + k2 + (|s+| + |s-| - N)/2.
// Values are half-integers stored on a doubled scale (k1x2 = 2*k1, ...).
struct ThicknessTriple {
    bool empty = true;  // no support; k-values meaningless
    int k1x2 = 0, k2x2 = 0, kx2 = 0;
};

struct ThicknessReport {
    ThicknessTriple full, free_part, torsion;
    int n = 0, s_plus = 0, s_minus = 0;
};

ThicknessReport thickness(const BigradedHomology& h, const LinkDiagram& d);

// Guaranteed envelope for a (caller-asserted) k-almost alternating diagram:
// H-(k,k)-thick and TH-(k,k-1)-thick.  Doubled scale as above.
struct ThicknessEnvelope {
    int k1x2 = 0, k2x2 = 0;
    int torsion_k1x2 = 0, torsion_k2x2 = 0;
};

ThicknessEnvelope thickness_bound(const LinkDiagram& d, int k);

// Signature of a non-split alternating diagram via the Traczyk formula
// n- - |s-| + 1; cross-checks the equal expression -n+ + |s+| - 1 and
// throws FormulaMismatch if they disagree (non-alternating input).
int alternating_signature(const LinkDiagram& d, const Orientation& o);

// Degree identities for non-split alternating diagrams without nugatory
// crossings: max[D] = N+2|s+|, min[D] = -N-2|s-|, max<D> = max[D]-2,
// min<D> = min[D]+2, max V = n+ - sigma/2, min V = -n- - sigma/2.
bool murasugi_degree_check(const LinkDiagram& d, const Orientation& o);

// Advisory only: |s+| + |s-| = N + 2 on a connected diagram, which holds
// exactly for alternating diagrams and their connected sums.
bool wu_alternating_advisory(const LinkDiagram& d);

}  // namespace khoworks
