#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "khoworks/errors.hpp"

namespace khoworks {

// Arc labels are opaque tokens; internally they are interned to dense ids.
using ArcId = int;

// One crossing.  Slots are listed in counterclockwise planar order; slots 0
// and 2 carry the under-strand, slots 1 and 3 the over-strand.
struct Crossing {
    std::array<ArcId, 4> slots;
};

// Half-edge positions: pos = 4*crossing_index + slot, in [0, 4N).
inline int pos_crossing(int pos) { return pos >> 2; }
inline int pos_slot(int pos) { return pos & 3; }

// An unoriented framed link diagram given by a PD code.  Crossing order is
// the input order and is the order used by the differential sign rule.
class LinkDiagram {
public:
    LinkDiagram() = default;

    // Build from crossings given as arc-name 4-tuples.
    LinkDiagram(const std::vector<std::array<std::string, 4>>& crossings,
                int n_free_loops = 0, std::string label = {});

    // Parse the PD text format: tokens X(a,b,c,d), O for a free loop,
    // '#' starts a line comment.
    static LinkDiagram parse(const std::string& text);
    std::string serialize() const;

    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    int n_free_loops() const { return n_free_loops_; }
    const std::string& label() const { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }

    const std::vector<Crossing>& crossings() const { return crossings_; }
    const Crossing& crossing(int c) const { return crossings_[c]; }

    int arc_count() const { return static_cast<int>(arc_names_.size()); }
    const std::string& arc_name(ArcId a) const { return arc_names_[a]; }
    // Throws UnknownArc.
    ArcId arc_id(const std::string& name) const;
    bool has_arc(const std::string& name) const;

    ArcId arc_at(int pos) const { return crossings_[pos >> 2].slots[pos & 3]; }
    // The other occurrence of the arc at `pos`.
    int arc_partner(int pos) const { return arc_partner_[pos]; }
    // First occurrence = smaller position of the two.
    bool arc_first_occurrence(int pos) const { return pos < arc_partner_[pos]; }
    // The two positions of an arc, ascending.
    std::pair<int, int> arc_positions(ArcId a) const { return arc_pos_[a]; }

    // True if the 4-valent graph (crossings joined by arcs) together with
    // free loops has exactly one connected component.
    bool connected() const;

private:
    void index_arcs();  // builds arc_partner_/arc_pos_, validates degree 2

    std::vector<Crossing> crossings_;
    std::vector<std::string> arc_names_;
    std::unordered_map<std::string, ArcId> arc_ids_;
    std::vector<int> arc_partner_;                 // by position
    std::vector<std::pair<int, int>> arc_pos_;     // by arc id
    int n_free_loops_ = 0;
    std::string label_;
};

// A marker per crossing: +1 or -1.
struct KauffmanState {
    std::vector<int8_t> markers;

    int sigma() const {
        int s = 0;
        for (int8_t m : markers) s += m;
        return s;
    }
};

// Result of smoothing a diagram along a state.  Circles are cyclically
// ordered position lists, sorted by their minimal position; free loops come
// last (with empty position lists) in loop order.
struct StateCircles {
    std::vector<std::vector<int>> circles;
    std::vector<int> circle_of;   // position -> circle index
    std::vector<long> winding;    // per circle; all 0 unless weights given
    int count = 0;                // == circles.size(), includes free loops
};

// Optional annulus data for smooth(): per-arc cut weights (indexed by ArcId,
// counted in the arc's first-occurrence -> second-occurrence direction) and
// per-free-loop windings.
struct CutWeights {
    std::vector<long> arc;
    std::vector<long> loop;
};

StateCircles smooth(const LinkDiagram& d, const KauffmanState& s,
                    const CutWeights* weights = nullptr);

// (s+, s-): the all-positive and all-negative states.
std::pair<KauffmanState, KauffmanState> special_states(const LinkDiagram& d);

// Over/under roles swapped at every crossing (slot roles rotated by one).
LinkDiagram mirror(const LinkDiagram& d);

enum class ComposeMode { disjoint, connected_sum };

// Disjoint union or connected sum.  For connected_sum, arc1/arc2 name the
// arcs to cut; a crossingless summand may be named by an empty arc string,
// in which case one of its free loops is consumed instead.
LinkDiagram compose(const LinkDiagram& d1, const LinkDiagram& d2,
                    ComposeMode mode, const std::string& arc1 = {},
                    const std::string& arc2 = {});

// Standard families.
LinkDiagram torus2(int n);       // 2-strand torus diagram, |n| crossings
LinkDiagram hopf_chain(int m);   // m positive Hopf links summed in a row

// Closure of a braid word on `strands` strands.  Letters are +-g for the
// generator between strands g and g+1 (1-based), sign = handedness.
// Crossing order = word order; unused strands become free loops.
// `closure_arcs`, if given, receives per strand the final name of the arc
// closing that strand ("loop<k>" when the strand becomes a free loop) plus
// the direction of the closure traversal (bottom of the braid back to the
// top) relative to the arc's first->second occurrence order: +1 if they
// agree, -1 otherwise (+1 for loops).
struct ClosureArc {
    std::string name;
    int direction;
};
LinkDiagram braid_closure(const std::vector<int>& word, int strands,
                          std::string label = {},
                          std::vector<ClosureArc>* closure_arcs = nullptr);

// Replace crossing v by its +1 or -1 smoothing (a diagram with N-1
// crossings).  `arc_map`, if given, receives the mapping old ArcId -> new
// arc name (arcs merged by the smoothing map to one name; arcs that close
// into a free loop map to "").
LinkDiagram resolve_crossing(const LinkDiagram& d, int v, int marker,
                             std::vector<std::string>* arc_map = nullptr);

// One traversal direction bit per link component (components ordered by
// their minimal position; free loops last).
struct Orientation {
    std::vector<uint8_t> flip;
};

// Link components: each is the cyclic position sequence of a strand
// traversal (through-pairing 0<->2, 1<->3 at crossings).  Free loops are
// appended as empty sequences.
std::vector<std::vector<int>> components(const LinkDiagram& d);

// n+ - n- under the standard sign convention.
int writhe(const LinkDiagram& d, const Orientation& o);

// (n+, n-) for the given orientation.
std::pair<int, int> signed_crossing_counts(const LinkDiagram& d,
                                           const Orientation& o);

}  // namespace khoworks
