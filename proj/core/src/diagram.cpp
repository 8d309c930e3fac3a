#include "khoworks/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

namespace khoworks {

namespace {

// Smoothing convention: with slots 0..3 counterclockwise and the
// under-strand on slots (0,2), the positive marker joins slot pairs (0,3)
// and (1,2), the negative marker joins (0,1) and (2,3).  Calibrated against
// the golden trefoil table (see docs/calibration.md and the torus2 tests).
int smoothing_partner_slot(int slot, int marker) {
    return marker > 0 ? (slot ^ 3) : (slot ^ 1);
}

}  // namespace

LinkDiagram::LinkDiagram(
    const std::vector<std::array<std::string, 4>>& crossings, int n_free_loops,
    std::string label)
    : n_free_loops_(n_free_loops), label_(std::move(label)) {
    if (n_free_loops < 0) throw InvalidParameter("negative free loop count");
    crossings_.reserve(crossings.size());
    for (const auto& cr : crossings) {
        Crossing c{};
        for (int k = 0; k < 4; ++k) {
            const std::string& name = cr[k];
            if (name.empty()) throw MalformedInput("empty arc label");
            auto it = arc_ids_.find(name);
            if (it == arc_ids_.end()) {
                ArcId id = static_cast<ArcId>(arc_names_.size());
                arc_names_.push_back(name);
                it = arc_ids_.emplace(name, id).first;
            }
            c.slots[k] = it->second;
        }
        crossings_.push_back(c);
    }
    index_arcs();
}

void LinkDiagram::index_arcs() {
    const int n4 = 4 * crossing_count();
    arc_partner_.assign(n4, -1);
    arc_pos_.assign(arc_count(), {-1, -1});
    for (int pos = 0; pos < n4; ++pos) {
        ArcId a = arc_at(pos);
        auto& pp = arc_pos_[a];
        if (pp.first < 0) {
            pp.first = pos;
        } else if (pp.second < 0) {
            pp.second = pos;
        } else {
            throw ArcDegreeError("arc '" + arc_names_[a] +
                                 "' used more than twice");
        }
    }
    for (ArcId a = 0; a < arc_count(); ++a) {
        const auto& pp = arc_pos_[a];
        if (pp.second < 0)
            throw ArcDegreeError("arc '" + arc_names_[a] + "' used only once");
        arc_partner_[pp.first] = pp.second;
        arc_partner_[pp.second] = pp.first;
    }
}

LinkDiagram LinkDiagram::parse(const std::string& text) {
    // Strip comments, then split on whitespace.
    std::string clean;
    clean.reserve(text.size());
    bool comment = false;
    for (char ch : text) {
        if (ch == '#') comment = true;
        if (ch == '\n') comment = false;
        clean.push_back(comment ? ' ' : ch);
    }
    std::vector<std::array<std::string, 4>> crossings;
    int loops = 0;
    std::istringstream in(clean);
    std::string tok;
    while (in >> tok) {
        if (tok == "O") {
            ++loops;
            continue;
        }
        if (tok.size() >= 3 && tok[0] == 'X' && tok[1] == '(' &&
            tok.back() == ')') {
            std::array<std::string, 4> arcs;
            std::string body = tok.substr(2, tok.size() - 3);
            size_t start = 0;
            int k = 0;
            for (;;) {
                size_t comma = body.find(',', start);
                std::string piece = body.substr(
                    start, comma == std::string::npos ? comma : comma - start);
                if (piece.empty() || k >= 4)
                    throw MalformedInput("bad crossing token: " + tok);
                arcs[k++] = piece;
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
            if (k != 4) throw MalformedInput("bad crossing token: " + tok);
            crossings.push_back(arcs);
            continue;
        }
        throw MalformedInput("unrecognized token: " + tok);
    }
    return LinkDiagram(crossings, loops);
}

std::string LinkDiagram::serialize() const {
    std::ostringstream out;
    bool first = true;
    for (const Crossing& c : crossings_) {
        if (!first) out << ' ';
        first = false;
        out << "X(" << arc_names_[c.slots[0]] << ',' << arc_names_[c.slots[1]]
            << ',' << arc_names_[c.slots[2]] << ',' << arc_names_[c.slots[3]]
            << ')';
    }
    for (int i = 0; i < n_free_loops_; ++i) {
        if (!first) out << ' ';
        first = false;
        out << 'O';
    }
    return out.str();
}

ArcId LinkDiagram::arc_id(const std::string& name) const {
    auto it = arc_ids_.find(name);
    if (it == arc_ids_.end()) throw UnknownArc("no arc named '" + name + "'");
    return it->second;
}

bool LinkDiagram::has_arc(const std::string& name) const {
    return arc_ids_.count(name) != 0;
}

bool LinkDiagram::connected() const {
    const int n = crossing_count();
    int pieces = n_free_loops_;
    if (n > 0) {
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (ArcId a = 0; a < arc_count(); ++a) {
            int u = find(arc_pos_[a].first >> 2);
            int v = find(arc_pos_[a].second >> 2);
            if (u != v) parent[u] = v;
        }
        int comps = 0;
        for (int i = 0; i < n; ++i)
            if (find(i) == i) ++comps;
        pieces += comps;
    }
    return pieces == 1;
}

StateCircles smooth(const LinkDiagram& d, const KauffmanState& s,
                    const CutWeights* weights) {
    const int n = d.crossing_count();
    if (static_cast<int>(s.markers.size()) != n)
        throw InvalidParameter("state length != crossing count");
    StateCircles out;
    const int n4 = 4 * n;
    out.circle_of.assign(n4, -1);
    std::vector<char> visited(n4, 0);
    for (int start = 0; start < n4; ++start) {
        if (visited[start]) continue;
        std::vector<int> circle;
        long wind = 0;
        int cur = start;
        do {
            // Within-crossing jump per the marker...
            int c = cur >> 2, slot = cur & 3;
            int q = (c << 2) | smoothing_partner_slot(slot, s.markers[c]);
            circle.push_back(cur);
            circle.push_back(q);
            visited[cur] = visited[q] = 1;
            // ...then along the arc to its other occurrence.
            if (weights) {
                long w = weights->arc[d.arc_at(q)];
                wind += d.arc_first_occurrence(q) ? w : -w;
            }
            cur = d.arc_partner(q);
        } while (cur != start);
        int idx = static_cast<int>(out.circles.size());
        for (int p : circle) out.circle_of[p] = idx;
        out.circles.push_back(std::move(circle));
        out.winding.push_back(wind);
    }
    for (int i = 0; i < d.n_free_loops(); ++i) {
        out.circles.emplace_back();
        out.winding.push_back(weights && i < static_cast<int>(weights->loop.size())
                                  ? weights->loop[i]
                                  : 0);
    }
    out.count = static_cast<int>(out.circles.size());
    return out;
}

std::pair<KauffmanState, KauffmanState> special_states(const LinkDiagram& d) {
    KauffmanState plus, minus;
    plus.markers.assign(d.crossing_count(), int8_t{1});
    minus.markers.assign(d.crossing_count(), int8_t{-1});
    return {plus, minus};
}

LinkDiagram mirror(const LinkDiagram& d) {
    std::vector<std::array<std::string, 4>> crossings;
    crossings.reserve(d.crossing_count());
    for (const Crossing& c : d.crossings()) {
        crossings.push_back({d.arc_name(c.slots[1]), d.arc_name(c.slots[2]),
                             d.arc_name(c.slots[3]), d.arc_name(c.slots[0])});
    }
    return LinkDiagram(crossings, d.n_free_loops(), d.label());
}

namespace {

// Rename arcs to "1","2",... in order of first appearance.
LinkDiagram renumber(const std::vector<std::array<std::string, 4>>& crossings,
                     int loops, std::string label) {
    std::unordered_map<std::string, std::string> names;
    std::vector<std::array<std::string, 4>> out(crossings.size());
    int next = 1;
    for (size_t c = 0; c < crossings.size(); ++c) {
        for (int k = 0; k < 4; ++k) {
            auto it = names.find(crossings[c][k]);
            if (it == names.end())
                it = names.emplace(crossings[c][k], std::to_string(next++))
                         .first;
            out[c][k] = it->second;
        }
    }
    return LinkDiagram(out, loops, std::move(label));
}

}  // namespace

LinkDiagram compose(const LinkDiagram& d1, const LinkDiagram& d2,
                    ComposeMode mode, const std::string& arc1,
                    const std::string& arc2) {
    // Combined crossing list, D1's arcs prefixed "l." and D2's "r." to keep
    // them distinct before renumbering.
    std::vector<std::array<std::string, 4>> crossings;
    crossings.reserve(d1.crossing_count() + d2.crossing_count());
    for (const Crossing& c : d1.crossings()) {
        std::array<std::string, 4> a;
        for (int k = 0; k < 4; ++k) a[k] = "l." + d1.arc_name(c.slots[k]);
        crossings.push_back(a);
    }
    for (const Crossing& c : d2.crossings()) {
        std::array<std::string, 4> a;
        for (int k = 0; k < 4; ++k) a[k] = "r." + d2.arc_name(c.slots[k]);
        crossings.push_back(a);
    }
    int loops = d1.n_free_loops() + d2.n_free_loops();
    std::string label;
    if (!d1.label().empty() || !d2.label().empty())
        label = d1.label() + (mode == ComposeMode::disjoint ? " + " : " # ") +
                d2.label();

    if (mode == ComposeMode::connected_sum) {
        // A crossingless summand contributes via one of its free loops:
        // summing with an unknot changes nothing.
        const bool left_loop = d1.crossing_count() == 0;
        const bool right_loop = d2.crossing_count() == 0;
        if (left_loop || right_loop) {
            if ((left_loop && d1.n_free_loops() == 0) ||
                (right_loop && d2.n_free_loops() == 0))
                throw UnknownArc("connected sum with an empty diagram");
            loops -= 1;
        } else {
            if (!d1.has_arc(arc1))
                throw UnknownArc("no arc named '" + arc1 + "'");
            if (!d2.has_arc(arc2))
                throw UnknownArc("no arc named '" + arc2 + "'");
            // Cut both arcs and rejoin across the two diagrams.
            auto [p1, p2] = d1.arc_positions(d1.arc_id(arc1));
            auto [q1, q2] = d2.arc_positions(d2.arc_id(arc2));
            const int off = 4 * d1.crossing_count();
            // "b." cannot collide: every other name starts "l." or "r.".
            const std::string bridge = "b.bridge";
            crossings[p2 >> 2][p2 & 3] = bridge;
            crossings[(off + q1) >> 2][(off + q1) & 3] = bridge;
            crossings[(off + q2) >> 2][(off + q2) & 3] = "l." + arc1;
        }
    }
    return renumber(crossings, loops, std::move(label));
}

LinkDiagram braid_closure(const std::vector<int>& word, int strands,
                          std::string label,
                          std::vector<ClosureArc>* closure_arcs) {
    if (strands < 1) throw InvalidParameter("braid needs >= 1 strand");
    // Provisional arc ids with union-find for the closure identifications.
    std::vector<int> parent;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto fresh = [&] {
        parent.push_back(static_cast<int>(parent.size()));
        return static_cast<int>(parent.size()) - 1;
    };

    std::vector<int> init(strands), cur(strands);
    std::vector<char> touched(strands, 0);
    for (int s = 0; s < strands; ++s) init[s] = cur[s] = fresh();

    std::vector<std::array<int, 4>> cr;
    for (int letter : word) {
        int g = std::abs(letter);
        if (g < 1 || g >= strands)
            throw InvalidParameter("braid letter out of range");
        int p = g - 1, q = g;
        int L = cur[p], R = cur[q], Tl = fresh(), Tr = fresh();
        // Positive letter: the strand entering at bottom-left passes under,
        // exiting top-right; slots listed counterclockwise from it.
        if (letter > 0)
            cr.push_back({L, R, Tr, Tl});
        else
            cr.push_back({R, Tr, Tl, L});
        cur[p] = Tl;
        cur[q] = Tr;
        touched[p] = touched[q] = 1;
    }
    // Position of each provisional arc end, for closure directions.
    std::vector<int> id_pos(parent.size(), -1);
    for (size_t c = 0; c < cr.size(); ++c)
        for (int k = 0; k < 4; ++k)
            if (id_pos[cr[c][k]] < 0)
                id_pos[cr[c][k]] = static_cast<int>(4 * c) + k;
    int loops = 0;
    for (int s = 0; s < strands; ++s) {
        if (!touched[s]) {
            ++loops;
            continue;
        }
        int a = find(cur[s]), b = find(init[s]);
        if (a != b) parent[a] = b;
    }
    std::vector<std::array<std::string, 4>> crossings(cr.size());
    for (size_t c = 0; c < cr.size(); ++c)
        for (int k = 0; k < 4; ++k)
            crossings[c][k] = "p" + std::to_string(find(cr[c][k]));
    if (closure_arcs) {
        // Final names mirror renumber(): "1", "2", ... in first-appearance
        // order.
        std::unordered_map<std::string, std::string> names;
        int next = 1;
        for (auto& c : crossings)
            for (auto& nm : c)
                if (!names.count(nm)) names.emplace(nm, std::to_string(next++));
        closure_arcs->assign(strands, {"", 1});
        int loop_idx = 0;
        for (int s = 0; s < strands; ++s) {
            if (touched[s]) {
                // The closure runs from the strand's exit at the bottom of
                // the braid back to its entry at the top.
                int entry = id_pos[init[s]], exit = id_pos[cur[s]];
                (*closure_arcs)[s] = {
                    names.at("p" + std::to_string(find(cur[s]))),
                    exit < entry ? 1 : -1};
            } else {
                (*closure_arcs)[s] = {"loop" + std::to_string(loop_idx++), 1};
            }
        }
    }
    return renumber(crossings, loops, std::move(label));
}

LinkDiagram torus2(int n) {
    if (n == 0) throw InvalidParameter("torus2 requires n != 0");
    std::vector<int> word(std::abs(n), n > 0 ? 1 : -1);
    return braid_closure(word, 2, "torus2(" + std::to_string(n) + ")");
}

LinkDiagram hopf_chain(int m) {
    if (m < 1) throw InvalidParameter("hopf_chain requires m >= 1");
    std::vector<int> word;
    for (int t = 1; t <= m; ++t) {
        word.push_back(t);
        word.push_back(t);
    }
    return braid_closure(word, m + 1, "hopf_chain(" + std::to_string(m) + ")");
}

LinkDiagram resolve_crossing(const LinkDiagram& d, int v, int marker,
                             std::vector<std::string>* arc_map) {
    if (v < 0 || v >= d.crossing_count())
        throw InvalidParameter("crossing index out of range");
    // Union arcs joined by the two smoothing pairs at v.
    std::vector<int> parent(d.arc_count());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    const Crossing& c = d.crossing(v);
    for (int slot : {0, 1, 2, 3}) {
        int other = smoothing_partner_slot(slot, marker);
        if (other < slot) continue;
        int a = find(c.slots[slot]), b = find(c.slots[other]);
        if (a != b) parent[a] = b;
    }
    // Count arc-class occurrences outside v; classes fully inside v close up
    // into free loops.
    std::vector<int> remaining(d.arc_count(), 0);
    for (int pos = 0; pos < 4 * d.crossing_count(); ++pos)
        if ((pos >> 2) != v) ++remaining[find(d.arc_at(pos))];

    std::vector<std::array<std::string, 4>> crossings;
    std::vector<std::string> class_name(d.arc_count());
    for (int cc = 0; cc < d.crossing_count(); ++cc) {
        if (cc == v) continue;
        std::array<std::string, 4> a;
        for (int k = 0; k < 4; ++k) {
            int root = find(d.crossing(cc).slots[k]);
            if (class_name[root].empty())
                class_name[root] = "c" + std::to_string(root);
            a[k] = class_name[root];
        }
        crossings.push_back(a);
    }
    int loops = d.n_free_loops();
    for (ArcId a = 0; a < d.arc_count(); ++a) {
        if (find(a) != a) continue;
        if (remaining[a] == 0)
            ++loops;
        else if (remaining[a] != 2)
            throw MalformedInput("inconsistent smoothing");
    }
    if (arc_map) {
        arc_map->assign(d.arc_count(), "");
        // Renumbering below must match renumber(): first-appearance order.
        std::unordered_map<std::string, std::string> names;
        int next = 1;
        for (auto& cr : crossings)
            for (int k = 0; k < 4; ++k)
                if (!names.count(cr[k]))
                    names.emplace(cr[k], std::to_string(next++));
        for (ArcId a = 0; a < d.arc_count(); ++a) {
            int root = find(a);
            if (remaining[root] > 0) (*arc_map)[a] = names.at(class_name[root]);
        }
    }
    return renumber(crossings, loops, d.label());
}

std::vector<std::vector<int>> components(const LinkDiagram& d) {
    std::vector<std::vector<int>> comps;
    const int n4 = 4 * d.crossing_count();
    std::vector<char> visited(n4, 0);
    for (int start = 0; start < n4; ++start) {
        if (visited[start]) continue;
        std::vector<int> seq;
        int cur = start;
        do {
            seq.push_back(cur);
            int thr = cur ^ 2;  // through the crossing: 0<->2, 1<->3
            seq.push_back(thr);
            visited[cur] = visited[thr] = 1;
            cur = d.arc_partner(thr);
        } while (cur != start);
        comps.push_back(std::move(seq));
    }
    for (int i = 0; i < d.n_free_loops(); ++i) comps.emplace_back();
    return comps;
}

std::pair<int, int> signed_crossing_counts(const LinkDiagram& d,
                                           const Orientation& o) {
    auto comps = components(d);
    if (o.flip.size() != comps.size())
        throw InvalidParameter("orientation does not cover all components");
    // entry[c][0] = slot (0 or 2) where the under-strand enters crossing c;
    // entry[c][1] likewise for the over-strand (1 or 3).
    std::vector<std::array<int, 2>> entry(d.crossing_count(), {-1, -1});
    for (size_t ci = 0; ci < comps.size(); ++ci) {
        const auto& seq = comps[ci];
        bool flip = o.flip[ci] != 0;
        // seq alternates [enter, exit] position pairs per crossing.
        for (size_t t = 0; t < seq.size(); t += 2) {
            int enter = flip ? seq[t + 1] : seq[t];
            int slot = enter & 3;
            entry[enter >> 2][slot & 1] = slot;
        }
    }
    int n_plus = 0, n_minus = 0;
    for (int c = 0; c < d.crossing_count(); ++c) {
        int under_exit = entry[c][0] ^ 2, over_exit = entry[c][1] ^ 2;
        // Slot k sits at planar angle 90k degrees; a strand exiting at slot
        // k travels in direction 90k.  Positive crossing: the over-strand
        // direction is the under-strand direction rotated +90.
        if (((over_exit - under_exit) & 3) == 1)
            ++n_plus;
        else
            ++n_minus;
    }
    return {n_plus, n_minus};
}

int writhe(const LinkDiagram& d, const Orientation& o) {
    auto [p, m] = signed_crossing_counts(d, o);
    return p - m;
}

}  // namespace khoworks
