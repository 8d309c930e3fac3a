#include "chain_engine.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <unordered_map>

#include "khoworks/snf.hpp"

namespace khoworks::detail {

namespace {

inline int popcount(std::uint32_t x) { return __builtin_popcount(x); }

KauffmanState state_from_mask(int n, std::uint32_t mask) {
    KauffmanState s;
    s.markers.resize(n);
    for (int v = 0; v < n; ++v)
        s.markers[v] = ((mask >> v) & 1) ? int8_t{-1} : int8_t{1};
    return s;
}

}  // namespace

void check_size(const LinkDiagram& d, const EngineConfig& cfg) {
    if (d.crossing_count() > cfg.limit)
        throw SizeLimit("diagram has " + std::to_string(d.crossing_count()) +
                        " crossings; limit is " + std::to_string(cfg.limit));
}

PrecomputedStates precompute_states(const LinkDiagram& d,
                                    const EngineConfig& cfg) {
    check_size(d, cfg);
    const int n = d.crossing_count();
    PrecomputedStates pre;
    pre.circles.resize(std::size_t{1} << n);
    const bool base = cfg.basepoint != -1;
    if (base) pre.base_circle.resize(std::size_t{1} << n);
    int base_pos = -1;
    if (cfg.basepoint >= 0) base_pos = d.arc_positions(cfg.basepoint).first;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        StateCircles sc = smooth(d, state_from_mask(n, mask), cfg.weights);
        for (long w : sc.winding)
            if (w < -1 || w > 1)
                throw MalformedInput(
                    "state circle with winding outside {-1,0,1}: bad cut "
                    "weights");
        if (base) {
            // basepoint == -2 selects the first free loop (crossingless
            // unknot component); otherwise the circle through the arc.
            pre.base_circle[mask] = cfg.basepoint == -2
                                        ? sc.count - d.n_free_loops()
                                        : sc.circle_of[base_pos];
        }
        pre.circles[mask] = std::move(sc);
    }
    return pre;
}

Grading3 grading_of(const LinkDiagram& d, const PrecomputedStates& pre,
                    std::uint32_t mask, std::uint32_t signs) {
    const int n = d.crossing_count();
    const StateCircles& sc = pre.circles[mask];
    int i = n - 2 * popcount(mask);
    int tau = 0, kappa = 0;
    for (int c = 0; c < sc.count; ++c) {
        int sgn = ((signs >> c) & 1) ? 1 : -1;
        if (sc.winding[c] == 0)
            tau += sgn;
        else
            kappa += sgn;
    }
    return {i, i + 2 * tau, kappa};
}

std::vector<Slice> build_slices(const LinkDiagram& d,
                                const PrecomputedStates& pre,
                                const EngineConfig& cfg) {
    const int n = d.crossing_count();
    std::map<std::pair<int, int>, Slice> slices;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        const StateCircles& sc = pre.circles[mask];
        for (std::uint32_t signs = 0; signs < (std::uint32_t{1} << sc.count);
             ++signs) {
            if (cfg.variant == Variant::reduced &&
                !((signs >> pre.base_circle[mask]) & 1))
                continue;
            if (cfg.variant == Variant::coreduced &&
                ((signs >> pre.base_circle[mask]) & 1))
                continue;
            Grading3 g = grading_of(d, pre, mask, signs);
            Slice& sl = slices[{g.j, g.k}];
            sl.j = g.j;
            sl.k = g.k;
            sl.levels[g.i].push_back({mask, signs});
        }
    }
    std::vector<Slice> out;
    out.reserve(slices.size());
    for (auto& [key, sl] : slices) out.push_back(std::move(sl));
    return out;
}

namespace {

// How resmoothing crossing v (marker + -> -) maps the circles of one state
// to the next.
struct Transition {
    bool merge;                 // true: two circles -> one; false: split
    int a, b;                   // touched source circles (b = -1 on split)
    int c, d;                   // touched target circles (d = -1 on merge)
    std::vector<int> perm;      // untouched: source circle -> target circle
};

Transition make_transition(const LinkDiagram& d, const PrecomputedStates& pre,
                           std::uint32_t mask, int v) {
    const StateCircles& s1 = pre.circles[mask];
    const StateCircles& s2 = pre.circles[mask | (std::uint32_t{1} << v)];
    Transition t;
    int t1[2] = {-1, -1}, n1 = 0;
    int t2[2] = {-1, -1}, n2 = 0;
    auto note = [](int (&t)[2], int& n, int c) {
        for (int q = 0; q < n; ++q)
            if (t[q] == c) return;
        if (n == 2) throw NotPlanar("resmoothing touches 3 circles");
        t[n++] = c;
    };
    for (int p = 4 * v; p < 4 * v + 4; ++p) {
        note(t1, n1, s1.circle_of[p]);
        note(t2, n2, s2.circle_of[p]);
    }
    if (n1 == 2 && n2 == 1) {
        t.merge = true;
        t.a = t1[0];
        t.b = t1[1];
        t.c = t2[0];
        t.d = -1;
    } else if (n1 == 1 && n2 == 2) {
        t.merge = false;
        t.a = t1[0];
        t.b = -1;
        t.c = t2[0];
        t.d = t2[1];
    } else {
        throw NotPlanar("resmoothing neither merges nor splits");
    }
    // Untouched circles keep their minimal position; free loops keep their
    // index from the end.
    const int loops = d.n_free_loops();
    t.perm.assign(s1.count, -1);
    for (int c = 0; c < s1.count - loops; ++c) {
        if (c == t1[0] || (n1 == 2 && c == t1[1])) continue;
        t.perm[c] = s2.circle_of[s1.circles[c].front()];
    }
    for (int l = 0; l < loops; ++l)
        t.perm[s1.count - loops + l] = s2.count - loops + l;
    return t;
}

}  // namespace

std::vector<Entry> differential_entries(const LinkDiagram& d,
                                        const PrecomputedStates& pre,
                                        const EngineConfig& cfg,
                                        const std::vector<Gen>& sources) {
    std::vector<Entry> out;
    const int n = d.crossing_count();
    std::unordered_map<std::uint64_t, Transition> cache;
    for (int si = 0; si < static_cast<int>(sources.size()); ++si) {
        const Gen g = sources[si];
        for (int v = 0; v < n; ++v) {
            if ((g.mask >> v) & 1) continue;  // needs a positive marker
            std::uint64_t key = (std::uint64_t{g.mask} << 6) | unsigned(v);
            auto it = cache.find(key);
            if (it == cache.end())
                it = cache.emplace(key, make_transition(d, pre, g.mask, v))
                         .first;
            const Transition& t = it->second;
            const StateCircles& s1 = pre.circles[g.mask];
            const std::uint32_t mask2 = g.mask | (std::uint32_t{1} << v);
            const StateCircles& s2 = pre.circles[mask2];
            // Base sign mask for untouched circles.
            std::uint32_t base = 0;
            for (int c = 0; c < s1.count; ++c)
                if (t.perm[c] >= 0 && ((g.signs >> c) & 1))
                    base |= std::uint32_t{1} << t.perm[c];
            int coeff = (popcount(g.mask >> (v + 1)) & 1) ? -1 : 1;
            // Candidate sign assignments on the touched target circles.
            std::uint32_t opts[2];
            int nopts = 0;
            if (t.merge) {
                bool sa = (g.signs >> t.a) & 1, sb = (g.signs >> t.b) & 1;
                bool ta = s1.winding[t.a] == 0, tb = s1.winding[t.b] == 0;
                std::uint32_t cbit = std::uint32_t{1} << t.c;
                if (ta && tb) {
                    if (sa && sb) {
                        // (+,+) has no image
                    } else if (sa || sb) {
                        opts[nopts++] = cbit;  // (+,-) -> +
                    } else {
                        opts[nopts++] = 0;  // (-,-) -> -
                    }
                } else if (ta != tb) {
                    // trivial circle must be negative; sign carried by the
                    // nontrivial one.
                    bool striv = ta ? sa : sb;
                    bool snon = ta ? sb : sa;
                    if (!striv) opts[nopts++] = snon ? cbit : 0;
                } else {
                    // two nontrivial merge to a trivial circle
                    if (sa != sb) opts[nopts++] = cbit;
                }
            } else {
                bool sa = (g.signs >> t.a) & 1;
                bool ta = s1.winding[t.a] == 0;
                bool tc = s2.winding[t.c] == 0, td = s2.winding[t.d] == 0;
                std::uint32_t cbit = std::uint32_t{1} << t.c;
                std::uint32_t dbit = std::uint32_t{1} << t.d;
                if (ta && tc && td) {
                    if (sa) {
                        opts[nopts++] = cbit | dbit;
                    } else {
                        opts[nopts++] = cbit;
                        opts[nopts++] = dbit;
                    }
                } else if (!ta) {
                    if (tc == td)
                        throw NotPlanar("nontrivial circle split parity");
                    std::uint32_t trivbit = tc ? cbit : dbit;
                    std::uint32_t nonbit = tc ? dbit : cbit;
                    opts[nopts++] = trivbit | (sa ? nonbit : 0);
                } else {
                    // trivial splits into two nontrivial circles
                    if (tc || td)
                        throw NotPlanar("trivial circle split parity");
                    if (!sa) {
                        opts[nopts++] = cbit;
                        opts[nopts++] = dbit;
                    }
                }
            }
            for (int o = 0; o < nopts; ++o) {
                Gen dst{mask2, base | opts[o]};
                if (cfg.variant == Variant::reduced &&
                    !((dst.signs >> pre.base_circle[mask2]) & 1))
                    continue;
                if (cfg.variant == Variant::coreduced &&
                    ((dst.signs >> pre.base_circle[mask2]) & 1))
                    continue;
                out.push_back({si, dst, coeff});
            }
        }
    }
    return out;
}

namespace {

std::uint64_t gen_key(const Gen& g) {
    return (std::uint64_t{g.mask} << 32) | g.signs;
}

void homology_of_slice(const LinkDiagram& d, const PrecomputedStates& pre,
                       const EngineConfig& cfg, const Slice& sl,
                       StratifiedHomology& out) {
    // Differential maps level i to level i-2 within the slice.
    struct LevelInfo {
        int dim = 0;
        int out_rank = 0;                    // rank of d_i
        std::vector<long long> in_factors;   // invariant factors of d_{i+2}
    };
    std::map<int, LevelInfo> info;
    for (const auto& [i, gens] : sl.levels)
        info[i].dim = static_cast<int>(gens.size());

    for (const auto& [i, gens] : sl.levels) {
        auto tgt = sl.levels.find(i - 2);
        std::vector<Entry> entries =
            differential_entries(d, pre, cfg, gens);
        if (tgt == sl.levels.end()) {
            if (!entries.empty())
                throw Error("internal: differential image outside complex");
            continue;
        }
        std::unordered_map<std::uint64_t, int> index;
        index.reserve(tgt->second.size() * 2);
        for (int r = 0; r < static_cast<int>(tgt->second.size()); ++r)
            index.emplace(gen_key(tgt->second[r]), r);
        Mat64 m(static_cast<int>(tgt->second.size()),
                static_cast<int>(gens.size()));
        for (const Entry& e : entries) {
            auto it = index.find(gen_key(e.dst));
            if (it == index.end())
                throw Error("internal: differential image outside complex");
            m(it->second, e.src) += e.coeff;
        }
        SnfSummary snf = smith_normal_form(m);
        info[i].out_rank = snf.rank;
        info[i - 2].in_factors = std::move(snf.invariant_factors);
    }

    for (const auto& [i, li] : info) {
        AbelianGroup g;
        int in_rank = static_cast<int>(li.in_factors.size());
        g.free_rank = li.dim - li.out_rank - in_rank;
        for (long long f : li.in_factors)
            if (f > 1) g.invariant_factors.push_back(f);
        if (g.free_rank < 0) throw Error("internal: negative free rank");
        out.set(i, sl.j, sl.k, std::move(g));
    }
}

}  // namespace

StratifiedHomology compute_homology(const LinkDiagram& d,
                                    const EngineConfig& cfg) {
    PrecomputedStates pre = precompute_states(d, cfg);
    std::vector<Slice> slices = build_slices(d, pre, cfg);

    StratifiedHomology result;
    if (cfg.jobs <= 1) {
        for (const Slice& sl : slices) homology_of_slice(d, pre, cfg, sl, result);
        return result;
    }
    std::vector<StratifiedHomology> partial(slices.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t idx = next.fetch_add(1);
            if (idx >= slices.size()) return;
            homology_of_slice(d, pre, cfg, slices[idx], partial[idx]);
        }
    };
    std::vector<std::thread> pool;
    int jobs = std::min<int>(cfg.jobs, static_cast<int>(slices.size()));
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (const auto& p : partial)
        for (const auto& [ijk, g] : p.groups)
            result.groups.emplace(ijk, g);
    return result;
}

}  // namespace khoworks::detail
