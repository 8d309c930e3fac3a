#include "khoworks/homology.hpp"

#include <cstdlib>

#include "chain_engine.hpp"

namespace khoworks {

using detail::EngineConfig;
using detail::Gen;
using detail::PrecomputedStates;
using detail::Slice;
using detail::Variant;

int HomologyOptions::default_limit() {
    if (const char* env = std::getenv("KHOWORKS_LIMIT")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0 && v <= 31) return static_cast<int>(v);
        throw InvalidParameter("KHOWORKS_LIMIT must be an integer in [1,31]");
    }
    return 16;
}

namespace {

EngineConfig classical_config(const HomologyOptions& opt,
                              Variant variant = Variant::full,
                              ArcId basepoint = -1) {
    EngineConfig cfg;
    cfg.variant = variant;
    cfg.basepoint = basepoint;
    cfg.limit = opt.limit;
    cfg.jobs = opt.jobs;
    return cfg;
}

EnhancedState make_state(const LinkDiagram& d, const PrecomputedStates& pre,
                         const Gen& g) {
    EnhancedState s;
    const int n = d.crossing_count();
    s.markers.markers.resize(n);
    for (int v = 0; v < n; ++v)
        s.markers.markers[v] = ((g.mask >> v) & 1) ? int8_t{-1} : int8_t{1};
    const int circles = pre.circles[g.mask].count;
    s.circle_signs.resize(circles);
    for (int c = 0; c < circles; ++c)
        s.circle_signs[c] = ((g.signs >> c) & 1) ? int8_t{1} : int8_t{-1};
    auto gr = detail::grading_of(d, pre, g.mask, g.signs);
    s.i = gr.i;
    s.j = gr.j;
    return s;
}

BigradedHomology flatten(const StratifiedHomology& h) {
    BigradedHomology out;
    for (const auto& [ijk, g] : h.groups)
        out.set(std::get<0>(ijk), std::get<1>(ijk), g);
    return out;
}

ArcId resolve_basepoint(const LinkDiagram& d, const std::string& basepoint) {
    if (basepoint.empty() && d.crossing_count() == 0) {
        if (d.n_free_loops() == 0)
            throw UnknownArc("empty basepoint on a diagram with no free loop");
        return -2;  // first free loop
    }
    return d.arc_id(basepoint);  // throws UnknownArc
}

StratifiedHomology compute(const LinkDiagram& d, const EngineConfig& cfg) {
    return detail::compute_homology(d, cfg);
}

}  // namespace

std::map<std::pair<int, int>, std::vector<EnhancedState>> chain_groups(
    const LinkDiagram& d, const HomologyOptions& opt) {
    EngineConfig cfg = classical_config(opt);
    PrecomputedStates pre = detail::precompute_states(d, cfg);
    std::map<std::pair<int, int>, std::vector<EnhancedState>> out;
    for (const Slice& sl : detail::build_slices(d, pre, cfg))
        for (const auto& [i, gens] : sl.levels)
            for (const Gen& g : gens)
                out[{i, sl.j}].push_back(make_state(d, pre, g));
    return out;
}

IntegerMatrix differential(const LinkDiagram& d, int i, int j,
                           const HomologyOptions& opt) {
    EngineConfig cfg = classical_config(opt);
    PrecomputedStates pre = detail::precompute_states(d, cfg);
    std::vector<Gen> sources, targets;
    for (const Slice& sl : detail::build_slices(d, pre, cfg)) {
        if (sl.j != j) continue;
        auto it = sl.levels.find(i);
        if (it != sl.levels.end()) sources = it->second;
        it = sl.levels.find(i - 2);
        if (it != sl.levels.end()) targets = it->second;
    }
    IntegerMatrix out;
    out.m = Mat64(static_cast<int>(targets.size()),
                  static_cast<int>(sources.size()));
    for (const Gen& g : sources) out.col_basis.push_back(make_state(d, pre, g));
    for (const Gen& g : targets) out.row_basis.push_back(make_state(d, pre, g));
    std::map<std::pair<std::uint32_t, std::uint32_t>, int> index;
    for (int r = 0; r < static_cast<int>(targets.size()); ++r)
        index[{targets[r].mask, targets[r].signs}] = r;
    for (const auto& e : detail::differential_entries(d, pre, cfg, sources)) {
        auto it = index.find({e.dst.mask, e.dst.signs});
        if (it == index.end())
            throw Error("internal: differential image outside complex");
        out.m(it->second, e.src) += e.coeff;
    }
    return out;
}

SnfSummary smith_normal_form(const IntegerMatrix& m) {
    return smith_normal_form(m.m);
}

BigradedHomology khovanov(const LinkDiagram& d, const HomologyOptions& opt) {
    return flatten(compute(d, classical_config(opt)));
}

BigradedHomology reduced(const LinkDiagram& d, const std::string& basepoint,
                         const HomologyOptions& opt) {
    ArcId bp = resolve_basepoint(d, basepoint);
    return flatten(compute(d, classical_config(opt, Variant::reduced, bp)));
}

BigradedHomology coreduced(const LinkDiagram& d, const std::string& basepoint,
                           const HomologyOptions& opt) {
    ArcId bp = resolve_basepoint(d, basepoint);
    return flatten(compute(d, classical_config(opt, Variant::coreduced, bp)));
}

}  // namespace khoworks
