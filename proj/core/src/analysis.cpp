#include "khoworks/analysis.hpp"

#include <algorithm>

#include "khoworks/polynomial.hpp"
#include "khoworks/state_graph.hpp"

namespace khoworks {

const char* to_string(TorsionPrediction::Reason r) {
    switch (r) {
        case TorsionPrediction::Reason::odd_cycle_plus:
            return "odd_cycle_plus";
        case TorsionPrediction::Reason::odd_cycle_minus:
            return "odd_cycle_minus";
        case TorsionPrediction::Reason::even_cycle_plus:
            return "even_cycle_plus";
        case TorsionPrediction::Reason::even_cycle_minus:
            return "even_cycle_minus";
    }
    return "?";
}

TorsionPrediction predict_torsion(const LinkDiagram& d) {
    TorsionPrediction out;
    const int n = d.crossing_count();
    if (n == 0) return out;
    auto [sp, sm] = special_states(d);
    const int splus = smooth(d, sp).count;
    const int sminus = smooth(d, sm).count;
    Adequacy adq = adequacy(d);
    const bool conn = d.connected();
    using R = TorsionPrediction::Reason;
    if (adq.plus) {
        CycleAnalysis ca = cycle_analysis(build_state_graph(d, sp));
        if (ca.has_odd_cycle)
            out.slots.push_back({n - 2, n + 2 * splus - 4, R::odd_cycle_plus});
        else if (conn && ca.even_cycle_with_singular_edge)
            out.slots.push_back({n - 4, n + 2 * splus - 8, R::even_cycle_plus});
    }
    if (adq.minus) {
        CycleAnalysis ca = cycle_analysis(build_state_graph(d, sm));
        if (ca.has_odd_cycle)
            out.slots.push_back(
                {-n, -n - 2 * sminus + 4, R::odd_cycle_minus});
        else if (conn && ca.even_cycle_with_singular_edge)
            out.slots.push_back(
                {-n + 2, -n - 2 * sminus + 8, R::even_cycle_minus});
    }
    return out;
}

namespace {

ThicknessTriple triple_for(const std::vector<std::pair<int, int>>& support,
                           int n, int splus, int sminus) {
    ThicknessTriple t;
    if (support.empty()) return t;
    t.empty = false;
    int lo = support.front().second - 2 * support.front().first;
    int hi = lo;
    for (auto [i, j] : support) {
        lo = std::min(lo, j - 2 * i);
        hi = std::max(hi, j - 2 * i);
    }
    // minimal k1, k2 on the doubled scale: 2*(excess/4) = excess/2
    t.k1x2 = (hi - (2 * splus - n)) / 2;
    t.k2x2 = ((n - 2 * sminus) - lo) / 2;
    t.kx2 = t.k1x2 + t.k2x2 + (splus + sminus - n);
    return t;
}

}  // namespace

ThicknessReport thickness(const BigradedHomology& h, const LinkDiagram& d) {
    ThicknessReport r;
    r.n = d.crossing_count();
    auto [sp, sm] = special_states(d);
    r.s_plus = smooth(d, sp).count;
    r.s_minus = smooth(d, sm).count;
    std::vector<std::pair<int, int>> full, fr, tor;
    for (const auto& [ij, g] : h.groups) {
        full.push_back(ij);
        if (g.free_rank > 0) fr.push_back(ij);
        if (!g.invariant_factors.empty()) tor.push_back(ij);
    }
    r.full = triple_for(full, r.n, r.s_plus, r.s_minus);
    r.free_part = triple_for(fr, r.n, r.s_plus, r.s_minus);
    r.torsion = triple_for(tor, r.n, r.s_plus, r.s_minus);
    return r;
}

ThicknessEnvelope thickness_bound(const LinkDiagram&, int k) {
    ThicknessEnvelope e;
    e.k1x2 = e.k2x2 = 2 * k;
    e.torsion_k1x2 = 2 * k;
    e.torsion_k2x2 = 2 * k - 2;
    return e;
}

int alternating_signature(const LinkDiagram& d, const Orientation& o) {
    auto [np, nm] = signed_crossing_counts(d, o);
    auto [sp, sm] = special_states(d);
    int splus = smooth(d, sp).count;
    int sminus = smooth(d, sm).count;
    int sig = nm - sminus + 1;
    int sig2 = -np + splus - 1;
    if (sig != sig2)
        throw FormulaMismatch(
            "Traczyk signature expressions disagree (" + std::to_string(sig) +
            " vs " + std::to_string(sig2) + "); input not alternating?");
    return sig;
}

bool murasugi_degree_check(const LinkDiagram& d, const Orientation& o) {
    const int n = d.crossing_count();
    auto [sp, sm] = special_states(d);
    int splus = smooth(d, sp).count;
    int sminus = smooth(d, sm).count;
    Bracket br = kauffman_bracket(d);
    if (br.unreduced.max_deg() != n + 2 * splus) return false;
    if (br.unreduced.min_deg() != -n - 2 * sminus) return false;
    if (!br.normalized) return false;
    if (br.normalized->max_deg() != n + 2 * splus - 2) return false;
    if (br.normalized->min_deg() != -n - 2 * sminus + 2) return false;
    auto [np, nm] = signed_crossing_counts(d, o);
    int sig;
    try {
        sig = alternating_signature(d, o);
    } catch (const FormulaMismatch&) {
        return false;
    }
    // V lives in u with u^2 = t, so t-degrees are doubled.
    LaurentPoly v = jones(d, o);
    if (v.max_deg() != 2 * np - sig) return false;
    if (v.min_deg() != -2 * nm - sig) return false;
    return true;
}

bool wu_alternating_advisory(const LinkDiagram& d) {
    if (!d.connected()) return false;
    auto [sp, sm] = special_states(d);
    return smooth(d, sp).count + smooth(d, sm).count ==
           d.crossing_count() + 2;
}

}  // namespace khoworks
