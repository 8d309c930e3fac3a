#include "khoworks/annulus.hpp"

#include <numeric>
#include <sstream>

#include "chain_engine.hpp"

namespace khoworks {

namespace {

// Resolve a W-line label to an arc or free-loop slot.
void apply_weight(AnnulusDiagram& ad, const std::string& label, long w) {
    if (ad.base.has_arc(label)) {
        ad.weights.arc[ad.base.arc_id(label)] += w;
        return;
    }
    if (label.rfind("loop", 0) == 0) {
        char* end = nullptr;
        long idx = std::strtol(label.c_str() + 4, &end, 10);
        if (end && *end == '\0' && idx >= 0 && idx < ad.base.n_free_loops()) {
            ad.weights.loop[idx] += w;
            return;
        }
    }
    throw UnknownArc("W line names unknown arc '" + label + "'");
}

}  // namespace

AnnulusDiagram AnnulusDiagram::parse(const std::string& text) {
    // Split off the W lines, feed the rest to the PD parser.
    std::istringstream in(text);
    std::string line, pd_text;
    std::vector<std::pair<std::string, long>> wlines;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        std::istringstream ls(line);
        std::string tok;
        if (ls >> tok && tok == "W") {
            std::string label;
            long w;
            if (!(ls >> label >> w))
                throw MalformedInput("bad W line: " + line);
            std::string extra;
            if (ls >> extra) throw MalformedInput("bad W line: " + line);
            wlines.push_back({label, w});
        } else {
            pd_text += line;
            pd_text += '\n';
        }
    }
    AnnulusDiagram ad;
    ad.base = LinkDiagram::parse(pd_text);
    ad.weights.arc.assign(ad.base.arc_count(), 0);
    ad.weights.loop.assign(ad.base.n_free_loops(), 0);
    for (auto& [label, w] : wlines) apply_weight(ad, label, w);
    return ad;
}

std::string AnnulusDiagram::serialize() const {
    std::string out = base.serialize();
    if (!out.empty() && out.back() != '\n') out += '\n';
    for (ArcId a = 0; a < base.arc_count(); ++a)
        if (a < static_cast<ArcId>(weights.arc.size()) && weights.arc[a] != 0)
            out += "W " + base.arc_name(a) + " " +
                   std::to_string(weights.arc[a]) + "\n";
    for (int l = 0; l < base.n_free_loops(); ++l)
        if (l < static_cast<int>(weights.loop.size()) && weights.loop[l] != 0)
            out += "W loop" + std::to_string(l) + " " +
                   std::to_string(weights.loop[l]) + "\n";
    return out;
}

StratifiedHomology stratified_homology(const AnnulusDiagram& ad,
                                       const HomologyOptions& opt) {
    detail::EngineConfig cfg;
    cfg.weights = &ad.weights;
    cfg.limit = opt.limit;
    cfg.jobs = opt.jobs;
    return detail::compute_homology(ad.base, cfg);
}

namespace {

// Expand a symmetric Laurent polynomial in a (with LaurentPoly-in-A
// coefficients) in the basis x^m, x = a + a^{-1}.
std::map<int, LaurentPoly> expand_in_x(std::map<int, LaurentPoly> p) {
    auto prune = [&] {
        for (auto it = p.begin(); it != p.end();)
            it = it->second.zero() ? p.erase(it) : std::next(it);
    };
    prune();
    std::map<int, LaurentPoly> out;
    while (!p.empty()) {
        int m = p.rbegin()->first;
        if (m < 0)
            throw NonExpandable("element not expandable in powers of a+a^-1");
        LaurentPoly c = p.rbegin()->second;
        out[m] += c;
        // subtract c * (a + a^-1)^m
        Int binom = 1;
        for (int t = 0; t <= m; ++t) {
            p[m - 2 * t] -= c * LaurentPoly(binom, 0);
            binom = binom * (m - t) / (t + 1);
        }
        prune();
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.zero() ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace

std::map<int, LaurentPoly> kbsm_coefficients(const AnnulusDiagram& ad,
                                             const HomologyOptions& opt) {
    detail::EngineConfig cfg;
    cfg.weights = &ad.weights;
    cfg.limit = opt.limit;
    cfg.jobs = 1;
    detail::PrecomputedStates pre = detail::precompute_states(ad.base, cfg);
    // chain Euler characteristics: chi_{j,k} = sum_i (-1)^{(j-i)/2} dim
    std::map<int, LaurentPoly> by_k;  // k -> polynomial in A (exponent j)
    for (const detail::Slice& sl : detail::build_slices(ad.base, pre, cfg))
        for (const auto& [i, gens] : sl.levels) {
            int tau2 = (sl.j - i) / 2;  // = tau(S)
            Int chi = (tau2 % 2 == 0 ? 1 : -1) *
                      Int(static_cast<long long>(gens.size()));
            by_k[sl.k].add_term(sl.j, chi);
        }
    return expand_in_x(std::move(by_k));
}

AnnulusDiagram torus_annulus(int r, int k) {
    if (k < 1) throw InvalidParameter("torus_annulus requires k >= 1");
    std::vector<int> word;
    for (int t = 0; t < std::abs(r); ++t)
        for (int g = 1; g < k; ++g) word.push_back(r > 0 ? g : -g);
    std::vector<ClosureArc> closure;
    AnnulusDiagram ad;
    ad.base = braid_closure(word, k,
                            "torus_annulus(" + std::to_string(r) + "," +
                                std::to_string(k) + ")",
                            &closure);
    ad.weights.arc.assign(ad.base.arc_count(), 0);
    ad.weights.loop.assign(ad.base.n_free_loops(), 0);
    for (const ClosureArc& c : closure) {
        if (c.name.rfind("loop", 0) == 0 && !ad.base.has_arc(c.name))
            ad.weights.loop[std::strtol(c.name.c_str() + 4, nullptr, 10)] +=
                c.direction;
        else
            ad.weights.arc[ad.base.arc_id(c.name)] += c.direction;
    }
    return ad;
}

std::map<int, LaurentPoly> kbsm_torus2_oracle(int r) {
    if (r == 0) throw InvalidParameter("kbsm_torus2_oracle requires r != 0");
    std::map<int, LaurentPoly> out;
    out[2] = LaurentPoly(Int(1), r);
    LaurentPoly c0(Int(-1), r);
    c0.add_term(-3 * r, (r % 2 == 0) ? Int(1) : Int(-1));
    out[0] = c0;
    return out;
}

std::map<int, LaurentPoly> kbsm_torus_oracle(int r, int k) {
    if (k < 1) throw InvalidParameter("kbsm_torus_oracle requires k >= 1");
    if (std::gcd(std::abs(r), k) != 1)
        throw InvalidParameter("closed form applies to torus knots only");
    // numerator as a polynomial in a with Laurent coefficients in A
    std::map<int, LaurentPoly> num;
    int shift = r * (k - 1);
    num[k + 1] += LaurentPoly(Int(1), shift);
    num[-k - 1] -= LaurentPoly(Int(1), shift);
    num[k - 1] -= LaurentPoly(Int(1), shift - 4 * r);
    num[1 - k] += LaurentPoly(Int(1), shift - 4 * r);
    // exact division by (a - a^-1)
    std::map<int, LaurentPoly> quot;
    auto prune = [&] {
        for (auto it = num.begin(); it != num.end();)
            it = it->second.zero() ? num.erase(it) : std::next(it);
    };
    prune();
    const int floor_exp = -2 * k - 4;
    while (!num.empty()) {
        int e = num.rbegin()->first;
        if (e < floor_exp) throw NonExpandable("inexact division by a-a^-1");
        LaurentPoly c = num.rbegin()->second;
        quot[e - 1] += c;
        num[e] -= c;
        num[e - 2] += c;
        prune();
    }
    return expand_in_x(std::move(quot));
}

}  // namespace khoworks
