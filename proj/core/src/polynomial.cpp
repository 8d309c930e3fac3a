#include "khoworks/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>

namespace khoworks {

int LaurentPoly::min_deg() const {
    if (terms_.empty()) throw InvalidParameter("degree of zero polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::max_deg() const {
    if (terms_.empty()) throw InvalidParameter("degree of zero polynomial");
    return terms_.rbegin()->first;
}

void LaurentPoly::add_term(int exp, const Int& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(exp, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::pow(int n) const {
    if (n < 0) throw InvalidParameter("negative power");
    LaurentPoly r(Int(1));
    for (int k = 0; k < n; ++k) r = r * *this;
    return r;
}

LaurentPoly LaurentPoly::shifted(int dexp) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e + dexp] = c;
    return r;
}

LaurentPoly LaurentPoly::scale_exponents(int factor) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.add_term(e * factor, c);
    return r;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
    if (divisor.zero()) throw InvalidParameter("division by zero polynomial");
    LaurentPoly rem = *this, quot;
    const int dtop = divisor.max_deg();
    const Int& dlead = divisor.terms().rbegin()->second;
    while (!rem.zero()) {
        int rtop = rem.max_deg();
        Int lead = rem.coeff(rtop);
        if (lead % dlead != 0)
            throw NonExpandable("inexact polynomial division");
        Int q = lead / dlead;
        quot.add_term(rtop - dtop, q);
        rem -= divisor * LaurentPoly(q, rtop - dtop);
        if (!rem.zero() && rem.max_deg() >= rtop)
            throw NonExpandable("inexact polynomial division");
    }
    return quot;
}

std::string LaurentPoly::str(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Int c = it->second;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first)
            out << (neg ? "-" : "");
        else
            out << (neg ? " - " : " + ");
        first = false;
        if (c != 1 || it->first == 0) out << c.str();
        if (it->first != 0) {
            if (c != 1) out << "*";
            out << var;
            if (it->first != 1) out << "^" << it->first;
        }
    }
    return out.str();
}

void LaurentPoly2::add_term(int e1, int e2, const Int& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(std::make_pair(e1, e2), c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
    return *this;
}

LaurentPoly2 LaurentPoly2::operator+(const LaurentPoly2& o) const {
    LaurentPoly2 r = *this;
    r += o;
    return r;
}

LaurentPoly2 LaurentPoly2::operator-(const LaurentPoly2& o) const {
    LaurentPoly2 r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e.first, e.second, -c);
    return r;
}

LaurentPoly2 LaurentPoly2::operator*(const LaurentPoly2& o) const {
    LaurentPoly2 r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            r.add_term(e1.first + e2.first, e1.second + e2.second, c1 * c2);
    return r;
}

LaurentPoly2 LaurentPoly2::pow(int n) const {
    if (n < 0) throw InvalidParameter("negative power");
    LaurentPoly2 r = monomial(1, 0, 0);
    for (int k = 0; k < n; ++k) r = r * *this;
    return r;
}

LaurentPoly2 LaurentPoly2::monomial(Int c, int e1, int e2) {
    LaurentPoly2 r;
    r.add_term(e1, e2, c);
    return r;
}

std::string LaurentPoly2::str(const std::string& v1,
                              const std::string& v2) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, coeff] : terms_) {
        Int c = coeff;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first)
            out << (neg ? "-" : "");
        else
            out << (neg ? " - " : " + ");
        first = false;
        bool wrote = false;
        if (c != 1 || (e.first == 0 && e.second == 0)) {
            out << c.str();
            wrote = true;
        }
        for (auto [var, exp] : {std::pair(v1, e.first), std::pair(v2, e.second)}) {
            if (exp == 0) continue;
            if (wrote) out << "*";
            out << var;
            if (exp != 1) out << "^" << exp;
            wrote = true;
        }
    }
    return out.str();
}

Bracket kauffman_bracket(const LinkDiagram& d) {
    const int n = d.crossing_count();
    const int arcs = d.arc_count();
    // Count states per (number of negative markers, circle count).
    // counts[p][c]: states with p negative markers and c circles.
    std::vector<std::map<int, unsigned long long>> counts(n + 1);
    std::vector<int> parent(arcs);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::iota(parent.begin(), parent.end(), 0);
        int merges = 0;
        for (int c = 0; c < n; ++c) {
            const Crossing& cr = d.crossing(c);
            bool neg = (mask >> c) & 1;
            // positive marker joins slots (0,3),(1,2); negative (0,1),(2,3)
            int pairs[2][2] = {{0, neg ? 1 : 3}, {neg ? 2 : 1, neg ? 3 : 2}};
            for (auto& pr : pairs) {
                int a = find(cr.slots[pr[0]]), b = find(cr.slots[pr[1]]);
                if (a != b) {
                    parent[a] = b;
                    ++merges;
                }
            }
        }
        int circles = arcs - merges + d.n_free_loops();
        ++counts[static_cast<int>(__builtin_popcountll(mask))][circles];
    }
    LaurentPoly delta;
    delta.add_term(2, -1);
    delta.add_term(-2, -1);
    int max_circles = 0;
    for (const auto& m : counts)
        for (const auto& [c, cnt] : m) max_circles = std::max(max_circles, c);
    std::vector<LaurentPoly> dpow(max_circles + 1);
    dpow[0] = LaurentPoly(Int(1));
    for (int k = 1; k <= max_circles; ++k) dpow[k] = dpow[k - 1] * delta;
    auto delta_pow = [&](int k) -> const LaurentPoly& { return dpow[k]; };
    Bracket out;
    LaurentPoly unreduced, normalized;
    bool any_circle = false;
    for (int p = 0; p <= n; ++p) {
        for (const auto& [c, cnt] : counts[p]) {
            LaurentPoly weight(Int(cnt), n - 2 * p);  // A^{sigma}
            unreduced += weight * delta_pow(c);
            if (c >= 1) {
                any_circle = true;
                normalized += weight * delta_pow(c - 1);
            }
        }
    }
    out.unreduced = unreduced;
    if (any_circle) out.normalized = normalized;
    return out;
}

LaurentPoly jones(const LinkDiagram& d, const Orientation& o) {
    Bracket br = kauffman_bracket(d);
    if (!br.normalized)
        throw EmptyDiagram("Jones polynomial of the empty link");
    int w = writhe(d, o);
    LaurentPoly p = br.normalized->shifted(-3 * w);
    // t = A^-4, u^2 = t: A^e -> u^{-e/2}.
    LaurentPoly r;
    for (const auto& [e, c] : p.terms()) {
        if (e % 2 != 0) throw ParityError("odd bracket exponent");
        r.add_term(-e / 2, c);
    }
    return r;
}

LaurentPoly2 kh_generating_polynomial(const BigradedHomology& h) {
    LaurentPoly2 r;
    for (const auto& [ij, g] : h.groups)
        r.add_term(ij.second, ij.first, g.free_rank);  // (a=j, b=i)
    return r;
}

LaurentPoly2 torsion_generating_polynomial(const BigradedHomology& h) {
    LaurentPoly2 r;
    for (const auto& [ij, g] : h.groups)
        r.add_term(ij.second, ij.first,
                   static_cast<int>(g.invariant_factors.size()));
    return r;
}

QtTable qt_convert(const BigradedHomology& h, int w) {
    QtTable t;
    for (const auto& [ij, g] : h.groups) {
        auto [i, j] = ij;
        if ((3 * w - j) % 2 != 0 || (w - i) % 2 != 0)
            throw ParityError("gradings incompatible with writhe parity");
        int a = (3 * w - j) / 2, b = (w - i) / 2;
        if (g.free_rank) t.free_part.add_term(a, b, g.free_rank);
        if (!g.invariant_factors.empty())
            t.torsion_part.add_term(
                a, b, static_cast<int>(g.invariant_factors.size()));
    }
    return t;
}

}  // namespace khoworks
