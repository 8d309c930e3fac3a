#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "khoworks/diagram.hpp"
#include "khoworks/homology_types.hpp"

namespace khoworks {

using Int = boost::multiprecision::cpp_int;

// Exact integer Laurent polynomial in one formal variable.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(Int c, int exp = 0) {
        if (c != 0) terms_[exp] = std::move(c);
    }
    static LaurentPoly monomial(Int c, int exp) { return LaurentPoly(std::move(c), exp); }

    const std::map<int, Int>& terms() const { return terms_; }
    bool zero() const { return terms_.empty(); }
    Int coeff(int exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? Int(0) : it->second;
    }
    int min_deg() const;  // throws on zero polynomial
    int max_deg() const;

    void add_term(int exp, const Int& c);
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

    LaurentPoly pow(int n) const;                  // n >= 0
    LaurentPoly shifted(int dexp) const;           // multiply by var^dexp
    LaurentPoly scale_exponents(int factor) const; // var -> var^factor
    // Divide exactly; throws NonExpandable if not divisible.
    LaurentPoly divide_exact(const LaurentPoly& divisor) const;

    // "c*A^e" term list, descending exponent, with the given variable name.
    std::string str(const std::string& var = "A") const;

private:
    std::map<int, Int> terms_;
};

// Exact integer Laurent polynomial in two formal variables.
class LaurentPoly2 {
public:
    LaurentPoly2() = default;

    const std::map<std::pair<int, int>, Int>& terms() const { return terms_; }
    bool zero() const { return terms_.empty(); }
    Int coeff(int e1, int e2) const {
        auto it = terms_.find({e1, e2});
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add_term(int e1, int e2, const Int& c);
    LaurentPoly2& operator+=(const LaurentPoly2& o);
    LaurentPoly2 operator+(const LaurentPoly2& o) const;
    LaurentPoly2 operator-(const LaurentPoly2& o) const;
    LaurentPoly2 operator*(const LaurentPoly2& o) const;
    bool operator==(const LaurentPoly2& o) const { return terms_ == o.terms_; }

    LaurentPoly2 pow(int n) const;
    static LaurentPoly2 monomial(Int c, int e1, int e2);

    std::string str(const std::string& v1 = "a",
                    const std::string& v2 = "b") const;

private:
    std::map<std::pair<int, int>, Int> terms_;
};

// Kauffman bracket state sums.  `unreduced` is [D] (with [empty] = 1);
// `normalized` is <D> = [D]/(-A^2-A^-2), absent for the empty link.
struct Bracket {
    LaurentPoly unreduced;
    std::optional<LaurentPoly> normalized;
};

Bracket kauffman_bracket(const LinkDiagram& d);

// Jones polynomial V(t) as a polynomial in u with u^2 = t (half-integer
// t-exponents occur for even-component links).
LaurentPoly jones(const LinkDiagram& d, const Orientation& o);

// Generating polynomial of the free part: sum of rank(FH_{i,j}) b^i a^j,
// with (e1, e2) = (a-exponent, b-exponent) = (j, i).
LaurentPoly2 kh_generating_polynomial(const BigradedHomology& h);
// Companion: counts cyclic torsion summands instead of free ranks.
LaurentPoly2 torsion_generating_polynomial(const BigradedHomology& h);

// Re-indexing to the oriented q/t convention for a diagram of writhe w:
// the free part of H_{i,j} sits at q^a t^b and the Z_2 part at Q^a t^b,
// with a = (3w - j)/2 and b = (w - i)/2.  Exponent pairs are (a, b).
struct QtTable {
    LaurentPoly2 free_part;     // q^a t^b with rank coefficients
    LaurentPoly2 torsion_part;  // Q^a t^b with torsion-summand counts
};

QtTable qt_convert(const BigradedHomology& h, int w);

}  // namespace khoworks
