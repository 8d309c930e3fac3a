#pragma once

#include <map>
#include <string>

#include "khoworks/diagram.hpp"
#include "khoworks/homology.hpp"
#include "khoworks/polynomial.hpp"

namespace khoworks {

// A link diagram in the annulus.  The annulus structure is recorded purely
// combinatorially: each arc carries the signed number of times it crosses a
// fixed radial cut (counted in the arc's first-occurrence -> second-occurrence
// direction), and each free loop its own winding.  Every state circle must
// wind -1, 0, or +1 times around the core.
struct AnnulusDiagram {
    LinkDiagram base;
    CutWeights weights;

    // File format: the PD text format plus lines `W label weight`, where
    // label is an arc name or `loop<k>` for the k-th free loop.
    static AnnulusDiagram parse(const std::string& text);
    std::string serialize() const;
};

StratifiedHomology stratified_homology(const AnnulusDiagram& ad,
                                       const HomologyOptions& opt = {});

// Kauffman bracket skein module element: coefficient of x^m (x = core
// curve), recovered from the per-(j,k) chain Euler characteristics.
std::map<int, LaurentPoly> kbsm_coefficients(const AnnulusDiagram& ad,
                                             const HomologyOptions& opt = {});

// The (r, k) torus diagram wrapping the annulus core: closure of
// (sigma_1 ... sigma_{k-1})^r on k strands, cut weights on closure arcs.
AnnulusDiagram torus_annulus(int r, int k);

// Closed-form KBSM element of the (r, 2) torus diagram:
// {2: A^r, 0: -A^r + (-1)^r A^{-3r}}.
std::map<int, LaurentPoly> kbsm_torus2_oracle(int r);

// Closed-form KBSM element of the (r, k) torus *knot* diagram:
// A^{r(k-1)} (a^{k+1} - a^{-k-1} - A^{-4r}(a^{k-1} - a^{1-k})) / (a - a^{-1}),
// expanded in the basis x^m with x = a + a^{-1}.
std::map<int, LaurentPoly> kbsm_torus_oracle(int r, int k);

}  // namespace khoworks
