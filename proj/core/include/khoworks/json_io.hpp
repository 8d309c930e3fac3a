#pragma once

#include <map>
#include <string>

#include "khoworks/analysis.hpp"
#include "khoworks/homology_types.hpp"
#include "khoworks/polynomial.hpp"

namespace khoworks {

// Schema: { "groups": [ {"i":…, "j":…, "free_rank":…, "torsion":[d1,…]}, …] }.
std::string to_json(const BigradedHomology& h);
BigradedHomology bigraded_from_json(const std::string& text);

// Same with an extra "k" field per group.
std::string to_json(const StratifiedHomology& h);
StratifiedHomology stratified_from_json(const std::string& text);

// { "terms": [[exp, coeff], …] }, ascending exponent.
std::string to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const std::string& text);

// KBSM element: array of { "m": …, "terms": [[exp, coeff], …] }.
std::string kbsm_to_json(const std::map<int, LaurentPoly>& e);
std::map<int, LaurentPoly> kbsm_from_json(const std::string& text);

// Analysis report: predictions, thickness triples, per-check pass/fail.
struct AnalysisReport {
    TorsionPrediction predictions;
    ThicknessReport thickness;
    struct Check {
        std::string name;
        bool applicable = false;
        bool passed = true;
        std::string detail;
    };
    std::vector<Check> checks;

    bool all_passed() const {
        for (const Check& c : checks)
            if (c.applicable && !c.passed) return false;
        return true;
    }
};

std::string to_json(const AnalysisReport& r);

}  // namespace khoworks
