#include "khoworks/json_io.hpp"

#include <json.hpp>

namespace khoworks {

using nlohmann::json;

namespace {

json group_json(int i, int j, const AbelianGroup& g) {
    json o;
    o["i"] = i;
    o["j"] = j;
    o["free_rank"] = g.free_rank;
    o["torsion"] = g.invariant_factors;
    return o;
}

AbelianGroup group_from(const json& o) {
    AbelianGroup g;
    g.free_rank = o.at("free_rank").get<int>();
    g.invariant_factors = o.at("torsion").get<std::vector<long long>>();
    return g;
}

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw MalformedInput("invalid JSON");
    return j;
}

// Run a schema-shaped extraction, converting nlohmann's exceptions into ours.
template <class F>
auto shaped(F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw MalformedInput(std::string("JSON does not match the schema: ") +
                             e.what());
    }
}

// Polynomial coefficients pass through int64; anything bigger has no place
// in the documented formats.
long long small(const Int& c) {
    if (c > std::numeric_limits<long long>::max() ||
        c < std::numeric_limits<long long>::min())
        throw Overflow("polynomial coefficient exceeds 64 bits");
    return c.convert_to<long long>();
}

json poly_terms(const LaurentPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({e, small(c)});
    return terms;
}

LaurentPoly poly_from_terms(const json& terms) {
    LaurentPoly p;
    for (const auto& t : terms)
        p.add_term(t.at(0).get<int>(), Int(t.at(1).get<long long>()));
    return p;
}

}  // namespace

std::string to_json(const BigradedHomology& h) {
    json groups = json::array();
    for (const auto& [ij, g] : h.groups)
        groups.push_back(group_json(ij.first, ij.second, g));
    return json{{"groups", groups}}.dump();
}

BigradedHomology bigraded_from_json(const std::string& text) {
    BigradedHomology h;
    const json doc = parse_text(text);
    shaped([&] {
        for (const auto& o : doc.at("groups"))
            h.set(o.at("i").get<int>(), o.at("j").get<int>(), group_from(o));
        return 0;
    });
    return h;
}

std::string to_json(const StratifiedHomology& h) {
    json groups = json::array();
    for (const auto& [ijk, g] : h.groups) {
        json o = group_json(std::get<0>(ijk), std::get<1>(ijk), g);
        o["k"] = std::get<2>(ijk);
        groups.push_back(o);
    }
    return json{{"groups", groups}}.dump();
}

StratifiedHomology stratified_from_json(const std::string& text) {
    StratifiedHomology h;
    const json doc = parse_text(text);
    shaped([&] {
        for (const auto& o : doc.at("groups"))
            h.set(o.at("i").get<int>(), o.at("j").get<int>(),
                  o.at("k").get<int>(), group_from(o));
        return 0;
    });
    return h;
}

std::string to_json(const LaurentPoly& p) {
    return json{{"terms", poly_terms(p)}}.dump();
}

LaurentPoly poly_from_json(const std::string& text) {
    const json doc = parse_text(text);
    return shaped([&] { return poly_from_terms(doc.at("terms")); });
}

std::string kbsm_to_json(const std::map<int, LaurentPoly>& e) {
    json arr = json::array();
    for (const auto& [m, p] : e)
        arr.push_back({{"m", m}, {"terms", poly_terms(p)}});
    return arr.dump();
}

std::map<int, LaurentPoly> kbsm_from_json(const std::string& text) {
    std::map<int, LaurentPoly> e;
    const json doc = parse_text(text);
    shaped([&] {
        for (const auto& o : doc)
            e[o.at("m").get<int>()] = poly_from_terms(o.at("terms"));
        return 0;
    });
    return e;
}

std::string to_json(const AnalysisReport& r) {
    json preds = json::array();
    for (const auto& s : r.predictions.slots)
        preds.push_back({{"i", s.i}, {"j", s.j}, {"reason", to_string(s.reason)}});
    auto triple = [](const ThicknessTriple& t) {
        return json{{"empty", t.empty},
                    {"k1x2", t.k1x2},
                    {"k2x2", t.k2x2},
                    {"kx2", t.kx2}};
    };
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name},
                          {"applicable", c.applicable},
                          {"passed", c.passed},
                          {"detail", c.detail}});
    return json{{"predictions", preds},
                {"thickness",
                 {{"full", triple(r.thickness.full)},
                  {"free", triple(r.thickness.free_part)},
                  {"torsion", triple(r.thickness.torsion)},
                  {"n", r.thickness.n},
                  {"s_plus", r.thickness.s_plus},
                  {"s_minus", r.thickness.s_minus}}},
                {"checks", checks}}
        .dump();
}

}  // namespace khoworks
