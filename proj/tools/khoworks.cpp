// khoworks: command-line front end for the homology engine.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <khoworks/analysis.hpp>
#include <khoworks/annulus.hpp>
#include <khoworks/diagram.hpp>
#include <khoworks/homology.hpp>
#include <khoworks/json_io.hpp>
#include <khoworks/polynomial.hpp>
#include <khoworks/state_graph.hpp>

using namespace khoworks;

namespace {

constexpr int exit_parse = 1;
constexpr int exit_limit = 2;
constexpr int exit_check_failed = 3;

struct RunConfig {
    std::string pd_file;
    std::string family;
    std::string format = "table";
    int limit = 0;  // 0 = library default (KHOWORKS_LIMIT or 16)
    int jobs = 1;
    std::string basepoint;
    bool basepoint_set = false;
    bool reduced = false;
    bool coreduced = false;
    bool qt = false;
    int writhe_arg = 0;
    bool writhe_set = false;
    bool oracle = false;
};

HomologyOptions options_of(const RunConfig& cfg) {
    HomologyOptions opt;
    if (cfg.limit > 0) opt.limit = cfg.limit;
    opt.jobs = cfg.jobs;
    return opt;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// --family NAME:ARGS with comma-separated integer arguments.
std::vector<int> family_args(const std::string& spec, std::string& name) {
    auto colon = spec.find(':');
    name = spec.substr(0, colon);
    std::vector<int> args;
    if (colon == std::string::npos) return args;
    std::istringstream in(spec.substr(colon + 1));
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            args.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw InvalidParameter("bad family argument: " + tok);
        }
    }
    return args;
}

LinkDiagram load_diagram(const RunConfig& cfg) {
    if (!cfg.pd_file.empty()) return LinkDiagram::parse(read_file(cfg.pd_file));
    std::string name;
    std::vector<int> args = family_args(cfg.family, name);
    if (name == "torus2" && args.size() == 1) return torus2(args[0]);
    if (name == "hopf_chain" && args.size() == 1) return hopf_chain(args[0]);
    throw InvalidParameter("unknown family: " + cfg.family);
}

AnnulusDiagram load_annulus(const RunConfig& cfg) {
    if (!cfg.pd_file.empty())
        return AnnulusDiagram::parse(read_file(cfg.pd_file));
    std::string name;
    std::vector<int> args = family_args(cfg.family, name);
    if (name == "torus_annulus" && args.size() == 2)
        return torus_annulus(args[0], args[1]);
    throw InvalidParameter("unknown annulus family: " + cfg.family);
}

std::string group_str(const AbelianGroup& g) {
    if (g.trivial()) return ".";
    std::string s;
    if (g.free_rank == 1)
        s = "Z";
    else if (g.free_rank > 1)
        s = "Z^" + std::to_string(g.free_rank);
    std::map<long long, int> counts;
    for (long long f : g.invariant_factors) ++counts[f];
    for (const auto& [f, n] : counts) {
        if (!s.empty()) s += "+";
        s += "Z_" + std::to_string(f);
        if (n > 1) s += "^" + std::to_string(n);
    }
    return s;
}

// Table 1.3 layout: j rows descending, i columns ascending.
void print_table(const std::map<std::pair<int, int>, AbelianGroup>& groups) {
    if (groups.empty()) {
        std::printf("(no nonzero groups)\n");
        return;
    }
    std::set<int> is, js;
    for (const auto& [ij, g] : groups) {
        is.insert(ij.first);
        js.insert(ij.second);
    }
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> head{"j\\i"};
    for (int i : is) head.push_back(std::to_string(i));
    cells.push_back(head);
    for (auto jt = js.rbegin(); jt != js.rend(); ++jt) {
        std::vector<std::string> row{std::to_string(*jt)};
        for (int i : is) {
            auto it = groups.find({i, *jt});
            row.push_back(it == groups.end() ? "." : group_str(it->second));
        }
        cells.push_back(row);
    }
    std::vector<size_t> width(cells[0].size(), 0);
    for (const auto& row : cells)
        for (size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    for (const auto& row : cells) {
        for (size_t c = 0; c < row.size(); ++c)
            std::printf("%*s ", static_cast<int>(width[c]), row[c].c_str());
        std::printf("\n");
    }
}

std::string torsion_csv(const AbelianGroup& g) {
    std::string t;
    for (long long f : g.invariant_factors) {
        if (!t.empty()) t += ";";
        t += std::to_string(f);
    }
    return t;
}

void emit_bigraded(const BigradedHomology& h, const std::string& format) {
    if (format == "json") {
        std::printf("%s\n", to_json(h).c_str());
    } else if (format == "csv") {
        std::printf("i,j,free_rank,torsion\n");
        for (const auto& [ij, g] : h.groups)
            std::printf("%d,%d,%d,%s\n", ij.first, ij.second, g.free_rank,
                        torsion_csv(g).c_str());
    } else {
        print_table(h.groups);
    }
}

void emit_stratified(const StratifiedHomology& h, const std::string& format) {
    if (format == "json") {
        std::printf("%s\n", to_json(h).c_str());
        return;
    }
    if (format == "csv") {
        std::printf("i,j,k,free_rank,torsion\n");
        for (const auto& [ijk, g] : h.groups)
            std::printf("%d,%d,%d,%d,%s\n", std::get<0>(ijk), std::get<1>(ijk),
                        std::get<2>(ijk), g.free_rank, torsion_csv(g).c_str());
        return;
    }
    std::set<int> ks;
    for (const auto& [ijk, g] : h.groups) ks.insert(std::get<2>(ijk));
    for (auto kt = ks.rbegin(); kt != ks.rend(); ++kt) {
        std::printf("k = %d\n", *kt);
        std::map<std::pair<int, int>, AbelianGroup> slice;
        for (const auto& [ijk, g] : h.groups)
            if (std::get<2>(ijk) == *kt)
                slice[{std::get<0>(ijk), std::get<1>(ijk)}] = g;
        print_table(slice);
    }
}

void emit_qt(const QtTable& t, const std::string& format) {
    if (format == "json") {
        auto dump2 = [](const LaurentPoly2& p) {
            std::string s = "[";
            bool first = true;
            for (const auto& [ee, c] : p.terms()) {
                if (!first) s += ",";
                first = false;
                s += "[" + std::to_string(ee.first) + "," +
                     std::to_string(ee.second) + "," + c.str() + "]";
            }
            return s + "]";
        };
        std::printf("{\"free_part\":%s,\"torsion_part\":%s}\n",
                    dump2(t.free_part).c_str(), dump2(t.torsion_part).c_str());
    } else {
        std::printf("free:    %s\n", t.free_part.str("q", "t").c_str());
        std::printf("torsion: %s\n", t.torsion_part.str("Q", "t").c_str());
    }
}

int cmd_homology(const RunConfig& cfg) {
    LinkDiagram d = load_diagram(cfg);
    HomologyOptions opt = options_of(cfg);
    BigradedHomology h;
    if (cfg.reduced)
        h = reduced(d, cfg.basepoint, opt);
    else if (cfg.coreduced)
        h = coreduced(d, cfg.basepoint, opt);
    else
        h = khovanov(d, opt);
    if (cfg.qt) {
        if (!cfg.writhe_set)
            throw InvalidParameter("--qt requires --writhe");
        emit_qt(qt_convert(h, cfg.writhe_arg), cfg.format);
    } else {
        emit_bigraded(h, cfg.format);
    }
    return 0;
}

int cmd_bracket(const RunConfig& cfg) {
    LinkDiagram d = load_diagram(cfg);
    if (d.crossing_count() > options_of(cfg).limit)
        throw SizeLimit("crossing count exceeds limit");
    Bracket b = kauffman_bracket(d);
    if (cfg.format == "json") {
        std::printf("%s\n",
                    to_json(b.normalized ? *b.normalized : b.unreduced).c_str());
    } else if (cfg.format == "csv") {
        const LaurentPoly& p = b.normalized ? *b.normalized : b.unreduced;
        std::printf("exp,coeff\n");
        for (const auto& [e, c] : p.terms())
            std::printf("%d,%s\n", e, c.str().c_str());
    } else {
        std::printf("[D] = %s\n", b.unreduced.str().c_str());
        if (b.normalized)
            std::printf("<D> = %s\n", b.normalized->str().c_str());
    }
    return 0;
}

AnalysisReport analyze(const LinkDiagram& d, const BigradedHomology& h) {
    AnalysisReport r;
    r.predictions = predict_torsion(d);
    r.thickness = thickness(h, d);

    AnalysisReport::Check sound{"torsion_prediction_soundness", true, true, ""};
    for (const auto& s : r.predictions.slots) {
        const AbelianGroup& g = h.at(s.i, s.j);
        bool has2 = false;
        for (long long f : g.invariant_factors)
            if (f % 2 == 0) has2 = true;
        if (!has2) {
            sound.passed = false;
            sound.detail += "missing Z_2 at (" + std::to_string(s.i) + "," +
                            std::to_string(s.j) + ") ";
        } else {
            sound.detail += "(" + std::to_string(s.i) + "," +
                            std::to_string(s.j) + ") confirmed ";
        }
    }
    if (r.predictions.slots.empty()) sound.detail = "no torsion predicted";
    r.checks.push_back(sound);

    bool alt = wu_alternating_advisory(d);
    ThicknessEnvelope env = thickness_bound(d, 0);
    AnalysisReport::Check thick{"alternating_thickness_envelope", alt, true, ""};
    if (alt) {
        thick.passed = !r.thickness.full.empty
                           ? (r.thickness.full.k1x2 <= env.k1x2 &&
                              r.thickness.full.k2x2 <= env.k2x2 &&
                              (r.thickness.torsion.empty ||
                               (r.thickness.torsion.k1x2 <= env.torsion_k1x2 &&
                                r.thickness.torsion.k2x2 <= env.torsion_k2x2)))
                           : true;
        thick.detail = "envelope (0,0), torsion (0,-1)";
    } else {
        thick.detail = "diagram not detected as alternating";
    }
    r.checks.push_back(thick);

    AnalysisReport::Check sig{"alternating_degree_identities", alt, true, ""};
    if (alt && d.connected()) {
        Orientation o{std::vector<uint8_t>(components(d).size(), 0)};
        try {
            int s = alternating_signature(d, o);
            sig.passed = murasugi_degree_check(d, o);
            sig.detail = "signature " + std::to_string(s);
        } catch (const FormulaMismatch& e) {
            sig.passed = false;
            sig.detail = e.what();
        }
    } else {
        sig.applicable = false;
    }
    r.checks.push_back(sig);
    return r;
}

int cmd_analyze(const RunConfig& cfg) {
    LinkDiagram d = load_diagram(cfg);
    BigradedHomology h = khovanov(d, options_of(cfg));
    AnalysisReport r = analyze(d, h);
    if (cfg.format == "json") {
        std::printf("%s\n", to_json(r).c_str());
    } else {
        for (const auto& s : r.predictions.slots)
            std::printf("prediction (%d,%d) [%s]: %s\n", s.i, s.j,
                        to_string(s.reason),
                        h.at(s.i, s.j).invariant_factors.empty() ? "MISSING"
                                                                 : "CONFIRMED");
        if (r.predictions.slots.empty())
            std::printf("no torsion predicted\n");
        auto half = [](int x2) {
            return x2 % 2 == 0 ? std::to_string(x2 / 2)
                               : std::to_string(x2) + "/2";
        };
        if (!r.thickness.full.empty)
            std::printf("thickness full (%s,%s) torsion %s\n",
                        half(r.thickness.full.k1x2).c_str(),
                        half(r.thickness.full.k2x2).c_str(),
                        r.thickness.torsion.empty
                            ? "(none)"
                            : ("(" + half(r.thickness.torsion.k1x2) + "," +
                               half(r.thickness.torsion.k2x2) + ")")
                                  .c_str());
        for (const auto& c : r.checks)
            std::printf("%s: %s%s%s\n", c.name.c_str(),
                        !c.applicable ? "n/a"
                        : c.passed    ? "PASS"
                                      : "FAIL",
                        c.detail.empty() ? "" : " - ", c.detail.c_str());
    }
    return r.all_passed() ? 0 : exit_check_failed;
}

int cmd_annulus(const RunConfig& cfg) {
    AnnulusDiagram ad = load_annulus(cfg);
    HomologyOptions opt = options_of(cfg);
    StratifiedHomology h = stratified_homology(ad, opt);
    std::map<int, LaurentPoly> kbsm = kbsm_coefficients(ad, opt);
    if (cfg.format == "json") {
        std::printf("{\"homology\":%s,\"kbsm\":%s}\n", to_json(h).c_str(),
                    kbsm_to_json(kbsm).c_str());
    } else {
        emit_stratified(h, cfg.format);
        for (const auto& [m, p] : kbsm)
            std::printf("x^%d: %s\n", m, p.str().c_str());
    }
    if (cfg.oracle) {
        std::string name;
        std::vector<int> args = family_args(cfg.family, name);
        if (name != "torus_annulus")
            throw InvalidParameter("--oracle needs --family torus_annulus:r,k");
        std::map<int, LaurentPoly> expect =
            args[1] == 2 ? kbsm_torus2_oracle(args[0])
                         : kbsm_torus_oracle(args[0], args[1]);
        bool ok = kbsm == expect;
        std::printf("oracle: %s\n", ok ? "PASS" : "FAIL");
        if (!ok) return exit_check_failed;
    }
    return 0;
}

int cmd_selftest(const RunConfig& cfg) {
    int failures = 0;
    auto check = [&](const char* name, bool ok) {
        std::printf("%-40s %s\n", name, ok ? "PASS" : "FAIL");
        if (!ok) ++failures;
    };
    HomologyOptions opt = options_of(cfg);

    BigradedHomology t = khovanov(torus2(-3), opt);
    BigradedHomology want;
    want.set(3, 9, {1, {}});
    want.set(1, 5, {0, {2}});
    want.set(1, 1, {1, {}});
    want.set(-3, -3, {1, {}});
    want.set(-3, -7, {1, {}});
    check("left trefoil homology", t == want);

    Bracket b = kauffman_bracket(torus2(-3));
    LaurentPoly tb;
    tb.add_term(7, Int(1));
    tb.add_term(3, Int(-1));
    tb.add_term(-5, Int(-1));
    check("left trefoil bracket", b.normalized && *b.normalized == tb);

    BigradedHomology r = reduced(torus2(-3), "1", opt);
    BigradedHomology rw;
    rw.set(3, 9, {1, {}});
    rw.set(1, 5, {1, {}});
    rw.set(-3, -3, {1, {}});
    check("reduced trefoil", r == rw);

    LaurentPoly2 gen = kh_generating_polynomial(khovanov(hopf_chain(1), opt));
    LaurentPoly2 gw;
    for (auto [a1, b1] : {std::pair{2, 0}, {-2, 0}})
        for (auto [a2, b2] : {std::pair{4, 2}, {-4, -2}})
            gw += LaurentPoly2::monomial(1, a1 + a2, b1 + b2);
    check("hopf chain generating polynomial", gen == gw);

    StratifiedHomology s = stratified_homology(torus_annulus(1, 2), opt);
    StratifiedHomology sw;
    sw.set(1, 1, 2, {1, {}});
    sw.set(1, 1, 0, {1, {}});
    sw.set(1, 1, -2, {1, {}});
    sw.set(-1, -3, 0, {1, {}});
    check("annulus one-crossing diagram", s == sw);

    check("kbsm oracle r=-3",
          kbsm_coefficients(torus_annulus(-3, 2), opt) == kbsm_torus2_oracle(-3));

    BigradedHomology rt = bigraded_from_json(to_json(t));
    check("json round-trip", rt == t);

    return failures == 0 ? 0 : exit_check_failed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Khovanov homology workbench"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub) {
        auto* pd = sub->add_option("--pd", cfg.pd_file, "PD code file");
        auto* fam = sub->add_option("--family", cfg.family,
                                    "builtin family NAME:ARGS");
        pd->excludes(fam);
        sub->add_option("--format", cfg.format, "table|json|csv")
            ->check(CLI::IsMember({"table", "json", "csv"}));
        sub->add_option("--limit", cfg.limit, "crossing-count budget")
            ->check(CLI::PositiveNumber);
        sub->add_option("--jobs", cfg.jobs, "parallel slice workers")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* hom = app.add_subcommand("homology", "bigraded homology");
    add_common(hom);
    hom->add_option("--basepoint", cfg.basepoint, "arc label for reduced");
    hom->add_flag("--reduced", cfg.reduced, "reduced homology");
    hom->add_flag("--coreduced", cfg.coreduced, "co-reduced homology");
    hom->add_flag("--qt", cfg.qt, "emit oriented q/t re-indexing");
    hom->add_option("--writhe", cfg.writhe_arg, "writhe for --qt")
        ->each([&](const std::string&) { cfg.writhe_set = true; });

    CLI::App* br = app.add_subcommand("bracket", "Kauffman bracket");
    add_common(br);

    CLI::App* an = app.add_subcommand("analyze", "theorem checks");
    add_common(an);

    CLI::App* ann = app.add_subcommand("annulus", "annular homology and KBSM");
    add_common(ann);
    ann->add_flag("--oracle", cfg.oracle, "compare KBSM to closed form");

    CLI::App* st = app.add_subcommand("selftest", "built-in golden checks");
    add_common(st);

    CLI11_PARSE(app, argc, argv);

    try {
        if (hom->parsed()) return cmd_homology(cfg);
        if (br->parsed()) return cmd_bracket(cfg);
        if (an->parsed()) return cmd_analyze(cfg);
        if (ann->parsed()) return cmd_annulus(cfg);
        if (st->parsed()) return cmd_selftest(cfg);
    } catch (const SizeLimit& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_limit;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_parse;
    }
    return 0;
}
