#pragma once

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gctqft/barcohomology.hpp"
#include "gctqft/json_io.hpp"

namespace gctqft {
namespace cli {

using io::json;

struct RunResult {
    int exit_code = 0;
    json report;
};

namespace detail {

inline Int max_enum_from_env()
{
    const char* v = std::getenv("GCTQFT_MAX_ENUM");
    if (!v) return 10'000'000;
    try {
        Int parsed = std::stoll(v);
        return parsed > 0 ? parsed : 10'000'000;
    } catch (...) {
        return 10'000'000;
    }
}

inline FiniteAbelianGroup parse_group(const std::string& spec)
{
    std::vector<Int> orders;
    std::string cur;
    for (char ch : spec) {
        if (ch == ',') {
            if (!cur.empty()) orders.push_back(std::stoll(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) orders.push_back(std::stoll(cur));
    if (orders.empty()) throw io::InputError("empty group spec");
    return FiniteAbelianGroup(orders);
}

inline json witness_json(const std::vector<GroupElement>& w)
{
    json out = json::array();
    for (const auto& e : w) out.push_back(e.exps());
    return out;
}

inline json chains_json(const HomologyPresentation& h, const GroupElement& e)
{
    json per_factor = json::array();
    auto chains = h.chain(e);
    const auto& rel = h.relative_cells();
    Int d = h.dimension();
    for (const auto& ch : chains) {
        json cells = json::object();
        for (Int r = 0; r < rel.count(d); ++r) {
            Int coeff = ch[static_cast<std::size_t>(r)];
            if (coeff != 0)
                cells[h.complex().cells(d)[static_cast<std::size_t>(
                    rel.abs_of_rel[static_cast<std::size_t>(d)][static_cast<std::size_t>(r)])]] = coeff;
        }
        per_factor.push_back(cells);
    }
    return per_factor;
}

} // namespace detail

// --- command implementations -------------------------------------------------

inline RunResult cmd_check_category(const std::string& path, Int max_enum)
{
    RunResult r;
    r.report["command"] = "check-category";
    r.report["input"] = path;
    CategoryPresentation p = io::presentation_from_json(io::load_file(path));
    const auto& rep = p.order_report();
    r.report["order_conditions"] = rep.valid;
    if (!rep.valid) {
        json v = json::array();
        for (const auto& viol : rep.violations)
            v.push_back(json{{"condition", viol.condition}, {"value", io::to_json(viol.value)}});
        r.report["violations"] = v;
        r.exit_code = 1;
        return r;
    }
    Int g4 = 1;
    bool over = false;
    for (int t = 0; t < 4 && !over; ++t) {
        if (g4 > max_enum) over = true;
        g4 *= p.group().order();
    }
    if (over || g4 > max_enum) {
        r.report["error"] = "exhaustive check needs |G|^4 tuples, above the cap of " + std::to_string(max_enum);
        r.exit_code = 2;
        return r;
    }
    bool pentagon = check_pentagon(p);
    bool hexagons = check_hexagons(p);
    bool balance = check_balance(p);
    r.report["pentagon"] = pentagon;
    r.report["hexagons"] = hexagons;
    r.report["balance"] = balance;
    r.report["symmetric"] = is_symmetric(p);
    if (!pentagon || !hexagons) {
        auto w = find_b2_4cocycle_violation(B2Cochain4::from_presentation(p));
        if (w) r.report["witness"] = detail::witness_json(*w);
    }
    r.exit_code = (pentagon && hexagons && balance) ? 0 : 1;
    return r;
}

inline RunResult cmd_anomaly(const std::string& path)
{
    RunResult r;
    r.report["command"] = "anomaly";
    r.report["input"] = path;
    CategoryPresentation p = io::presentation_from_json(io::load_file(path));
    if (!p.valid()) {
        r.report["error"] = "order conditions violated";
        r.exit_code = 1;
        return r;
    }
    auto rep = normalizability_report(p);
    r.report["tau"] = io::to_json(rep.tau);
    r.report["tau_bar"] = io::to_json(rep.tau_bar);
    r.report["product"] = io::to_json(rep.product);
    r.report["normalizable"] = rep.normalizable;
    r.report["verdict"] = rep.normalizable ? ("normalizable over " + rep.extension) : "NOT normalizable";
    r.report["extension"] = rep.extension;
    r.report["anomalous"] = rep.anomalous;
    return r;
}

inline RunResult cmd_classify(const std::string& group_spec, Int level, const std::string& mode, Int max_enum)
{
    RunResult r;
    r.report["command"] = "classify";
    FiniteAbelianGroup g = detail::parse_group(group_spec);
    ClassifyMode m = ClassifyMode::automatic;
    if (mode == "full") m = ClassifyMode::full;
    else if (mode == "presentation") m = ClassifyMode::presentation;
    else if (!mode.empty() && mode != "auto") throw io::InputError("unknown classify mode " + mode);
    auto braided = classify_braided(g, level, m, max_enum);
    auto symmetric = classify_symmetric(g, level, m, max_enum);
    r.report["mode"] = braided.mode;
    r.report["braided_count"] = braided.representatives.size();
    r.report["symmetric_count"] = symmetric.representatives.size();
    json reps = json::array();
    for (const auto& p : braided.representatives) reps.push_back(io::to_json(p));
    r.report["braided"] = reps;
    json sreps = json::array();
    for (const auto& p : symmetric.representatives) sreps.push_back(io::to_json(p));
    r.report["symmetric"] = sreps;
    return r;
}

inline RunResult cmd_homology(const std::string& path, const std::string& pair, Int dim,
                              const std::string& group_spec)
{
    RunResult r;
    r.report["command"] = "homology";
    r.report["input"] = path;
    CWComplex x = io::complex_from_json(io::load_file(path));
    auto comma = pair.find(',');
    std::string yname = comma == std::string::npos ? pair : pair.substr(0, comma);
    std::string aname = comma == std::string::npos ? std::string("none") : pair.substr(comma + 1);
    Subcomplex y = Subcomplex::named(x, yname);
    Subcomplex a = Subcomplex::named(x, aname);
    FiniteAbelianGroup g = detail::parse_group(group_spec);
    HomologyPresentation h(x, y, a, dim, g);
    r.report["pair"] = json{{"space", yname}, {"relative", aname}, {"dim", dim}};
    r.report["coefficients"] = io::to_json(g);
    r.report["group"] = io::to_json(h.group());
    r.report["order"] = h.group().order();
    json gens = json::array();
    for (std::size_t j = 0; j < h.group().rank(); ++j) {
        std::vector<Int> exps(h.group().rank(), 0);
        exps[j] = 1;
        gens.push_back(detail::chains_json(h, GroupElement(h.group(), exps)));
    }
    r.report["generators"] = gens;
    return r;
}

inline RunResult cmd_state_space(const std::string& path, const std::string& yname, const std::string& wname, Int dim,
                                 const std::string& group_spec, Int level)
{
    RunResult r;
    r.report["command"] = "state-space";
    r.report["input"] = path;
    CWComplex x = io::complex_from_json(io::load_file(path));
    FiniteAbelianGroup g = detail::parse_group(group_spec);
    StateSpace s(x, Subcomplex::named(x, yname), Subcomplex::named(x, wname), dim, g, level);
    r.report["rank"] = s.rank();
    r.report["group"] = io::to_json(s.presentation().group());
    json basis = json::array();
    for (const auto& e : s.basis()) basis.push_back(io::to_json(e));
    r.report["basis"] = basis;
    return r;
}

inline RunResult cmd_induced_map(const std::string& path, const std::string& total, const std::string& y0,
                                 const std::string& y1, const std::string& w, Int dim,
                                 const std::string& group_spec, Int level, const std::string& oracle)
{
    RunResult r;
    r.report["command"] = "induced-map";
    r.report["input"] = path;
    CWComplex x = io::complex_from_json(io::load_file(path));
    FiniteAbelianGroup g = detail::parse_group(group_spec);
    Subcomplex tot = total == "all" ? Subcomplex::full(x) : Subcomplex::named(x, total);
    BordismData b(x, tot, Subcomplex::named(x, y0), Subcomplex::named(x, y1), Subcomplex::named(x, w), dim, g, level);
    if (oracle == "defining" || oracle.empty()) {
        r.report["matrix"] = io::to_json(induced_hom(b));
        r.report["oracle"] = "defining";
    } else if (oracle == "explicit") {
        r.report["matrix"] = io::to_json(induced_hom_explicit(b));
        r.report["oracle"] = "explicit";
    } else if (oracle == "both") {
        auto z1 = induced_hom(b);
        auto z2 = induced_hom_explicit(b);
        r.report["matrix"] = io::to_json(z1);
        r.report["matrix_explicit"] = io::to_json(z2);
        bool agree = z1.same_matrix(z2);
        r.report["oracles_agree"] = agree;
        r.report["oracle"] = "both";
        if (!agree) r.exit_code = 1;
    } else {
        throw io::InputError("unknown oracle mode " + oracle);
    }
    return r;
}

inline RunResult cmd_compose_check(const std::string& path, const std::string& x1, const std::string& x2,
                                   const std::string& y0, const std::string& m1, const std::string& m2,
                                   const std::string& y1, Int dim, const std::string& group_spec, Int level)
{
    RunResult r;
    r.report["command"] = "compose-check";
    r.report["input"] = path;
    CWComplex x = io::complex_from_json(io::load_file(path));
    FiniteAbelianGroup g = detail::parse_group(group_spec);
    Subcomplex sx1 = Subcomplex::named(x, x1), sx2 = Subcomplex::named(x, x2);
    Subcomplex sy0 = Subcomplex::named(x, y0), sy1 = Subcomplex::named(x, y1);
    Subcomplex sm1 = Subcomplex::named(x, m1), sm2 = Subcomplex::named(x, m2);

    Subcomplex w1 = sy0.set_intersection(sm1), w2 = sm2.set_intersection(sy1);
    BordismData b1(x, sx1, sy0, sm1, w1, dim, g, level);
    BordismData b2(x, sx2, sm2, sy1, w2, dim, g, level);
    // the glued bordism keeps the same boundary objects rel the combined
    // corner trace w1 u w2
    Subcomplex wg = w1.set_union(w2);
    BordismData glued(x, sx1.set_union(sx2), sy0.set_union(wg), sy1.set_union(wg), wg, dim, g, level);

    bool crit1 = check_composition_criterion(x, sx1, sm1, sy0, w1, dim, g);
    bool crit2 = check_composition_criterion(x, sx2, sm2, sy1, w2, dim, g);
    r.report["criterion_piece1"] = crit1;
    r.report["criterion_piece2"] = crit2;

    auto z1 = induced_hom(b1);
    auto z2 = induced_hom(b2);
    auto zg = induced_hom(glued);
    auto idx = basis_transfer(b1.outgoing(), b2.incoming(), [](const std::string& s) { return s; });
    InducedMap z1t(b1.incoming(), b2.incoming());
    for (Int i = 0; i < z1.target().rank(); ++i)
        for (Int j = 0; j < z1.source().rank(); ++j) z1t.entry(idx[static_cast<std::size_t>(i)], j) = z1.entry(i, j);
    bool equal = z2.compose(z1t).same_matrix(zg);
    r.report["composition_equals_glued"] = equal;
    r.report["matrix_glued"] = io::to_json(zg);
    r.exit_code = (crit1 && crit2 && equal) ? 0 : 1;
    return r;
}

inline RunResult cmd_modularity_check(const std::string& path, Int dim, const std::string& group_spec, Int level)
{
    RunResult r;
    r.report["command"] = "modularity-check";
    r.report["input"] = path;
    auto entry = io::gluing_from_json(io::load_file(path));
    FiniteAbelianGroup g = detail::parse_group(group_spec);
    Int n = dim >= 0 ? dim : entry.dim;
    GluingData gd(entry.unglued, entry.w1, entry.w2, entry.v, entry.glued, entry.quotient);
    bool crit = check_modularity_criterion(gd, n, g);
    auto rep = glue_compare(gd, n, g, level);
    r.report["dim"] = n;
    r.report["criterion"] = crit;
    r.report["iso"] = rep.iso;
    r.report["algebraic_size"] = rep.algebraic_size;
    r.report["geometric_size"] = rep.geometric_size;
    r.report["defect"] = rep.defect;
    r.report["verdict"] = rep.iso ? "modular" : "NOT modular";
    r.exit_code = rep.iso ? 0 : 1;
    return r;
}

inline RunResult cmd_corpus(const std::string& output_dir)
{
    RunResult r;
    r.report["command"] = "corpus";
    if (!output_dir.empty()) std::filesystem::create_directories(output_dir);
    json files = json::array();
    for (const auto& x : corpus::all_complexes()) {
        std::string fname = x.name() + ".json";
        files.push_back(fname);
        if (!output_dir.empty()) io::write_file(output_dir + "/" + fname, io::to_json(x));
    }
    for (const auto& gl : corpus::all_gluings()) {
        std::string fname = "gluing_" + gl.name + ".json";
        files.push_back(fname);
        if (!output_dir.empty()) io::write_file(output_dir + "/" + fname, io::to_json(gl));
    }
    for (const auto& [name, p] : corpus::all_presentations()) {
        std::string fname = name + ".json";
        files.push_back(fname);
        if (!output_dir.empty()) io::write_file(output_dir + "/" + fname, io::to_json(p));
    }
    r.report["files"] = files;
    r.report["written"] = !output_dir.empty();
    return r;
}

// --- driver --------------------------------------------------------------------

inline RunResult run(const std::vector<std::string>& args)
{
    CLI::App app{"gctqft: exact braided group-categories and homological field theories"};
    app.require_subcommand(1);
    Int max_enum = detail::max_enum_from_env();

    std::string in_path, out_path;
    std::string group_spec = "2", mode = "auto", oracle = "defining";
    std::string pair = "all,none", yname = "all", wname = "none";
    std::string total = "all", y0 = "none", y1 = "none", w = "none";
    std::string x1 = "all", x2 = "all", m1 = "none", m2 = "none";
    std::string output_dir;
    Int level = 1, dim = 1, mdim = -1;

    auto* c_check = app.add_subcommand("check-category", "verify order conditions and coherence axioms");
    c_check->add_option("file", in_path)->required();
    c_check->add_option("--output", out_path);

    auto* c_anomaly = app.add_subcommand("anomaly", "Gauss sums and normalizability");
    c_anomaly->add_option("file", in_path)->required();
    c_anomaly->add_option("--output", out_path);

    auto* c_classify = app.add_subcommand("classify", "equivalence classes of braided structures");
    c_classify->add_option("--group", group_spec)->required();
    c_classify->add_option("--level", level)->required();
    c_classify->add_option("--mode", mode)->check(CLI::IsMember({"auto", "full", "presentation"}));
    c_classify->add_option("--output", out_path);

    auto* c_homology = app.add_subcommand("homology", "relative homology of a pair");
    c_homology->add_option("file", in_path)->required();
    c_homology->add_option("--pair", pair);
    c_homology->add_option("--dim", dim)->required();
    c_homology->add_option("--group", group_spec)->required();
    c_homology->add_option("--output", out_path);

    auto* c_state = app.add_subcommand("state-space", "state space of a boundary pair");
    c_state->add_option("file", in_path)->required();
    c_state->add_option("--y", yname);
    c_state->add_option("--w", wname);
    c_state->add_option("--dim", dim)->required();
    c_state->add_option("--group", group_spec)->required();
    c_state->add_option("--level", level);
    c_state->add_option("--output", out_path);

    auto* c_induced = app.add_subcommand("induced-map", "induced homomorphism of a bordism");
    c_induced->add_option("file", in_path)->required();
    c_induced->add_option("--total", total);
    c_induced->add_option("--y0", y0);
    c_induced->add_option("--y1", y1);
    c_induced->add_option("--w", w);
    c_induced->add_option("--dim", dim)->required();
    c_induced->add_option("--group", group_spec)->required();
    c_induced->add_option("--level", level);
    c_induced->add_option("--oracle", oracle)->check(CLI::IsMember({"defining", "explicit", "both"}));
    c_induced->add_option("--output", out_path);

    auto* c_compose = app.add_subcommand("compose-check", "composition criterion and matrix comparison");
    c_compose->add_option("file", in_path)->required();
    c_compose->add_option("--x1", x1)->required();
    c_compose->add_option("--x2", x2)->required();
    c_compose->add_option("--y0", y0)->required();
    c_compose->add_option("--m1", m1)->required();
    c_compose->add_option("--m2", m2)->required();
    c_compose->add_option("--y1", y1)->required();
    c_compose->add_option("--dim", dim)->required();
    c_compose->add_option("--group", group_spec)->required();
    c_compose->add_option("--level", level);
    c_compose->add_option("--output", out_path);

    auto* c_modular = app.add_subcommand("modularity-check", "gluing criterion and state-space comparison");
    c_modular->add_option("file", in_path)->required();
    c_modular->add_option("--dim", mdim);
    c_modular->add_option("--group", group_spec)->required();
    c_modular->add_option("--level", level);
    c_modular->add_option("--output", out_path);

    auto* c_corpus = app.add_subcommand("corpus", "emit the bundled example files");
    c_corpus->add_option("--output-dir", output_dir);
    c_corpus->add_option("--output", out_path);

    RunResult result;
    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
        if (c_check->parsed()) result = cmd_check_category(in_path, max_enum);
        else if (c_anomaly->parsed()) result = cmd_anomaly(in_path);
        else if (c_classify->parsed()) result = cmd_classify(group_spec, level, mode, max_enum);
        else if (c_homology->parsed()) result = cmd_homology(in_path, pair, dim, group_spec);
        else if (c_state->parsed()) result = cmd_state_space(in_path, yname, wname, dim, group_spec, level);
        else if (c_induced->parsed())
            result = cmd_induced_map(in_path, total, y0, y1, w, dim, group_spec, level, oracle);
        else if (c_compose->parsed())
            result = cmd_compose_check(in_path, x1, x2, y0, m1, m2, y1, dim, group_spec, level);
        else if (c_modular->parsed()) result = cmd_modularity_check(in_path, mdim, group_spec, level);
        else if (c_corpus->parsed()) result = cmd_corpus(output_dir);
    } catch (const CLI::ParseError& e) {
        result.exit_code = e.get_exit_code() == 0 ? 0 : 2;
        result.report["error"] = e.what();
        return result;
    } catch (const io::InputError& e) {
        result.exit_code = 2;
        result.report["error"] = e.what();
        return result;
    } catch (const InfeasibleError& e) {
        result.exit_code = 2;
        result.report["error"] = e.what();
        return result;
    } catch (const std::exception& e) {
        result.exit_code = 2;
        result.report["error"] = e.what();
        return result;
    }
    if (!out_path.empty()) io::write_file(out_path, result.report);
    return result;
}

inline int main_entry(int argc, char** argv)
{
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    RunResult r = run(args);
    std::cout << r.report.dump(2) << "\n";
    return r.exit_code;
}

} // namespace cli
} // namespace gctqft
