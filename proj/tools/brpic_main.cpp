#include "brpic/catalog.hpp"
#include "brpic/error.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace brpic;
using io::json;

namespace {

json load_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("SchemaError", "cannot read " + path);
    try {
        json j;
        in >> j;
        return j;
    }
    catch (const json::exception& ex) {
        throw Error("SchemaError", path + ": " + ex.what());
    }
}

void emit(const json& j)
{
    std::cout << j.dump(2) << "\n";
}

FinAb parse_factor_list(const std::string& s)
{
    std::vector<long> factors;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) factors.push_back(std::stol(item));
    return FinAb::of(factors); // "1" entries normalize away
}

std::string pretty_group(const FinAb& g)
{
    return g.to_string();
}

struct Options {
    bool as_json = false;
};

int run_cohomology(const std::string& group_path, const std::string& module_path, int degree,
                   const Options& opt)
{
    FiniteGroup g = io::parse_group(load_json(group_path));
    GModule m = io::parse_gmodule_spec(load_json(module_path), g, degree);
    CohomologyGroup h = cohomology(g, m, degree);
    if (opt.as_json) {
        json j = io::cohomology_to_json(h);
        if (!m.note.empty()) j["module_note"] = m.note;
        emit(j);
    }
    else {
        std::cout << "H^" << degree << " = " << h.to_string() << "\n";
        if (!m.note.empty()) std::cout << "coefficients: " << m.note << "\n";
    }
    return 0;
}

int run_galois_faithful(const std::string& scenario_path, const std::string& emb_path,
                        const Options& opt)
{
    GaloisScenario s = io::parse_scenario(load_json(scenario_path));
    EmbeddingData e = io::parse_embeddings(load_json(emb_path));
    FaithfulnessReport r = faithfulness_check(s, e);
    if (opt.as_json) {
        emit(io::faithfulness_to_json(r));
    }
    else if (r.faithful) {
        std::cout << "faithful; H = Gamma of order " << r.h_elements.size() << "\n";
    }
    else {
        std::cout << "not faithful; OmegaZ degree " << r.fixed_field_index << " over K (|H| = "
                  << r.h_elements.size() << " of " << s.gamma.order << ")\n";
    }
    return 0;
}

int run_galois_idempotents(const std::string& scenario_path, const Options& opt)
{
    GaloisScenario s = io::parse_scenario(load_json(scenario_path));
    auto p = lagrange_idempotents(s);
    auto big = grouped_idempotents(s);
    auto degrees = tensor_unit_decomposition(s);
    if (opt.as_json) {
        json jp = json::array(), jb = json::array();
        for (const auto& poly : p) jp.push_back(io::nfpoly_to_json(poly));
        for (const auto& poly : big) jb.push_back(io::nfpoly_to_json(poly));
        emit(json{{"p", jp}, {"P", jb}, {"factor_degrees", degrees}});
        return 0;
    }
    std::cout << "factor degrees:";
    for (int d : degrees) std::cout << " " << d;
    std::cout << "\n";
    for (std::size_t i = 0; i < p.size(); ++i) {
        std::cout << "p_" << i + 1 << "(x):";
        for (std::size_t t = 0; t < p[i].coeffs.size(); ++t)
            std::cout << (t ? " + (" : " (") << p[i].coeffs[t].to_string() << ")"
                      << (t ? "*x^" + std::to_string(t) : "");
        std::cout << "\n";
    }
    for (std::size_t i = 0; i < big.size(); ++i) {
        std::cout << "P_" << i + 1 << "(x):";
        for (std::size_t t = 0; t < big[i].coeffs.size(); ++t)
            std::cout << (t ? " + (" : " (") << big[i].coeffs[t].to_string() << ")"
                      << (t ? "*x^" + std::to_string(t) : "");
        std::cout << "\n";
    }
    std::cout << "verified: p_i(theta_k) = delta, P_j(theta_k) = delta_{j,J(k)}, sums = 1, "
                 "P_j coefficients in L\n";
    return 0;
}

int run_fusion(const std::string& what, const std::string& data_path, const Options& opt)
{
    FusionRingData d = io::parse_fusion(load_json(data_path));
    if (what == "validate") {
        if (opt.as_json)
            emit(json{{"valid", true}, {"rank", d.rank()}});
        else
            std::cout << "valid fusion ring with " << d.rank() << " simples\n";
        return 0;
    }
    if (what == "profile") {
        BrauerRingElement p = algebra_profile(d);
        if (opt.as_json)
            emit(io::profile_to_json(p));
        else
            std::cout << p.to_string() << "\n";
        return 0;
    }
    if (what == "inv") {
        InvertibleGroup g = invertible_objects(d);
        if (opt.as_json) {
            json j{{"labels", g.labels}, {"order", g.group.order}};
            j["invariant_factors"] =
                g.abelian_type ? io::finab_to_json(*g.abelian_type) : json("nonabelian");
            emit(j);
        }
        else {
            std::cout << "invertibles:";
            for (const auto& l : g.labels) std::cout << " " << l;
            std::cout << "\ntype: "
                      << (g.abelian_type ? g.abelian_type->to_string()
                                         : "nonabelian of order " + std::to_string(g.group.order))
                      << "\n";
        }
        return 0;
    }
    if (what == "aut-id") {
        FinAb a = aut_tensor_id(d);
        if (opt.as_json)
            emit(json{{"invariant_factors", io::finab_to_json(a)}, {"pretty", a.to_string()}});
        else
            std::cout << a.to_string() << "\n";
        return 0;
    }
    throw Error("SchemaError", "unknown fusion subcommand " + what);
}

int run_solve_brpic(const std::string& inv, const std::string& aut_t, const std::string& br,
                    const std::string& aut_br, bool h3_trivial, const Options& opt)
{
    BrPicSolution s = solve_brpic(parse_factor_list(inv), parse_factor_list(aut_t),
                                  parse_factor_list(br), parse_factor_list(aut_br), h3_trivial);
    if (opt.as_json) {
        emit(io::brpic_to_json(s));
    }
    else {
        std::cout << "BrPic order: " << s.order << "\n";
        std::cout << "BrPic type:  " << (s.iso_type ? pretty_group(*s.iso_type) : "UNDETERMINED")
                  << "\n";
        if (!s.note.empty()) std::cout << "note: " << s.note << "\n";
    }
    return 0;
}

int run_classify(const std::string& group_path, const Options& opt)
{
    FiniteGroup g = io::parse_group(load_json(group_path));
    auto records = classify_vecR_extensions(g);
    if (opt.as_json) {
        json out = json::array();
        for (const auto& rec : records)
            out.push_back(json{{"f", rec.f_values},
                               {"phi", rec.phi_index},
                               {"fusion", io::fusion_to_json(rec.fusion)}});
        emit(out);
        return 0;
    }
    std::cout << records.size() << " graded extensions\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& rec = records[i];
        std::cout << "#" << i << ": f = (";
        for (std::size_t t = 0; t < rec.f_values.size(); ++t)
            std::cout << (t ? "," : "") << rec.f_values[t];
        std::cout << "), phi = " << rec.phi_index
                  << ", profile = " << algebra_profile(rec.fusion).to_string() << "\n";
    }
    return 0;
}

int run_catalog_list(const Options& opt)
{
    auto catalog = default_catalog();
    if (opt.as_json) {
        json out = json::array();
        for (const auto& e : catalog)
            out.push_back(json{{"id", e.id}, {"description", e.description}});
        emit(out);
        return 0;
    }
    for (const auto& e : catalog) std::cout << e.id << ": " << e.description << "\n";
    return 0;
}

int run_catalog_show(const std::string& id, const Options& opt)
{
    auto catalog = default_catalog();
    for (const auto& e : catalog) {
        if (e.id != id) continue;
        if (opt.as_json) {
            emit(e.raw);
        }
        else {
            std::cout << e.id << ": " << e.description << "\n";
            std::cout << "simples:";
            for (const auto& s : e.fusion.simples) std::cout << " " << s;
            std::cout << "\nprofile: " << algebra_profile(e.fusion).to_string() << "\n";
            std::cout << "expectations: " << e.expected.size() << "\n";
        }
        return 0;
    }
    throw Error("SchemaError", "no catalog entry with id '" + id + "'");
}

int run_verify(const Options& opt)
{
    RunReport report = verify_paper();
    if (opt.as_json) {
        json out = json::array();
        for (const auto& l : report.lines)
            out.push_back(json{{"name", l.name},
                               {"computed", l.computed},
                               {"expected", l.expected},
                               {"cite", l.cite},
                               {"pass", l.pass}});
        emit(json{{"checks", out}, {"pass", report.pass}});
    }
    else {
        int passed = 0;
        for (const auto& l : report.lines) {
            std::cout << (l.pass ? "[PASS] " : "[FAIL] ") << l.name << ": " << l.computed;
            if (!l.pass) std::cout << " (expected " << l.expected << ")";
            if (!l.cite.empty()) std::cout << "  -- " << l.cite;
            std::cout << "\n";
            if (l.pass) ++passed;
        }
        std::cout << passed << "/" << report.lines.size() << " checks passed\n";
    }
    return report.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact invariants for fusion categories over non-closed fields"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.as_json, "emit canonical JSON");

    // cohomology
    std::string group_path, module_path;
    int degree = 0;
    auto* cohom = app.add_subcommand("cohomology", "H^n(G; M) via bar resolution + Smith form");
    cohom->add_option("--group", group_path, "group JSON file")->required();
    cohom->add_option("--module", module_path, "module JSON file (or {\"units_of\": field})")
        ->required();
    cohom->add_option("--degree", degree, "cohomological degree")->required();

    // galois
    std::string scenario_path, emb_path;
    auto* galois = app.add_subcommand("galois", "splitting-field scenarios");
    galois->require_subcommand(1);
    auto* faithful = galois->add_subcommand("faithful", "double-coset faithfulness test");
    faithful->add_option("--scenario", scenario_path, "scenario JSON")->required();
    faithful->add_option("--embeddings", emb_path, "embedding JSON")->required();
    auto* idem = galois->add_subcommand("idempotents", "Lagrange idempotents p_i and P_j");
    idem->add_option("--scenario", scenario_path, "scenario JSON")->required();

    // fusion
    std::string fusion_what, data_path;
    auto* fusion = app.add_subcommand("fusion", "fusion-ring queries");
    fusion->require_subcommand(1);
    for (const char* sub : {"validate", "profile", "inv", "aut-id"}) {
        auto* cmd = fusion->add_subcommand(sub);
        cmd->add_option("--data", data_path, "fusion JSON")->required();
    }

    // seq
    std::string inv_s, aut_t_s = "1", br_s, aut_br_s = "1";
    bool h3_trivial = false;
    auto* seq = app.add_subcommand("seq", "exact-sequence order chase");
    seq->require_subcommand(1);
    auto* solve = seq->add_subcommand("solve-brpic", "derive |BrPic| from the 6-term chain");
    solve->add_option("--inv", inv_s, "Inv(Z): comma-separated invariant factors, 1 = trivial")
        ->required();
    solve->add_option("--aut-t", aut_t_s, "Aut_t(Id)")->required();
    solve->add_option("--br", br_s, "Br(K)")->required();
    solve->add_option("--aut-br", aut_br_s, "Aut_br(Z)")->required();
    solve->add_flag("--h3-trivial", h3_trivial, "assert H^3(K; Gm) = 1");

    // classify
    auto* classify = app.add_subcommand("classify", "graded extension classification");
    classify->require_subcommand(1);
    auto* vecr = classify->add_subcommand("vecr", "G-graded extensions of Vec_R");
    vecr->add_option("--group", group_path, "group JSON")->required();

    // catalog
    std::string show_id;
    auto* catalog = app.add_subcommand("catalog", "curated categories");
    catalog->require_subcommand(1);
    catalog->add_subcommand("list", "list entries");
    auto* show = catalog->add_subcommand("show", "show one entry");
    show->add_option("id", show_id, "entry id")->required();

    auto* verify = app.add_subcommand("verify-paper", "run the full reproduction suite");
    (void)verify;

    // let the global --json flag appear after subcommand names
    std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* cmd) {
        for (auto* sub : cmd->get_subcommands(nullptr)) {
            sub->fallthrough();
            allow_fallthrough(sub);
        }
    };
    allow_fallthrough(&app);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (cohom->parsed()) return run_cohomology(group_path, module_path, degree, opt);
        if (galois->parsed()) {
            if (faithful->parsed()) return run_galois_faithful(scenario_path, emb_path, opt);
            return run_galois_idempotents(scenario_path, opt);
        }
        if (fusion->parsed()) {
            for (auto* sub : fusion->get_subcommands())
                return run_fusion(sub->get_name(), data_path, opt);
        }
        if (seq->parsed())
            return run_solve_brpic(inv_s, aut_t_s, br_s, aut_br_s, h3_trivial, opt);
        if (classify->parsed()) return run_classify(group_path, opt);
        if (catalog->parsed()) {
            if (show->parsed()) return run_catalog_show(show_id, opt);
            return run_catalog_list(opt);
        }
        if (verify->parsed()) return run_verify(opt);
    }
    catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
