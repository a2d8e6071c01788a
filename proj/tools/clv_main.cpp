#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "clv/classifier.hpp"
#include "clv/curve_enum.hpp"
#include "clv/homology.hpp"
#include "clv/lattice.hpp"
#include "clv/surface_models.hpp"

using namespace clv;
using nlohmann::json;

namespace {

struct Options {
    std::string catalog_path;
    std::string g13_param;
};

std::optional<std::array<Int, 2>> parse_family_param(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto colon = s.find(':');
    if (colon == std::string::npos) throw InputError("family parameter must be written a:b");
    try {
        std::array<Int, 2> p{Int(s.substr(0, colon)), Int(s.substr(colon + 1))};
        if (p[0] == 0 && p[1] == 0) throw InputError("family parameter [0:0] is not a point of P1");
        return p;
    } catch (const std::runtime_error&) {
        throw InputError("family parameter must be two integers a:b");
    }
}

std::string catalog_path(const Options& o) { return o.catalog_path.empty() ? default_catalog_path() : o.catalog_path; }

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + " is not valid JSON: " + e.what());
    }
}

Catalog load(const Options& o) { return load_catalog(catalog_path(o), parse_family_param(o.g13_param)); }

// "CLASS[:MULT],CLASS[:MULT],..."
std::vector<WeightedClass> parse_weighted(const IntLattice& lat, const std::string& spec) {
    std::vector<WeightedClass> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (item.empty()) throw InputError("empty component in '" + spec + "'");
        int mult = 1;
        auto colon = item.find(':');
        if (colon != std::string::npos) {
            try {
                std::size_t used = 0;
                mult = std::stoi(item.substr(colon + 1), &used);
                if (used != item.size() - colon - 1) throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                throw InputError("bad multiplicity in '" + item + "'");
            }
            item = item.substr(0, colon);
        }
        out.push_back({parse_class(lat, item), mult});
    }
    if (out.empty()) throw InputError("no components given");
    return out;
}

json class_json(const IntLattice& lat, const DivClass& d) {
    return {{"class", class_to_json(d)}, {"text", format_class(lat, d)}};
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"clv: lattice, curve-class, cokernel and classification checks for cubic surface boundaries"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--catalog", opt.catalog_path, "catalog JSON (default: CLV_CATALOG or the shipped catalog)");
    app.add_option("--g13", opt.g13_param, "parameter a:b for the G13 family (default 1:1)");

    int exit_code = 0;

    auto* catalog_cmd = app.add_subcommand("catalog", "catalog checks");
    catalog_cmd->require_subcommand(1);
    auto* verify_cmd = catalog_cmd->add_subcommand("verify", "verify every catalog invariant");
    verify_cmd->callback([&] {
        Catalog c = parse_catalog(read_json_file(catalog_path(opt)), parse_family_param(opt.g13_param));
        CatalogReport r = verify_catalog(c);
        print(r.to_json());
        exit_code = r.all_pass() ? 0 : 1;
    });
    std::string canon_out;
    auto* canon_cmd = catalog_cmd->add_subcommand("canonicalize", "rewrite the catalog in canonical form");
    canon_cmd->add_option("--output", canon_out, "output path (default: stdout)");
    canon_cmd->callback([&] {
        Catalog c = parse_catalog(read_json_file(catalog_path(opt)));
        std::string text = serialize_catalog(c).dump(2) + "\n";
        if (canon_out.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(canon_out);
            if (!out) throw InputError("cannot write " + canon_out);
            out << text;
        }
    });

    auto* curves_cmd = app.add_subcommand("curves", "curve-class enumeration");
    curves_cmd->require_subcommand(1);
    auto* enum_cmd = curves_cmd->add_subcommand("enumerate", "smooth rational curve classes on G1, G2, G4 or G5");
    std::string surface;
    std::optional<int> degree_opt;
    enum_cmd->add_option("--surface", surface, "surface id")->required();
    enum_cmd->add_option("--degree", degree_opt, "single anticanonical degree");
    enum_cmd->callback([&] {
        Catalog c = load(opt);
        SolutionSet s = enumerate_curve_classes(c, surface, degree_opt);
        const IntLattice& lat = *c.get(surface).lattice;
        json j;
        j["schema"] = 1;
        j["surface"] = surface;
        j["basis"] = lat.basis_tag;
        j["classes"] = json::array();
        for (const auto& d : s.classes) {
            json e = class_json(lat, d);
            e["degree"] = degree(lat, d).str();
            j["classes"].push_back(e);
        }
        j["search_bounds"] = json::array();
        for (const auto& b : s.search_bounds)
            j["search_bounds"].push_back({{"n", b.n}, {"a_range", {b.a_min.str(), b.a_max.str()}}, {"b_box", b.b_box.str()}});
        j["n_max"] = s.n_max ? json(*s.n_max) : json(nullptr);
        j["n_bound_method"] = s.n_bound_method;
        std::vector<std::string> gaps = s.constraint_gaps;
        gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
        j["constraint_gaps"] = gaps;
        j["beyond_reference"] = s.beyond_reference;
        print(j);
    });

    auto* tuples_cmd = app.add_subcommand("tuples", "raw (n, a; b) solutions of the degree and genus equations");
    int tn = 0, tgenus = 0;
    bool cuspidal = false;
    tuples_cmd->add_option("--n", tn, "anticanonical degree");
    tuples_cmd->add_option("--genus", tgenus, "arithmetic genus (default 0)");
    tuples_cmd->add_flag("--cuspidal", cuspidal, "degree 3 tuples of the cuspidal strict transform");
    tuples_cmd->callback([&] {
        if (cuspidal) {
            if (tn != 0 && tn != 3) throw InputError("--cuspidal requires n = 3");
            tn = 3;
        }
        if (tn < 1) throw InputError("--n must be at least 1");
        auto cb = bounds_from_cauchy_schwarz(tn, tgenus);
        json j;
        j["schema"] = 1;
        j["n"] = tn;
        j["genus"] = tgenus;
        j["a_range"] = {cb.a_min.str(), cb.a_max.str()};
        j["tuples"] = json::array();
        for (const auto& t : enumerate_tuples(tn, tgenus)) {
            json b = json::array();
            for (const auto& x : t.b) b.push_back(std::stoll(x.str()));
            j["tuples"].push_back({{"a", std::stoll(t.a.str())}, {"b", b}, {"text", t.to_string()}});
        }
        print(j);
    });

    auto* coker_cmd = app.add_subcommand("coker", "cokernel computations");
    coker_cmd->require_subcommand(1);
    auto* theta_cmd = coker_cmd->add_subcommand("theta", "cokernel of theta on a cubic surface");
    std::string comp_spec, decomp_spec;
    theta_cmd->add_option("--surface", surface, "surface id")->required();
    theta_cmd->add_option("--components", comp_spec, "CLASS[:MULT],... e.g. E4,H-E1")->required();
    theta_cmd->callback([&] {
        Catalog c = load(opt);
        const SurfaceModel& s = c.get(surface);
        if (!s.lattice) throw InputError("surface " + surface + " has no lattice model");
        auto comps = parse_weighted(*s.lattice, comp_spec);
        FgAbGroup g = coker_theta(c, surface, comps);
        json j;
        j["schema"] = 1;
        j["surface"] = surface;
        j["generators"] = json::array();
        for (const auto& d : theta_generators(c, surface, comps)) j["generators"].push_back(class_json(*s.lattice, d));
        j["coker"] = {{"free_rank", g.free_rank}, {"torsion", json::array()}, {"text", g.to_string()}};
        for (const auto& t : g.torsion) j["coker"]["torsion"].push_back(std::stoll(t.str()));
        j["trivial"] = g.trivial();
        print(j);
    });
    auto* xi_cmd = coker_cmd->add_subcommand("xi", "cokernel of xi for a decomposition of Sigma+2f on R3");
    xi_cmd->add_option("--decomposition", decomp_spec, "CLASS[:MULT],... e.g. Sigma,f:2")->required();
    xi_cmd->callback([&] {
        const IntLattice lat = nonnormal_f1_lattice();
        XiResult r = coker_xi_R3(parse_weighted(lat, decomp_spec));
        json j;
        j["schema"] = 1;
        j["images"] = json::array();
        for (const auto& im : r.images) {
            json a = json::array();
            for (const auto& x : im) a.push_back(std::stoll(x.str()));
            j["images"].push_back(a);
        }
        j["injective"] = r.injective;
        j["coker"] = {{"free_rank", r.coker.free_rank}, {"torsion", json::array()}, {"text", r.coker.to_string()}};
        for (const auto& t : r.coker.torsion) j["coker"]["torsion"].push_back(std::stoll(t.str()));
        print(j);
    });

    auto* classify_cmd = app.add_subcommand("classify", "classify a triple descriptor");
    std::string input;
    classify_cmd->add_option("--input", input, "descriptor JSON file")->required();
    classify_cmd->callback([&] {
        Catalog c = load(opt);
        TripleDescriptor d = descriptor_from_json(read_json_file(input), c);
        print(classify(d, c).to_json());
    });

    auto* example_cmd = app.add_subcommand("example", "checks of the non-A3 example triple");
    example_cmd->callback([&] {
        Catalog c = load(opt);
        ExampleReport r = example_nonA3_checks(c);
        print(r.to_json());
        exit_code = r.all_pass() ? 0 : 1;
    });

    auto* lemmas_cmd = app.add_subcommand("lemmas", "replay of every computation");
    lemmas_cmd->require_subcommand(1);
    auto* run_all = lemmas_cmd->add_subcommand("run-all", "run the full replay");
    bool as_json = false, as_md = false;
    auto* jflag = run_all->add_flag("--json", as_json, "JSON report");
    run_all->add_flag("--markdown", as_md, "markdown report")->excludes(jflag);
    run_all->callback([&] {
        Catalog c = load(opt);
        LemmaReport r = run_all_lemmas(c);
        if (as_json) {
            print(r.to_json());
        } else if (as_md) {
            std::cout << r.to_markdown();
        } else {
            for (const auto& e : r.entries)
                std::cout << (e.pass ? "PASS " : "FAIL ") << e.id << ": " << e.computed
                          << (e.pass ? "" : " (expected " + e.expected + ")") << "\n";
            std::cout << r.entries.size() - r.failures() << "/" << r.entries.size() << " pass\n";
        }
        exit_code = static_cast<int>(std::min<std::size_t>(r.failures(), 125));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const StructuralError& e) {
        std::cerr << "structural error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return exit_code;
}
