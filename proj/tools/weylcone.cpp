// Command-line driver: runs the verification suites and emits the exact
// combinatorial data (equations, polytope edges, stability tables, divisor
// classes) as text or JSON.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "weylcone/cases.hpp"
#include "weylcone/serialize.hpp"
#include "weylcone/suites.hpp"

namespace {

using namespace weylcone;

std::filesystem::path resolve_output(const std::string& path)
{
    std::filesystem::path p(path);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("WEYLCONE_OUT_DIR")) p = std::filesystem::path(dir) / p;
    }
    return p;
}

// Returns false (after printing the path) on I/O failure.
bool write_output(const std::string& path, const std::string& content)
{
    auto p = resolve_output(path);
    if (p.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(p.parent_path(), ec);
    }
    std::ofstream out(p);
    out << content;
    out.close();
    if (!out) {
        std::cerr << "error: cannot write " << p.string() << "\n";
        return false;
    }
    return true;
}

std::vector<int> parse_cases(const std::string& name)
{
    if (name == "all") {
        std::vector<int> all;
        for (std::size_t i = 0; i < chain_cases().size(); ++i) all.push_back((int)i);
        return all;
    }
    return {case_index(name)};
}

int cmd_verify(const std::string& case_name, const std::string& suite_name, std::uint64_t seed,
               const std::string& json_path, bool quiet)
{
    std::vector<std::string> suites;
    if (suite_name == "all")
        suites = suite_names();
    else if (std::find(suite_names().begin(), suite_names().end(), suite_name) !=
             suite_names().end())
        suites = {suite_name};
    else
        throw std::invalid_argument("unknown suite: " + suite_name);

    SuiteRun run = run_suite(parse_cases(case_name), suites, seed);
    if (!quiet) std::cout << suite_report_text(run);
    if (!json_path.empty() && !write_output(json_path, suite_report_json(run).dump(2) + "\n"))
        return 1;
    return run.all_pass() ? 0 : 1;
}

int cmd_equations(const std::string& case_name, const std::string& format,
                  const std::string& out_path)
{
    const CaseContext& c = case_context(case_index(case_name));
    std::string payload = format == "json" ? equations_json(c.mod, c.forms).dump(2) + "\n"
                                           : equations_text(c.mod, c.forms);
    if (out_path.empty()) {
        std::cout << payload;
        return 0;
    }
    return write_output(out_path, payload) ? 0 : 1;
}

int cmd_polytope(const std::string& case_name, bool edges, const std::string& removals,
                 const std::string& json_path)
{
    const CaseContext& c = case_context(case_index(case_name));
    Json doc;
    doc["case"] = c.info.cli_name;
    if (edges) {
        Json list = Json::array();
        for (auto [a, b] : c.lp_edges())
            list.push_back(Json{{"a", a},
                                {"b", b},
                                {"weight_a", c.poly.verts[a]},
                                {"weight_b", c.poly.verts[b]}});
        doc["edges"] = list;
    }
    if (!removals.empty()) {
        const int n = (int)c.poly.verts.size();
        Json table = Json::array();
        if (removals == "singletons") {
            for (int s = 0; s < n; ++s)
                table.push_back(
                    Json{{"removed", IntVec{s}}, {"stable", stable_after_removals(c.poly, {s})}});
        } else if (removals == "pairs") {
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    table.push_back(Json{{"removed", IntVec{a, b}},
                                         {"adjacent", adjacent_by_pairing(c.poly, a, b)},
                                         {"stable", stable_after_removals(c.poly, {a, b})}});
        } else {
            throw std::invalid_argument("unknown removals mode: " + removals);
        }
        doc["removals"] = table;
    }
    std::string payload = doc.dump(2) + "\n";
    if (json_path.empty()) {
        std::cout << payload;
        return 0;
    }
    return write_output(json_path, payload) ? 0 : 1;
}

int cmd_delpezzo(int r, const std::string& list_kind, bool graph, const std::string& json_path)
{
    auto pl = make_picard(r);
    Json doc;
    doc["r"] = r;
    if (!list_kind.empty()) {
        ClassKind kind;
        if (list_kind == "exceptional")
            kind = ClassKind::Exceptional;
        else if (list_kind == "conic")
            kind = ClassKind::Conic;
        else if (list_kind == "roots")
            kind = ClassKind::Root;
        else
            throw std::invalid_argument("unknown class kind: " + list_kind);
        doc["kind"] = list_kind;
        doc["classes"] = classes_json(enumerate_classes(pl, kind));
    }
    if (graph) doc["graph"] = incidence_graph_json(pl);
    std::string payload = doc.dump(2) + "\n";
    if (json_path.empty()) {
        std::cout << payload;
        return 0;
    }
    return write_output(json_path, payload) ? 0 : 1;
}

int cmd_dump(const std::string& case_name, const std::string& what,
             const std::string& json_path)
{
    const CaseContext& c = case_context(case_index(case_name));
    Json doc;
    if (what == "rootsys")
        doc = root_system_json(c.rs);
    else if (what == "orbit")
        doc = orbit_json(c.mod.weights);
    else if (what == "module")
        doc = module_json(c.mod);
    else
        throw std::invalid_argument("unknown dump target: " + what);
    std::string payload = doc.dump(2) + "\n";
    if (json_path.empty()) {
        std::cout << payload;
        return 0;
    }
    return write_output(json_path, payload) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification of minuscule cone geometry and del Pezzo "
                 "class combinatorics"};
    app.require_subcommand(1);

    std::string case_name = "all", suite_name = "all", json_path, format = "text";
    std::string removals, list_kind, what = "rootsys", out_path;
    std::uint64_t seed = 42;
    bool quiet = false, edges = false, graph = false;
    int r = 7;

    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--case", case_name, "a4|d5|e6|e7|all");
    verify->add_option("--suite", suite_name, "rep|forms|fibres|stability|delpezzo|all");
    verify->add_option("--seed", seed, "seed for randomized checks");
    verify->add_option("--json", json_path, "write the JSON report here");
    verify->add_flag("--quiet", quiet, "suppress the text summary");

    auto* equations = app.add_subcommand("equations", "emit the cone equations");
    equations->add_option("--case", case_name, "a4|d5|e6|e7")->required();
    equations->add_option("--format", format, "text|json");
    equations->add_option("--out", out_path, "output file (default stdout)");

    auto* polytope = app.add_subcommand("polytope", "weight polytope queries");
    polytope->add_option("--case", case_name, "a4|d5|e6|e7")->required();
    polytope->add_flag("--edges", edges, "emit the polytope edge list");
    polytope->add_option("--removals", removals, "singletons|pairs stability table");
    polytope->add_option("--json", json_path, "output file (default stdout)");

    auto* delpezzo = app.add_subcommand("delpezzo", "Picard lattice queries");
    delpezzo->add_option("--r", r, "number of blown-up points, 4..7")->required();
    delpezzo->add_option("--list", list_kind, "exceptional|conic|roots");
    delpezzo->add_flag("--graph", graph, "emit the incidence graph");
    delpezzo->add_option("--json", json_path, "output file (default stdout)");

    auto* dump = app.add_subcommand("dump", "serialize core data");
    dump->add_option("--case", case_name, "a4|d5|e6|e7")->required();
    dump->add_option("--what", what, "rootsys|orbit|module");
    dump->add_option("--json", json_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(case_name, suite_name, seed, json_path, quiet);
        if (equations->parsed()) return cmd_equations(case_name, format, out_path);
        if (polytope->parsed()) return cmd_polytope(case_name, edges, removals, json_path);
        if (delpezzo->parsed()) return cmd_delpezzo(r, list_kind, graph, json_path);
        if (dump->parsed()) return cmd_dump(case_name, what, json_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
