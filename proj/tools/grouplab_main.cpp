#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "grouplab/document.hpp"
#include "grouplab/error.hpp"
#include "grouplab/families.hpp"
#include "grouplab/structure.hpp"
#include "grouplab/subgroups.hpp"
#include "grouplab/verify.hpp"

namespace {

// Writes to the requested file, or standard output when none was named.
int emit(const std::string& text, const std::string& output) {
    if (output.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(output, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open output file " << output << "\n";
        return 3;
    }
    f << text;
    f.close();
    if (!f.good()) {
        std::cerr << "error: failed writing output file " << output << "\n";
        return 3;
    }
    return 0;
}

int run_construct(const std::string& spec, const std::string& format,
                  const std::string& output) {
    grouplab::NamedGroup g = grouplab::construct_family(spec);
    std::string text;
    if (format == "json") text = grouplab::group_document_json(g, spec);
    else if (format == "dot-cayley") text = grouplab::dot_cayley(g);
    else if (format == "dot-cycle") text = grouplab::dot_cycle(g);
    else text = grouplab::dot_lattice(g);
    return emit(text, output);
}

int run_analyze(const std::string& spec, const std::string& output) {
    return emit(grouplab::analyze_json(grouplab::construct_family(spec)), output);
}

int run_compare(const std::string& spec_a, const std::string& spec_b, const std::string& mode,
                const std::string& output) {
    grouplab::NamedGroup a = grouplab::construct_family(spec_a);
    grouplab::NamedGroup b = grouplab::construct_family(spec_b);
    bool equivalent = false;
    std::vector<int> map;
    std::string kind;
    if (mode == "iso") {
        equivalent = grouplab::isomorphic(a.group, b.group, &map);
        kind = "element-bijection";
    } else if (mode == "lattice") {
        grouplab::Lattice la = grouplab::subgroup_lattice(a.group);
        grouplab::Lattice lb = grouplab::subgroup_lattice(b.group);
        equivalent = grouplab::lattices_equal(la, lb, &map);
        kind = "subgroup-node-bijection";
    } else {
        equivalent = grouplab::cycle_graphs_isomorphic(grouplab::cycle_graph(a.group),
                                                       grouplab::cycle_graph(b.group), &map);
        kind = "vertex-bijection";
    }

    nlohmann::json j;
    j["mode"] = mode;
    j["left"] = a.name;
    j["right"] = b.name;
    j["equivalent"] = equivalent;
    if (equivalent) {
        nlohmann::json w;
        w["kind"] = kind;
        w["map"] = map;
        j["witness"] = w;
    }
    int rc = emit(j.dump(2) + "\n", output);
    if (rc != 0) return rc;
    return equivalent ? 0 : 1;
}

int run_verify(const std::vector<std::string>& claims, const std::string& format,
               const std::string& output) {
    std::vector<grouplab::ClaimResult> results = grouplab::run_claims(claims);
    std::string text;
    if (format == "json") {
        text = grouplab::claims_json(results);
    } else {
        bool color = output.empty() && isatty(STDOUT_FILENO) != 0 &&
                     std::getenv("NO_COLOR") == nullptr;
        text = grouplab::claims_table(results, color);
    }
    int rc = emit(text, output);
    if (rc != 0) return rc;
    for (const grouplab::ClaimResult& r : results)
        if (!r.pass) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"grouplab: exact construction and verification of small matrix groups"};
    app.require_subcommand(1);

    std::string spec, spec_b, output;
    std::string construct_format = "json";
    std::string verify_format = "table";
    std::string mode;
    std::vector<std::string> claims;

    CLI::App* construct = app.add_subcommand(
        "construct", "Build a group from a family spec and emit JSON or DOT");
    construct->add_option("spec", spec, "family spec such as Q8, D6, C8xC2, sdp:16:7")
        ->required();
    construct->add_option("--format", construct_format, "output format")
        ->check(CLI::IsMember({"json", "dot-cayley", "dot-cycle", "dot-lattice"}));
    construct->add_option("--output", output, "write to this file instead of stdout");

    CLI::App* analyze =
        app.add_subcommand("analyze", "Emit a JSON structural report for a group");
    analyze->add_option("spec", spec, "family spec")->required();
    analyze->add_option("--output", output, "write to this file instead of stdout");

    CLI::App* compare = app.add_subcommand(
        "compare", "Compare two groups; exit 0 when equivalent, 1 when not");
    compare->add_option("spec_a", spec, "first family spec")->required();
    compare->add_option("spec_b", spec_b, "second family spec")->required();
    compare->add_option("--mode", mode, "comparison mode")
        ->required()
        ->check(CLI::IsMember({"iso", "lattice", "cyclegraph"}));
    compare->add_option("--output", output, "write to this file instead of stdout");

    CLI::App* verify = app.add_subcommand(
        "verify", "Run the structural claim suite; exit 0 only when every claim passes");
    verify->add_option("--claim", claims, "run only the named claims (repeatable)");
    verify->add_option("--format", verify_format, "output format")
        ->check(CLI::IsMember({"table", "json"}));
    verify->add_option("--output", output, "write to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (construct->parsed()) return run_construct(spec, construct_format, output);
        if (analyze->parsed()) return run_analyze(spec, output);
        if (compare->parsed()) return run_compare(spec, spec_b, mode, output);
        if (verify->parsed()) return run_verify(claims, verify_format, output);
    } catch (const grouplab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == grouplab::Err::Parse ? 2 : 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
