#include "grouplab/document.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "grouplab/structure.hpp"
#include "grouplab/subgroups.hpp"

namespace grouplab {

namespace {

using nlohmann::json;

std::string dot_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

std::string fixed4(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    // avoid the signed zero so positions are stable across platforms
    if (std::string(buf) == "-0.0000") return "0.0000";
    return buf;
}

constexpr const char* kPalette[] = {"#1b9e77", "#d95f02", "#7570b3",
                                    "#e7298a", "#66a61e", "#e6ab02"};
constexpr int kPaletteSize = 6;

}  // namespace

std::string group_document_json(const NamedGroup& g, const std::string& provenance) {
    json doc;
    doc["schema"] = 1;
    doc["name"] = g.name;
    doc["order"] = g.group.order;
    doc["labels"] = g.group.labels;
    doc["table"] = g.group.table;
    doc["generators"] = g.group.generators;
    doc["provenance"] = provenance;
    return doc.dump(2) + "\n";
}

NamedGroup group_from_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        fail(Err::Parse, std::string("document is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) fail(Err::Parse, "document root must be an object");
    for (const char* key : {"schema", "name", "order", "labels", "table", "generators",
                            "provenance"})
        if (!doc.contains(key)) fail(Err::Parse, std::string("document misses field ") + key);
    if (!doc["schema"].is_number_integer() || doc["schema"].get<int>() != 1)
        fail(Err::Parse, "unsupported document schema");
    if (!doc["name"].is_string() || !doc["provenance"].is_string())
        fail(Err::Parse, "name and provenance must be strings");
    if (!doc["order"].is_number_integer()) fail(Err::Parse, "order must be an integer");
    int n = doc["order"].get<int>();
    if (n < 1) fail(Err::Parse, "order must be positive");

    NamedGroup out;
    out.name = doc["name"].get<std::string>();
    FiniteGroup& g = out.group;
    g.order = n;
    g.source = doc["provenance"].get<std::string>();

    if (!doc["labels"].is_array() || static_cast<int>(doc["labels"].size()) != n)
        fail(Err::Parse, "labels must list one string per element");
    for (const json& l : doc["labels"]) {
        if (!l.is_string()) fail(Err::Parse, "labels must list one string per element");
        g.labels.push_back(l.get<std::string>());
    }

    if (!doc["table"].is_array() || static_cast<int>(doc["table"].size()) != n)
        fail(Err::Parse, "table must be an order x order matrix");
    for (const json& row : doc["table"]) {
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            fail(Err::Parse, "table must be an order x order matrix");
        std::vector<int> r;
        for (const json& cell : row) {
            if (!cell.is_number_integer()) fail(Err::Parse, "table entries must be integers");
            int v = cell.get<int>();
            if (v < 0 || v >= n) fail(Err::Parse, "table entry out of range");
            r.push_back(v);
        }
        g.table.push_back(std::move(r));
    }

    if (!doc["generators"].is_array()) fail(Err::Parse, "generators must be a list of indices");
    for (const json& gen : doc["generators"]) {
        if (!gen.is_number_integer()) fail(Err::Parse, "generators must be a list of indices");
        g.generators.push_back(gen.get<int>());
    }

    std::string violation = table_violation(g);
    if (!violation.empty()) fail(Err::Parse, "document table rejected: " + violation);
    return out;
}

std::string dot_cayley(const NamedGroup& ng) {
    const FiniteGroup& g = ng.group;
    std::ostringstream out;
    out << "digraph \"" << dot_escape(ng.name) << "\" {\n";
    out << "  layout=neato;\n";
    out << "  node [shape=circle, fontsize=10];\n";

    // Concentric layout: walk the first generator's orbits; orbit o sits on
    // the circle of radius o+1, its elements at the orbit-step angles.
    int g0 = g.generators.empty() ? 0 : g.generators[0];
    std::vector<std::pair<double, double>> pos(g.order, {0.0, 0.0});
    std::vector<char> seen(g.order, 0);
    int orbit_index = 0;
    for (int start = 0; start < g.order; ++start) {
        if (seen[start]) continue;
        std::vector<int> orbit;
        int x = start;
        do {
            orbit.push_back(x);
            seen[x] = 1;
            x = multiply(g, x, g0);
        } while (x != start);
        double radius = 1.0 + orbit_index;
        for (std::size_t k = 0; k < orbit.size(); ++k) {
            double angle =
                2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(orbit.size());
            pos[orbit[k]] = {radius * std::cos(angle), radius * std::sin(angle)};
        }
        ++orbit_index;
    }

    for (int v = 0; v < g.order; ++v)
        out << "  n" << v << " [label=\"" << dot_escape(g.labels[v]) << "\", pos=\""
            << fixed4(pos[v].first) << "," << fixed4(pos[v].second) << "!\"];\n";

    for (std::size_t gi = 0; gi < g.generators.size(); ++gi) {
        int gen = g.generators[gi];
        const char* color = kPalette[gi % kPaletteSize];
        bool involutive = element_order(g, gen) == 2;
        for (int v = 0; v < g.order; ++v) {
            int u = multiply(g, v, gen);
            if (u == v) continue;
            if (involutive && u < v) continue;  // one undirected edge per pair
            out << "  n" << v << " -> n" << u << " [color=\"" << color << "\""
                << (involutive ? ", dir=none" : "") << "];\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::string dot_cycle(const NamedGroup& ng) {
    CycleGraph cg = cycle_graph(ng.group);
    std::ostringstream out;
    out << "graph \"" << dot_escape(ng.name) << "\" {\n";
    out << "  layout=neato;\n";
    out << "  node [shape=circle, fontsize=10];\n";
    for (int v = 0; v < cg.vertices; ++v)
        out << "  n" << v << " [label=\"" << dot_escape(ng.group.labels[v]) << "\"];\n";
    for (auto [u, v] : cg.edges) out << "  n" << u << " -- n" << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string dot_lattice(const NamedGroup& ng) {
    Lattice l = subgroup_lattice(ng.group);
    std::ostringstream out;
    out << "digraph \"" << dot_escape(ng.name) << "\" {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=box, fontsize=10];\n";
    for (std::size_t i = 0; i < l.nodes.size(); ++i)
        out << "  n" << i << " [label=\""
            << dot_escape(iso_label(subgroup_group(l.nodes[i]))) << "\"];\n";
    for (const CoverEdge& e : l.covers)
        out << "  n" << e.lower << " -> n" << e.upper << " [label=\"" << e.index << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string analyze_json(const NamedGroup& ng) {
    const FiniteGroup& g = ng.group;
    json j;
    j["name"] = ng.name;
    j["order"] = g.order;
    j["abelian"] = center(g).size() == g.order;
    j["center_order"] = center(g).size();

    std::map<int, int> hist;
    for (int x = 0; x < g.order; ++x) ++hist[element_order(g, x)];
    json hj = json::array();
    for (auto [ord, count] : hist) hj.push_back({ord, count});
    j["element_order_histogram"] = hj;

    std::vector<Subgroup> subs = all_subgroups(g);
    j["subgroup_count"] = subs.size();
    int normal = 0;
    for (const Subgroup& s : subs)
        if (is_normal(g, s.members)) ++normal;
    j["normal_subgroup_count"] = normal;

    std::vector<std::vector<int>> classes = subgroup_conjugacy_classes(g, subs);
    json class_sizes = json::array();
    for (const auto& c : classes) class_sizes.push_back(c.size());
    j["subgroup_class_sizes"] = class_sizes;

    Lattice l = subgroup_lattice(g);
    json lj;
    lj["node_count"] = l.nodes.size();
    lj["cover_count"] = l.covers.size();
    lj["automorphism_count"] = lattice_automorphism_count(l);
    std::vector<int> unicorns = lattice_unicorns(l);
    lj["unicorn_count"] = unicorns.size();
    json usizes = json::array();
    for (int i : unicorns) usizes.push_back(l.nodes[i].size());
    lj["unicorn_orders"] = usizes;
    j["lattice"] = lj;

    ReducedLattice r = reduced_lattice(g);
    json rj;
    rj["labels"] = r.labels;
    rj["orders"] = r.sizes;
    j["reduced_lattice"] = rj;

    json splits = json::array();
    for (const SplitDecomposition& s : semidirect_decompositions(g)) {
        json e;
        e["kernel"] = s.kernel_label;
        e["complement"] = s.complement_label;
        e["direct"] = s.direct;
        splits.push_back(e);
    }
    j["semidirect_products"] = splits;

    json centrals = json::array();
    for (const CentralProduct& c : central_product_decompositions(g)) {
        json e;
        e["left"] = c.left_label;
        e["right"] = c.right_label;
        e["intersection_order"] = c.intersection_order;
        centrals.push_back(e);
    }
    j["central_products"] = centrals;

    CycleGraph cg = cycle_graph(g);
    json cj;
    cj["cycle_count"] = cg.cycles.size();
    cj["edge_count"] = cg.edges.size();
    j["cycle_graph"] = cj;

    return j.dump(2) + "\n";
}

}  // namespace grouplab
