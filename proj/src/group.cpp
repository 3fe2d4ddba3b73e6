#include "grouplab/group.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace grouplab {

FiniteGroup generate_group(const std::vector<Mat2>& gens, int cap) {
    if (gens.empty()) fail(Err::Parameter, "need at least one generator");
    if (cap < 1) fail(Err::Parameter, "cap must be positive");
    int m = gens[0].order();
    for (const Mat2& g : gens)
        if (g.order() != m) fail(Err::OrderMismatch, "generators live in different rings");

    std::vector<Mat2> elems{mat_identity(m)};
    std::map<std::string, int> index{{to_string(elems[0]), 0}};
    std::queue<int> work;
    work.push(0);
    while (!work.empty()) {
        int x = work.front();
        work.pop();
        for (const Mat2& g : gens) {
            Mat2 p = mat_mul(elems[x], g);
            std::string key = to_string(p);
            if (index.count(key)) continue;
            if (static_cast<int>(elems.size()) >= cap)
                fail(Err::CapExceeded, "closure exceeds cap of " + std::to_string(cap));
            index.emplace(key, static_cast<int>(elems.size()));
            elems.push_back(p);
            work.push(static_cast<int>(elems.size()) - 1);
        }
    }

    int n = static_cast<int>(elems.size());
    FiniteGroup out;
    out.order = n;
    out.labels.reserve(n);
    for (const Mat2& e : elems) out.labels.push_back(to_string(e));
    out.table.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) out.table[a][b] = index.at(to_string(mat_mul(elems[a], elems[b])));
    for (const Mat2& g : gens) {
        int idx = index.at(to_string(g));
        if (std::find(out.generators.begin(), out.generators.end(), idx) == out.generators.end())
            out.generators.push_back(idx);
    }
    out.source = "matrix closure";
    return out;
}

int multiply(const FiniteGroup& g, int a, int b) {
    if (a < 0 || a >= g.order || b < 0 || b >= g.order)
        fail(Err::Parameter, "element index out of range");
    return g.table[a][b];
}

int inverse(const FiniteGroup& g, int x) {
    if (x < 0 || x >= g.order) fail(Err::Parameter, "element index out of range");
    for (int y = 0; y < g.order; ++y)
        if (g.table[x][y] == 0) return y;
    fail(Err::Parameter, "element has no inverse; table is not a group");
}

int element_order(const FiniteGroup& g, int x) {
    if (x < 0 || x >= g.order) fail(Err::Parameter, "element index out of range");
    int acc = x, ord = 1;
    while (acc != 0) {
        acc = g.table[acc][x];
        ++ord;
    }
    return ord;
}

int conjugate_element(const FiniteGroup& g, int by, int x) {
    return g.table[g.table[by][x]][inverse(g, by)];
}

std::vector<int> closure_of(const FiniteGroup& g, std::vector<int> seed) {
    std::vector<char> seen(g.order, 0);
    seen[0] = 1;
    std::vector<int> members{0};
    std::queue<int> work;
    work.push(0);
    for (int s : seed)
        if (s < 0 || s >= g.order) fail(Err::Parameter, "seed element out of range");
    while (!work.empty()) {
        int x = work.front();
        work.pop();
        for (int s : seed) {
            int y = g.table[x][s];
            if (seen[y]) continue;
            seen[y] = 1;
            members.push_back(y);
            work.push(y);
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

bool is_subgroup_set(const FiniteGroup& g, const std::vector<int>& members) {
    if (members.empty()) return false;
    std::vector<char> in(g.order, 0);
    for (int x : members) {
        if (x < 0 || x >= g.order) return false;
        in[x] = 1;
    }
    if (!in[0]) return false;
    for (int a : members)
        for (int b : members)
            if (!in[g.table[a][b]]) return false;
    return true;
}

Subgroup center(const FiniteGroup& g) {
    std::vector<int> members;
    for (int x = 0; x < g.order; ++x) {
        bool central = true;
        for (int y = 0; y < g.order && central; ++y)
            if (g.table[x][y] != g.table[y][x]) central = false;
        if (central) members.push_back(x);
    }
    return Subgroup{&g, members};
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
    std::vector<char> placed(g.order, 0);
    std::vector<std::vector<int>> classes;
    for (int x = 0; x < g.order; ++x) {
        if (placed[x]) continue;
        std::set<int> cls;
        for (int by = 0; by < g.order; ++by) cls.insert(conjugate_element(g, by, x));
        std::vector<int> sorted(cls.begin(), cls.end());
        for (int y : sorted) placed[y] = 1;
        classes.push_back(std::move(sorted));
    }
    return classes;
}

Subgroup commutator_subgroup(const FiniteGroup& g) {
    std::set<int> comms;
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b) {
            int ab = g.table[a][b];
            int ba = g.table[b][a];
            // [a,b] = (ba)^-1 (ab)
            comms.insert(g.table[inverse(g, ba)][ab]);
        }
    return Subgroup{&g, closure_of(g, std::vector<int>(comms.begin(), comms.end()))};
}

bool is_normal(const FiniteGroup& g, const std::vector<int>& members) {
    std::vector<char> in(g.order, 0);
    for (int x : members) in[x] = 1;
    for (int by = 0; by < g.order; ++by)
        for (int x : members)
            if (!in[conjugate_element(g, by, x)]) return false;
    return true;
}

FiniteGroup quotient(const FiniteGroup& g, const Subgroup& n) {
    if (!is_subgroup_set(g, n.members)) fail(Err::NotASubgroup, "coset base is not a subgroup");
    if (!is_normal(g, n.members)) fail(Err::NotNormal, "subgroup is not normal");

    // Left cosets xN, each named by its minimal element index.
    std::vector<int> rep_of(g.order, -1);
    std::vector<int> reps;
    for (int x = 0; x < g.order; ++x) {
        if (rep_of[x] != -1) continue;
        int rep = g.order;
        std::vector<int> coset;
        for (int h : n.members) coset.push_back(g.table[x][h]);
        for (int y : coset) rep = std::min(rep, y);
        for (int y : coset) rep_of[y] = rep;
        reps.push_back(rep);
    }
    std::sort(reps.begin(), reps.end());
    std::map<int, int> coset_index;
    for (std::size_t i = 0; i < reps.size(); ++i) coset_index[reps[i]] = static_cast<int>(i);

    int q = static_cast<int>(reps.size());
    FiniteGroup out;
    out.order = q;
    out.table.assign(q, std::vector<int>(q));
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            out.table[a][b] = coset_index.at(rep_of[g.table[reps[a]][reps[b]]]);
    for (int i = 0; i < q; ++i)
        out.labels.push_back(reps[i] == 0 ? "N" : g.labels[reps[i]] + "N");
    for (int gen : g.generators) {
        int img = coset_index.at(rep_of[gen]);
        if (std::find(out.generators.begin(), out.generators.end(), img) == out.generators.end())
            out.generators.push_back(img);
    }
    out.source = "quotient";
    return out;
}

bool check_relations(const FiniteGroup& g, const std::vector<std::vector<int>>& words) {
    int k = static_cast<int>(g.generators.size());
    bool all_identity = true;
    for (const auto& word : words) {
        int acc = 0;
        for (int letter : word) {
            int idx = letter > 0 ? letter : -letter;
            if (letter == 0 || idx > k)
                fail(Err::BadWord, "word refers to generator " + std::to_string(letter) +
                                       " but the group has " + std::to_string(k));
            int e = g.generators[idx - 1];
            if (letter < 0) e = inverse(g, e);
            acc = g.table[acc][e];
        }
        if (acc != 0) all_identity = false;
    }
    return all_identity;
}

std::string table_violation(const FiniteGroup& g) {
    int n = g.order;
    if (n < 1) return "order must be at least 1";
    if (static_cast<int>(g.labels.size()) != n) return "label count does not match order";
    if (static_cast<int>(g.table.size()) != n) return "table row count does not match order";
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(g.table[a].size()) != n)
            return "table row " + std::to_string(a) + " has the wrong width";
        for (int b = 0; b < n; ++b)
            if (g.table[a][b] < 0 || g.table[a][b] >= n)
                return "table entry out of range at (" + std::to_string(a) + "," +
                       std::to_string(b) + ")";
    }
    for (int x = 0; x < n; ++x) {
        if (g.table[0][x] != x) return "identity row broken at column " + std::to_string(x);
        if (g.table[x][0] != x) return "identity column broken at row " + std::to_string(x);
    }
    for (int a = 0; a < n; ++a) {
        std::vector<char> row(n, 0), col(n, 0);
        for (int b = 0; b < n; ++b) {
            if (row[g.table[a][b]]++) return "row " + std::to_string(a) + " is not a permutation";
            if (col[g.table[b][a]]++)
                return "column " + std::to_string(a) + " is not a permutation";
        }
    }
    if (g.generators.empty()) return "generator list is empty";
    for (int gen : g.generators)
        if (gen < 0 || gen >= n) return "generator index out of range";
    if (static_cast<int>(closure_of(g, g.generators).size()) != n)
        return "generators do not generate the whole group";
    return "";
}

}  // namespace grouplab
