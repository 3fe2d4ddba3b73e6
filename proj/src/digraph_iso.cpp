#include "grouplab/digraph_iso.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <utility>

namespace grouplab {
namespace {

using Signature = std::tuple<int, std::vector<std::pair<int, int>>, std::vector<std::pair<int, int>>>;

// Joint color refinement over the disjoint union of a and b, so the color
// ids of the two vertex sets are directly comparable. Returns colors for
// a's vertices followed by b's.
std::vector<int> refine_colors(const WeightedDigraph& a, const WeightedDigraph& b) {
    int total = a.n + b.n;
    auto graph_of = [&](int v) -> const WeightedDigraph& { return v < a.n ? a : b; };
    auto local = [&](int v) { return v < a.n ? v : v - a.n; };

    std::vector<int> color(total, 0);
    {
        std::map<long long, int> ids;
        for (int v = 0; v < total; ++v) {
            const WeightedDigraph& g = graph_of(v);
            long long inv = g.node_invariant.empty() ? 0 : g.node_invariant[local(v)];
            auto it = ids.emplace(inv, static_cast<int>(ids.size())).first;
            color[v] = it->second;
        }
    }

    std::size_t classes = 0;
    for (int round = 0; round < total; ++round) {
        std::map<Signature, int> ids;
        std::vector<int> next(total);
        for (int v = 0; v < total; ++v) {
            const WeightedDigraph& g = graph_of(v);
            int lv = local(v);
            int base = v < a.n ? 0 : a.n;
            std::vector<std::pair<int, int>> out, in;
            for (int u = 0; u < g.n; ++u) {
                if (g.w[lv][u]) out.emplace_back(g.w[lv][u], color[base + u]);
                if (g.w[u][lv]) in.emplace_back(g.w[u][lv], color[base + u]);
            }
            std::sort(out.begin(), out.end());
            std::sort(in.begin(), in.end());
            Signature sig{color[v], std::move(out), std::move(in)};
            auto it = ids.emplace(std::move(sig), static_cast<int>(ids.size())).first;
            next[v] = it->second;
        }
        color.swap(next);
        if (ids.size() == classes) break;
        classes = ids.size();
    }
    return color;
}

struct Matcher {
    const WeightedDigraph& a;
    const WeightedDigraph& b;
    std::vector<int> color_a, color_b;
    std::vector<std::vector<int>> candidates;  // per a-vertex, b-vertices of same color
    std::vector<int> order;                    // a-vertices, most constrained first
    std::vector<int> map;
    std::vector<char> used;
    bool count_all = false;
    long long count = 0;
    std::vector<char>* moved = nullptr;
    std::vector<int>* witness = nullptr;

    Matcher(const WeightedDigraph& a_, const WeightedDigraph& b_) : a(a_), b(b_) {}

    bool prepare() {
        if (a.n != b.n) return false;
        std::vector<int> joint = refine_colors(a, b);
        color_a.assign(joint.begin(), joint.begin() + a.n);
        color_b.assign(joint.begin() + a.n, joint.end());
        std::map<int, int> hist_a, hist_b;
        for (int c : color_a) ++hist_a[c];
        for (int c : color_b) ++hist_b[c];
        if (hist_a != hist_b) return false;

        candidates.assign(a.n, {});
        for (int v = 0; v < a.n; ++v)
            for (int u = 0; u < b.n; ++u)
                if (color_a[v] == color_b[u]) candidates[v].push_back(u);
        order.resize(a.n);
        for (int v = 0; v < a.n; ++v) order[v] = v;
        std::sort(order.begin(), order.end(), [&](int x, int y) {
            if (candidates[x].size() != candidates[y].size())
                return candidates[x].size() < candidates[y].size();
            return x < y;
        });
        map.assign(a.n, -1);
        used.assign(b.n, 0);
        return true;
    }

    bool consistent(int v, int u) const {
        for (int i = 0; i < a.n; ++i) {
            if (map[i] < 0) continue;
            if (a.w[v][i] != b.w[u][map[i]]) return false;
            if (a.w[i][v] != b.w[map[i]][u]) return false;
        }
        return true;
    }

    // Returns true to stop the search (first-match mode).
    bool search(int depth) {
        if (depth == a.n) {
            if (count_all) {
                ++count;
                if (moved)
                    for (int v = 0; v < a.n; ++v)
                        if (map[v] != v) (*moved)[v] = 1;
                return false;
            }
            if (witness) *witness = map;
            return true;
        }
        int v = order[depth];
        for (int u : candidates[v]) {
            if (used[u] || !consistent(v, u)) continue;
            map[v] = u;
            used[u] = 1;
            if (search(depth + 1)) return true;
            map[v] = -1;
            used[u] = 0;
        }
        return false;
    }
};

}  // namespace

long long automorphism_census(const WeightedDigraph& g, std::vector<char>* moved) {
    Matcher m(g, g);
    if (moved) moved->assign(g.n, 0);
    if (!m.prepare()) return 0;
    m.count_all = true;
    m.moved = moved;
    m.search(0);
    return m.count;
}

bool digraphs_isomorphic(const WeightedDigraph& a, const WeightedDigraph& b,
                         std::vector<int>* witness) {
    Matcher m(a, b);
    if (!m.prepare()) return false;
    m.witness = witness;
    return m.search(0);
}

}  // namespace grouplab
