#include "grouplab/structure.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>

#include "grouplab/digraph_iso.hpp"
#include "grouplab/error.hpp"
#include "grouplab/families.hpp"

namespace grouplab {
namespace {

bool group_abelian(const FiniteGroup& g) {
    for (int a = 0; a < g.order; ++a)
        for (int b = a + 1; b < g.order; ++b)
            if (g.table[a][b] != g.table[b][a]) return false;
    return true;
}

struct Fingerprint {
    int order = 0;
    bool abelian = false;
    std::vector<std::pair<int, int>> histogram;
    int center_size = 0;
    std::vector<int> class_sizes;
    int commutator_size = 0;

    bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const FiniteGroup& g) {
    Fingerprint f;
    f.order = g.order;
    f.abelian = group_abelian(g);
    std::map<int, int> hist;
    for (int x = 0; x < g.order; ++x) ++hist[element_order(g, x)];
    f.histogram.assign(hist.begin(), hist.end());
    f.center_size = center(g).size();
    for (const auto& c : conjugacy_classes(g)) f.class_sizes.push_back(static_cast<int>(c.size()));
    std::sort(f.class_sizes.begin(), f.class_sizes.end());
    f.commutator_size = commutator_subgroup(g).size();
    return f;
}

// Elements whose successive closures reach the whole group, highest order
// first so the sequence stays short.
std::vector<int> generating_sequence(const FiniteGroup& g) {
    std::vector<int> by_order(g.order);
    std::iota(by_order.begin(), by_order.end(), 0);
    std::stable_sort(by_order.begin(), by_order.end(),
                     [&](int x, int y) { return element_order(g, x) > element_order(g, y); });
    std::vector<int> gens;
    std::vector<int> span{0};
    for (int x : by_order) {
        if (static_cast<int>(span.size()) == g.order) break;
        if (std::binary_search(span.begin(), span.end(), x)) continue;
        gens.push_back(x);
        std::vector<int> seed = span;
        seed.push_back(x);
        span = closure_of(g, std::move(seed));
    }
    return gens;
}

// Unique partial homomorphism determined by gen images: breadth-first
// right multiplication from the identity. False on any conflict.
bool induced_map(const FiniteGroup& a, const FiniteGroup& b, const std::vector<int>& gens,
                 const std::vector<int>& images, std::vector<int>& pmap) {
    pmap.assign(a.order, -1);
    std::vector<int> taken(b.order, -1);
    pmap[0] = 0;
    taken[0] = 0;
    std::vector<int> queue{0};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int x = queue[qi];
        for (std::size_t gi = 0; gi < images.size(); ++gi) {
            int y = a.table[x][gens[gi]];
            int w = b.table[pmap[x]][images[gi]];
            if (pmap[y] == -1) {
                if (taken[w] != -1) return false;
                pmap[y] = w;
                taken[w] = y;
                queue.push_back(y);
            } else if (pmap[y] != w) {
                return false;
            }
        }
    }
    return true;
}

bool iso_search(const FiniteGroup& a, const FiniteGroup& b, const std::vector<int>& gens,
                std::vector<int>& images, const std::vector<std::vector<int>>& by_order_b,
                std::vector<int>& pmap) {
    if (images.size() == gens.size()) {
        for (int x = 0; x < a.order; ++x)
            if (pmap[x] == -1) return false;
        // independent full verification of the candidate map
        for (int x = 0; x < a.order; ++x)
            for (int y = 0; y < a.order; ++y)
                if (pmap[a.table[x][y]] != b.table[pmap[x]][pmap[y]]) return false;
        return true;
    }
    int want = element_order(a, gens[images.size()]);
    for (int cand : by_order_b[want]) {
        images.push_back(cand);
        if (induced_map(a, b, gens, images, pmap) &&
            iso_search(a, b, gens, images, by_order_b, pmap))
            return true;
        images.pop_back();
    }
    return false;
}

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

std::uint64_t mask_of(const std::vector<int>& members) {
    std::uint64_t m = 0;
    for (int x : members) m |= std::uint64_t(1) << x;
    return m;
}

std::string fallback_tag(const Fingerprint& f) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(f.order);
    mix(f.abelian);
    for (auto [o, c] : f.histogram) {
        mix(o);
        mix(c);
    }
    mix(f.center_size);
    for (int c : f.class_sizes) mix(c);
    mix(f.commutator_size);
    char buf[17];
    std::snprintf(buf, sizeof buf, "%08llx", static_cast<unsigned long long>(h & 0xffffffffull));
    return "G" + std::to_string(f.order) + "-" + buf;
}

}  // namespace

bool isomorphic(const FiniteGroup& a, const FiniteGroup& b, std::vector<int>* witness) {
    Fingerprint fa = fingerprint(a);
    if (!(fa == fingerprint(b))) return false;
    if (a.order == 1) {
        if (witness) *witness = {0};
        return true;
    }
    std::vector<int> gens = generating_sequence(a);
    std::vector<std::vector<int>> by_order_b(a.order + 1);
    for (int x = 0; x < b.order; ++x) by_order_b[element_order(b, x)].push_back(x);
    std::vector<int> images, pmap;
    if (!iso_search(a, b, gens, images, by_order_b, pmap)) return false;
    if (witness) *witness = pmap;
    return true;
}

std::string iso_label(const FiniteGroup& g) {
    int n = g.order;
    if (n == 1) return "C1";
    int exponent = 1;
    for (int x = 0; x < n; ++x) exponent = std::max(exponent, element_order(g, x));
    if (exponent == n) return "C" + std::to_string(n);

    if (group_abelian(g)) {
        // peel cyclic factors of maximal order; a maximal cyclic subgroup
        // of an abelian group is a direct summand
        std::vector<int> factors;
        FiniteGroup cur = g;
        while (cur.order > 1) {
            int best = 1, gen = 0;
            for (int x = 0; x < cur.order; ++x) {
                int o = element_order(cur, x);
                if (o > best) {
                    best = o;
                    gen = x;
                }
            }
            factors.push_back(best);
            FiniteGroup next = quotient(cur, Subgroup{&cur, closure_of(cur, {gen})});
            cur = std::move(next);
        }
        if (factors == std::vector<int>{2, 2}) return "V4";
        std::string label;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) label += "x";
            label += "C" + std::to_string(factors[i]);
        }
        return label;
    }

    auto same = [&](const FiniteGroup& cand) { return isomorphic(g, cand); };
    if (n % 2 == 0 && n / 2 >= 3 && same(dihedral(n / 2))) return "D" + std::to_string(n / 2);
    if (n % 4 == 0 && n / 2 >= 4 && same(dicyclic(n / 2)))
        return power_of_two(n) ? "Q" + std::to_string(n) : "Dic" + std::to_string(n / 2);
    if (power_of_two(n) && n >= 16) {
        if (same(semidihedral(n / 2))) return "SD" + std::to_string(n / 2);
        if (same(semiabelian(n / 2))) return "SA" + std::to_string(n / 2);
        if (same(diquaternion(n / 4))) return "DQ" + std::to_string(n / 2);
    }
    return fallback_tag(fingerprint(g));
}

std::vector<SplitDecomposition> semidirect_decompositions(const FiniteGroup& g) {
    std::vector<Subgroup> subs = all_subgroups(g);
    std::size_t count = subs.size();
    std::vector<char> normal(count);
    std::vector<std::uint64_t> masks(count);
    for (std::size_t i = 0; i < count; ++i) {
        normal[i] = is_normal(g, subs[i].members);
        masks[i] = mask_of(subs[i].members);
    }

    std::vector<SplitDecomposition> out;
    for (std::size_t i = 0; i < count; ++i) {
        if (!normal[i] || subs[i].size() == 1 || subs[i].size() == g.order) continue;
        for (std::size_t j = 0; j < count; ++j) {
            if (subs[i].size() * subs[j].size() != g.order) continue;
            if (subs[j].size() == 1 || subs[j].size() == g.order) continue;
            if ((masks[i] & masks[j]) != 1) continue;
            bool direct = normal[j] != 0;
            if (direct) {
                // both parts normal lists the pair twice; keep the larger
                // part (lex smaller member list on ties) as the kernel
                if (subs[j].size() > subs[i].size()) continue;
                if (subs[j].size() == subs[i].size() && subs[j].members < subs[i].members) continue;
            }
            out.push_back({subs[i], subs[j], iso_label(subgroup_group(subs[i])),
                           iso_label(subgroup_group(subs[j])), direct});
        }
    }
    std::sort(out.begin(), out.end(), [](const SplitDecomposition& a, const SplitDecomposition& b) {
        if (a.kernel.size() != b.kernel.size()) return a.kernel.size() > b.kernel.size();
        if (a.kernel.members != b.kernel.members) return a.kernel.members < b.kernel.members;
        return a.complement.members < b.complement.members;
    });
    return out;
}

std::vector<CentralProduct> central_product_decompositions(const FiniteGroup& g) {
    std::vector<Subgroup> subs = all_subgroups(g);
    std::size_t count = subs.size();
    std::vector<std::uint64_t> masks(count);
    for (std::size_t i = 0; i < count; ++i) masks[i] = mask_of(subs[i].members);

    auto commute_elementwise = [&](const Subgroup& h, const Subgroup& k) {
        for (int x : h.members)
            for (int y : k.members)
                if (g.table[x][y] != g.table[y][x]) return false;
        return true;
    };

    std::vector<CentralProduct> out;
    for (std::size_t i = 0; i < count; ++i) {
        if (subs[i].size() == g.order) continue;
        for (std::size_t j = i + 1; j < count; ++j) {
            if (subs[j].size() == g.order) continue;
            int overlap = std::popcount(masks[i] & masks[j]);
            if (overlap < 2) continue;
            if (subs[i].size() * subs[j].size() != g.order * overlap) continue;
            if (!commute_elementwise(subs[i], subs[j])) continue;
            // elementwise commuting makes the product a subgroup of the
            // right size, hence all of g, and pins the overlap central
            const Subgroup& big = subs[i].size() == subs[j].size() ? subs[i] : subs[j];
            const Subgroup& small = subs[i].size() == subs[j].size() ? subs[j] : subs[i];
            out.push_back({big, small, iso_label(subgroup_group(big)),
                           iso_label(subgroup_group(small)), overlap});
        }
    }
    std::sort(out.begin(), out.end(), [](const CentralProduct& a, const CentralProduct& b) {
        if (a.left.size() != b.left.size()) return a.left.size() > b.left.size();
        if (a.left.members != b.left.members) return a.left.members < b.left.members;
        return a.right.members < b.right.members;
    });
    return out;
}

ReducedLattice reduced_lattice(const FiniteGroup& g) {
    Lattice l = subgroup_lattice(g);
    ReducedLattice r;
    r.classes = subgroup_conjugacy_classes(g, l.nodes);
    int c = static_cast<int>(r.classes.size());
    for (const std::vector<int>& cls : r.classes) {
        r.sizes.push_back(l.nodes[cls[0]].size());
        r.labels.push_back(iso_label(subgroup_group(l.nodes[cls[0]])));
    }

    std::vector<std::uint64_t> masks(l.nodes.size());
    for (std::size_t i = 0; i < l.nodes.size(); ++i) masks[i] = mask_of(l.nodes[i].members);
    auto leq = [&](int ca, int cb) {
        if (ca == cb) return false;
        for (int a : r.classes[ca])
            for (int b : r.classes[cb])
                if ((masks[a] & masks[b]) == masks[a] && masks[a] != masks[b]) return true;
        return false;
    };
    for (int a = 0; a < c; ++a)
        for (int b = 0; b < c; ++b) {
            if (!leq(a, b)) continue;
            bool through = false;
            for (int k = 0; k < c && !through; ++k)
                if (leq(a, k) && leq(k, b)) through = true;
            if (!through) r.edges.emplace_back(a, b);
        }
    std::sort(r.edges.begin(), r.edges.end());
    return r;
}

CycleGraph cycle_graph(const FiniteGroup& g) {
    int n = g.order;
    std::vector<std::vector<int>> orbit(n), sorted(n);
    for (int x = 0; x < n; ++x) {
        int cur = 0;
        do {
            orbit[x].push_back(cur);
            cur = g.table[cur][x];
        } while (cur != 0);
        sorted[x] = orbit[x];
        std::sort(sorted[x].begin(), sorted[x].end());
    }

    CycleGraph cg;
    cg.vertices = n;
    std::set<std::vector<int>> emitted;
    for (int x = 0; x < n; ++x) {
        if (emitted.count(sorted[x])) continue;
        bool maximal = true;
        for (int y = 0; y < n && maximal; ++y)
            if (sorted[y].size() > sorted[x].size() &&
                std::includes(sorted[y].begin(), sorted[y].end(), sorted[x].begin(),
                              sorted[x].end()))
                maximal = false;
        if (!maximal) continue;
        emitted.insert(sorted[x]);
        cg.cycles.push_back(orbit[x]);
        int k = static_cast<int>(orbit[x].size());
        if (k == 2) {
            cg.edges.emplace_back(0, x);
        } else if (k >= 3) {
            for (int i = 0; i < k; ++i) {
                int u = orbit[x][i], v = orbit[x][(i + 1) % k];
                cg.edges.emplace_back(std::min(u, v), std::max(u, v));
            }
        }
    }
    std::sort(cg.edges.begin(), cg.edges.end());
    return cg;
}

bool cycle_graphs_isomorphic(const CycleGraph& a, const CycleGraph& b,
                             std::vector<int>* witness) {
    if (a.vertices != b.vertices || a.edges.size() != b.edges.size()) return false;
    auto digraph = [](const CycleGraph& cg) {
        WeightedDigraph d;
        d.n = cg.vertices;
        d.w.assign(d.n, std::vector<int>(d.n, 0));
        for (auto [u, v] : cg.edges) d.w[u][v] = d.w[v][u] = 1;
        return d;
    };
    return digraphs_isomorphic(digraph(a), digraph(b), witness);
}

}  // namespace grouplab
