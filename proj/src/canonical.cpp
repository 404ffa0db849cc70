#include "twodist/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace twodist {

namespace {

// Ordered partition of 0..n-1. Cell order is maintained invariantly under
// relabeling: refinement splits cells in place and orders sub-cells by
// signature, so "first smallest non-singleton cell" is a canonical choice.
using Partition = std::vector<std::vector<int>>;

std::vector<int> cell_index_of(const Partition& cells, int n) {
    std::vector<int> color(n, -1);
    for (int c = 0; c < static_cast<int>(cells.size()); ++c)
        for (int v : cells[c]) color[v] = c;
    return color;
}

// Equitable refinement: split every cell by the histogram of neighbor colors
// until stable.
void refine(const Graph& g, Partition& cells) {
    const int n = g.vertex_count();
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> color = cell_index_of(cells, n);
        Partition next;
        next.reserve(cells.size());
        for (const auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::map<std::vector<int>, std::vector<int>> split;
            for (int v : cell) {
                std::vector<int> sig(cells.size(), 0);
                for (int u = 0; u < n; ++u)
                    if (g.has_edge(v, u)) ++sig[color[u]];
                split[sig].push_back(v);
            }
            if (split.size() > 1) changed = true;
            for (auto& [sig, verts] : split) next.push_back(std::move(verts));
        }
        cells = std::move(next);
    }
}

CanonicalForm form_under_order(const Graph& g, const std::vector<int>& order) {
    const int n = g.vertex_count();
    CanonicalForm f;
    f.n = n;
    const int pairs = n * (n - 1) / 2;
    f.bits.assign((pairs + 63) / 64, 0);
    int idx = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++idx)
            if (g.has_edge(order[i], order[j])) f.bits[idx >> 6] |= std::uint64_t{1} << (idx & 63);
    return f;
}

struct CanonSearch {
    const Graph& g;
    int n;
    bool have_best = false;
    CanonicalForm best;
    std::vector<int> best_order;
    bool have_first = false;
    CanonicalForm first;
    std::vector<int> first_order;
    std::vector<std::vector<int>> automorphisms;
    long leaves = 0;

    explicit CanonSearch(const Graph& graph) : g(graph), n(graph.vertex_count()) {}

    // sigma(order_a[i]) = order_b[i] is an automorphism when both orders
    // realize the same form.
    static std::vector<int> perm_between(const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> sigma(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) sigma[a[i]] = b[i];
        return sigma;
    }

    void leaf(const Partition& cells) {
        if (++leaves > 2'000'000) throw std::runtime_error("canonical labeling search exploded");
        std::vector<int> order;
        order.reserve(n);
        for (const auto& c : cells) order.push_back(c[0]);
        CanonicalForm f = form_under_order(g, order);
        if (!have_first) {
            have_first = true;
            first = f;
            first_order = order;
        } else if (f == first) {
            automorphisms.push_back(perm_between(first_order, order));
        }
        if (!have_best || f < best) {
            have_best = true;
            best = std::move(f);
            best_order = std::move(order);
        } else if (f == best && order != best_order) {
            automorphisms.push_back(perm_between(best_order, order));
        }
    }

    // Orbit of u under the discovered automorphisms that fix `fixed` pointwise.
    std::vector<char> orbit_of(int u, const std::vector<int>& fixed) const {
        std::vector<const std::vector<int>*> gens;
        for (const auto& sigma : automorphisms) {
            bool ok = true;
            for (int w : fixed)
                if (sigma[w] != w) {
                    ok = false;
                    break;
                }
            if (ok) gens.push_back(&sigma);
        }
        std::vector<char> in_orbit(n, 0);
        std::vector<int> stack{u};
        in_orbit[u] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const auto* sigma : gens) {
                int w = (*sigma)[v];
                if (!in_orbit[w]) {
                    in_orbit[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        return in_orbit;
    }

    void explore(Partition cells, std::vector<int>& fixed) {
        refine(g, cells);
        int target = -1;
        for (std::size_t c = 0; c < cells.size(); ++c)
            if (cells[c].size() > 1 &&
                (target < 0 || cells[c].size() < cells[target].size()))
                target = static_cast<int>(c);
        if (target < 0) {
            leaf(cells);
            return;
        }
        std::vector<int> cell = cells[target];
        std::sort(cell.begin(), cell.end());
        std::vector<int> tried;
        for (int v : cell) {
            bool pruned = false;
            for (int u : tried) {
                auto orbit = orbit_of(u, fixed);
                if (orbit[v]) {
                    pruned = true;
                    break;
                }
            }
            if (pruned) continue;
            tried.push_back(v);
            Partition child;
            child.reserve(cells.size() + 1);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (static_cast<int>(c) != target) {
                    child.push_back(cells[c]);
                    continue;
                }
                child.push_back({v});
                std::vector<int> rest;
                for (int w : cells[c])
                    if (w != v) rest.push_back(w);
                child.push_back(std::move(rest));
            }
            fixed.push_back(v);
            explore(std::move(child), fixed);
            fixed.pop_back();
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    CanonSearch search(g);
    Partition initial{std::vector<int>(g.vertex_count())};
    std::iota(initial[0].begin(), initial[0].end(), 0);
    std::vector<int> fixed;
    search.explore(std::move(initial), fixed);
    return search.best;
}

std::uint64_t canonical_hash(const Graph& g) {
    CanonicalForm f = canonical_form(g);
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&h](std::uint64_t x) {
        for (int b = 0; b < 8; ++b) {
            h ^= (x >> (8 * b)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(static_cast<std::uint64_t>(f.n));
    for (std::uint64_t w : f.bits) mix(w);
    return h;
}

Graph canonical_relabel(const Graph& g) {
    CanonicalForm f = canonical_form(g);
    Graph out(f.n);
    std::vector<std::pair<int, int>> edges;
    int idx = 0;
    for (int j = 1; j < f.n; ++j)
        for (int i = 0; i < j; ++i, ++idx)
            if ((f.bits[idx >> 6] >> (idx & 63)) & 1) edges.emplace_back(i, j);
    return Graph::from_edges(f.n, edges);
}

std::vector<std::vector<Graph>> nonisomorphic_graphs_up_to(int max_n) {
    if (max_n < 1 || max_n > 12) throw std::invalid_argument("enumeration supported for 1..12 vertices");
    std::vector<std::vector<Graph>> levels(max_n + 1);
    levels[1] = {Graph(1)};
    for (int n = 2; n <= max_n; ++n) {
        std::map<CanonicalForm, Graph> seen;
        for (const Graph& h : levels[n - 1]) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
                auto edges = h.edges();
                for (int v = 0; v < n - 1; ++v)
                    if ((mask >> v) & 1) edges.emplace_back(v, n - 1);
                Graph candidate = Graph::from_edges(n, edges);
                CanonicalForm f = canonical_form(candidate);
                seen.try_emplace(std::move(f), canonical_relabel(candidate));
            }
        }
        levels[n].reserve(seen.size());
        for (auto& [f, graph] : seen) levels[n].push_back(graph);
    }
    return levels;
}

std::vector<Graph> nonisomorphic_graphs(int n) {
    return nonisomorphic_graphs_up_to(n)[n];
}

}  // namespace twodist
