#include "twodist/graph.hpp"

#include <algorithm>
#include <bit>

namespace twodist {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.set_edge(u, v, true);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return (row(u)[v >> 6] >> (v & 63)) & 1;
}

void Graph::set_edge(int u, int v, bool present) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    const std::uint64_t mu = std::uint64_t{1} << (v & 63);
    const std::uint64_t mv = std::uint64_t{1} << (u & 63);
    std::uint64_t* ru = bits_.data() + static_cast<std::size_t>(u) * words_;
    std::uint64_t* rv = bits_.data() + static_cast<std::size_t>(v) * words_;
    if (present) {
        ru[v >> 6] |= mu;
        rv[u >> 6] |= mv;
    } else {
        ru[v >> 6] &= ~mu;
        rv[u >> 6] &= ~mv;
    }
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

long Graph::edge_count() const {
    long total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

Graph Graph::with_edge(int u, int v, bool present) const {
    Graph g = *this;
    g.set_edge(u, v, present);
    return g;
}

Graph Graph::complement() const {
    Graph g(n_);
    for (int v = 0; v < n_; ++v) {
        const std::uint64_t* src = row(v);
        std::uint64_t* dst = g.bits_.data() + static_cast<std::size_t>(v) * words_;
        for (int w = 0; w < words_; ++w) dst[w] = ~src[w];
        // clear the diagonal bit and bits beyond n-1
        dst[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
        const int tail = n_ & 63;
        if (tail) dst[words_ - 1] &= (std::uint64_t{1} << tail) - 1;
    }
    return g;
}

Graph complement(const Graph& g) { return g.complement(); }

int CliquePartition::vertex_count() const {
    int n = 0;
    for (const auto& b : blocks) n += static_cast<int>(b.size());
    return n;
}

bool CliquePartition::valid_for(const Graph& g) const {
    std::vector<char> seen(g.vertex_count(), 0);
    for (const auto& b : blocks) {
        if (b.empty()) return false;
        for (std::size_t i = 0; i < b.size(); ++i) {
            int v = b[i];
            if (v < 0 || v >= g.vertex_count() || seen[v]) return false;
            seen[v] = 1;
            for (std::size_t j = i + 1; j < b.size(); ++j)
                if (!g.has_edge(v, b[j])) return false;
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        stack.push_back(s);
        comp[s] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (int u = 0; u < n; ++u)
                if (comp[u] < 0 && g.has_edge(v, u)) {
                    comp[u] = id;
                    stack.push_back(u);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

std::optional<CliquePartition> disjoint_clique_partition(const Graph& g) {
    auto comps = connected_components(g);
    for (const auto& c : comps)
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j)
                if (!g.has_edge(c[i], c[j])) return std::nullopt;
    return CliquePartition{std::move(comps)};
}

bool is_complete_multipartite(const Graph& g) {
    return disjoint_clique_partition(g.complement()).has_value();
}

Graph complete_graph(int n) {
    Graph e(n);
    return e.complement();
}

Graph empty_graph(int n) { return Graph(n); }

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    if (n == 1) edges.clear();
    if (n == 2) edges.resize(1);
    return Graph::from_edges(n, edges);
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    const int na = a.vertex_count();
    auto edges = a.edges();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + na, v + na);
    return Graph::from_edges(na + b.vertex_count(), edges);
}

Graph complete_multipartite_graph(const std::vector<int>& part_sizes) {
    std::vector<std::vector<int>> blocks;
    int v = 0;
    for (int s : part_sizes) {
        std::vector<int> b(s);
        for (int i = 0; i < s; ++i) b[i] = v++;
        blocks.push_back(std::move(b));
    }
    return partition_base_graph(CliquePartition{blocks}).complement();
}

Graph partition_base_graph(const CliquePartition& c0) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& b : c0.blocks)
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i + 1; j < b.size(); ++j) edges.emplace_back(b[i], b[j]);
    return Graph::from_edges(c0.vertex_count(), edges);
}

}  // namespace twodist
