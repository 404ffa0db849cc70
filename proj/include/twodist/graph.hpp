#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace twodist {

/// Simple undirected graph on dense vertices 0..n-1.
///
/// Adjacency is stored as a packed symmetric bitset (one row of ceil(n/64)
/// words per vertex). Instances are value types, immutable through the public
/// API, and safe to share across threads.
class Graph {
public:
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    bool has_edge(int u, int v) const;
    int degree(int v) const;
    long edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    /// Copy with edge {u,v} set/cleared. u != v required.
    Graph with_edge(int u, int v, bool present) const;

    Graph complement() const;

    /// Row v as packed bits; words_per_row() words.
    const std::uint64_t* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }
    int words_per_row() const { return words_; }

    bool operator==(const Graph&) const = default;

private:
    void set_edge(int u, int v, bool present);
    void check_vertex(int v) const;

    int n_;
    int words_;
    std::vector<std::uint64_t> bits_;
};

/// Partition of the vertex set into blocks, each inducing a clique.
struct CliquePartition {
    std::vector<std::vector<int>> blocks;

    int block_count() const { return static_cast<int>(blocks.size()); }
    int vertex_count() const;
    bool valid_for(const Graph& g) const;  // disjoint, covering, every block a clique
};

Graph complement(const Graph& g);

std::vector<std::vector<int>> connected_components(const Graph& g);

/// The unique partition into cliques when every connected component is
/// complete; empty otherwise.
std::optional<CliquePartition> disjoint_clique_partition(const Graph& g);

/// True iff the complement is a disjoint union of cliques.
bool is_complete_multipartite(const Graph& g);

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph complete_multipartite_graph(const std::vector<int>& part_sizes);

/// Graph with intra-block edges of the partition and nothing else.
Graph partition_base_graph(const CliquePartition& c0);

}  // namespace twodist
