#pragma once

#include <cstdint>
#include <vector>

#include "twodist/graph.hpp"

namespace twodist {

/// Upper-triangle adjacency bits of the canonically relabeled graph, packed
/// LSB-first in column-major pair order. Two graphs are isomorphic iff their
/// forms are equal.
struct CanonicalForm {
    int n = 0;
    std::vector<std::uint64_t> bits;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Canonical form via individualization-refinement with automorphism pruning.
CanonicalForm canonical_form(const Graph& g);

/// FNV-1a over the canonical form. Equal for isomorphic graphs; collisions
/// between non-isomorphic graphs are possible, the form itself is the arbiter.
std::uint64_t canonical_hash(const Graph& g);

/// The graph realized by the canonical labeling.
Graph canonical_relabel(const Graph& g);

/// Canonical representatives of all graphs on exactly n vertices, generated
/// by one-vertex extension with canonical deduplication. Deterministic order.
std::vector<Graph> nonisomorphic_graphs(int n);

/// Same, for every order 1..max_n (index 0 unused).
std::vector<std::vector<Graph>> nonisomorphic_graphs_up_to(int max_n);

}  // namespace twodist
