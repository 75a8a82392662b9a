#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "fallcolor/vertex_set.hpp"

namespace fallcolor {

using VertexId = int;

/// Immutable finite simple graph on vertices 0..n-1 with per-vertex
/// neighbor bitsets. Construction enforces n >= 1, symmetry, and the
/// absence of self-loops; everything downstream may rely on that.
class Graph {
public:
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    /// Adjacency rows must already be symmetric and loop-free.
    static Graph from_adjacency(std::vector<VertexSet> rows);

    int vertex_count() const { return n_; }

    bool adjacent(int u, int v) const { return adj_[static_cast<size_t>(u)].test(v); }

    const VertexSet& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }

    int degree(int v) const { return adj_[static_cast<size_t>(v)].count(); }

    long long edge_count() const;
    int min_degree() const;
    int max_degree() const;

    /// Common degree if the graph is regular, -1 otherwise.
    int regular_degree() const;

    bool operator==(const Graph&) const = default;

    uint64_t adjacency_hash() const;

private:
    Graph(int n, std::vector<VertexSet> adj) : n_(n), adj_(std::move(adj)) {}

    int n_ = 0;
    std::vector<VertexSet> adj_;
};

/// Bijection between factor coordinates (x, y) and product vertex ids,
/// row-major in the first factor: id = x * n2 + y.
struct ProductIndexMap {
    int n1 = 0;
    int n2 = 0;

    int pair(int x, int y) const { return x * n2 + y; }
    std::pair<int, int> unpair(int id) const { return {id / n2, id % n2}; }
    int size() const { return n1 * n2; }
};

// Named families.
Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n); // requires n >= 3
Graph complete_graph(int n);

/// Dispatch by family name: path | cycle | complete | empty.
Graph build_named(std::string_view family, int n);

// Derived graphs.
Graph complement(const Graph& g);
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const std::vector<Graph>& parts);
Graph lex_product(const Graph& g, const Graph& h);
Graph cat_product(const Graph& g, const Graph& h);
Graph mycielskian(const Graph& g);
Graph distance2_power(const Graph& g);

/// Maximal connected vertex sets, sorted by minimum vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> original_ids; // subgraph vertex i was original_ids[i] in the host
};

/// Induced subgraph on a nonempty vertex set, renumbered by ascending
/// original id.
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

} // namespace fallcolor
