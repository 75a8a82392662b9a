#include "fallcolor/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "fallcolor/errors.hpp"

namespace fallcolor {

namespace {

void require_positive_order(int n) {
    if (n < 1) throw InvalidArgument("graph must have at least one vertex, got n=" + std::to_string(n));
}

std::vector<VertexSet> blank_rows(int n) {
    return std::vector<VertexSet>(static_cast<size_t>(n), VertexSet(n));
}

} // namespace

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    require_positive_order(n);
    auto rows = blank_rows(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InvalidArgument("edge endpoint out of range: {" + std::to_string(u) + "," + std::to_string(v) + "}");
        if (u == v)
            throw InvalidArgument("self-loop rejected at vertex " + std::to_string(u));
        rows[static_cast<size_t>(u)].set(v);
        rows[static_cast<size_t>(v)].set(u);
    }
    return Graph(n, std::move(rows));
}

Graph Graph::from_adjacency(std::vector<VertexSet> rows) {
    const int n = static_cast<int>(rows.size());
    require_positive_order(n);
    for (int v = 0; v < n; ++v) {
        if (rows[static_cast<size_t>(v)].capacity() != n)
            throw InvalidArgument("adjacency row capacity mismatch");
        if (rows[static_cast<size_t>(v)].test(v))
            throw InvalidArgument("self-loop rejected at vertex " + std::to_string(v));
    }
    for (int u = 0; u < n; ++u)
        rows[static_cast<size_t>(u)].for_each([&](int v) {
            if (!rows[static_cast<size_t>(v)].test(u))
                throw InvalidArgument("asymmetric adjacency between " + std::to_string(u) + " and " + std::to_string(v));
        });
    return Graph(n, std::move(rows));
}

long long Graph::edge_count() const {
    long long twice = 0;
    for (const auto& row : adj_) twice += row.count();
    return twice / 2;
}

int Graph::min_degree() const {
    int d = degree(0);
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = degree(0);
    for (int v = 1; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

int Graph::regular_degree() const {
    const int d = degree(0);
    for (int v = 1; v < n_; ++v)
        if (degree(v) != d) return -1;
    return d;
}

uint64_t Graph::adjacency_hash() const {
    uint64_t h = 0x243f6a8885a308d3ull ^ static_cast<uint64_t>(n_);
    for (const auto& row : adj_) h ^= row.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

Graph empty_graph(int n) {
    require_positive_order(n);
    return Graph::from_edges(n, {});
}

Graph path_graph(int n) {
    require_positive_order(n);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw InvalidArgument("cycle requires n >= 3, got n=" + std::to_string(n));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
    require_positive_order(n);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

Graph build_named(std::string_view family, int n) {
    if (family == "path") return path_graph(n);
    if (family == "cycle") return cycle_graph(n);
    if (family == "complete") return complete_graph(n);
    if (family == "empty") return empty_graph(n);
    throw InvalidArgument("unknown graph family: " + std::string(family));
}

Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<VertexSet> rows(static_cast<size_t>(n), VertexSet(n));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && !g.adjacent(u, v)) rows[static_cast<size_t>(u)].set(v);
    return Graph::from_adjacency(std::move(rows));
}

Graph join(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count();
    const int nh = h.vertex_count();
    const int n = ng + nh;
    std::vector<VertexSet> rows(static_cast<size_t>(n), VertexSet(n));
    for (int u = 0; u < ng; ++u)
        g.neighbors(u).for_each([&](int v) { rows[static_cast<size_t>(u)].set(v); });
    for (int u = 0; u < nh; ++u)
        h.neighbors(u).for_each([&](int v) { rows[static_cast<size_t>(ng + u)].set(ng + v); });
    for (int u = 0; u < ng; ++u)
        for (int v = ng; v < n; ++v) {
            rows[static_cast<size_t>(u)].set(v);
            rows[static_cast<size_t>(v)].set(u);
        }
    return Graph::from_adjacency(std::move(rows));
}

Graph disjoint_union(const std::vector<Graph>& parts) {
    if (parts.empty()) throw InvalidArgument("disjoint_union of an empty list");
    int n = 0;
    for (const auto& p : parts) n += p.vertex_count();
    std::vector<VertexSet> rows(static_cast<size_t>(n), VertexSet(n));
    int offset = 0;
    for (const auto& p : parts) {
        for (int u = 0; u < p.vertex_count(); ++u)
            p.neighbors(u).for_each([&](int v) { rows[static_cast<size_t>(offset + u)].set(offset + v); });
        offset += p.vertex_count();
    }
    return Graph::from_adjacency(std::move(rows));
}

Graph lex_product(const Graph& g, const Graph& h) {
    const ProductIndexMap idx{g.vertex_count(), h.vertex_count()};
    const int n = idx.size();
    std::vector<VertexSet> rows(static_cast<size_t>(n), VertexSet(n));
    for (int x1 = 0; x1 < idx.n1; ++x1)
        for (int y1 = 0; y1 < idx.n2; ++y1) {
            auto& row = rows[static_cast<size_t>(idx.pair(x1, y1))];
            g.neighbors(x1).for_each([&](int x2) {
                for (int y2 = 0; y2 < idx.n2; ++y2) row.set(idx.pair(x2, y2));
            });
            h.neighbors(y1).for_each([&](int y2) { row.set(idx.pair(x1, y2)); });
        }
    return Graph::from_adjacency(std::move(rows));
}

Graph cat_product(const Graph& g, const Graph& h) {
    const ProductIndexMap idx{g.vertex_count(), h.vertex_count()};
    const int n = idx.size();
    std::vector<VertexSet> rows(static_cast<size_t>(n), VertexSet(n));
    for (int x1 = 0; x1 < idx.n1; ++x1)
        for (int y1 = 0; y1 < idx.n2; ++y1) {
            auto& row = rows[static_cast<size_t>(idx.pair(x1, y1))];
            g.neighbors(x1).for_each([&](int x2) {
                h.neighbors(y1).for_each([&](int y2) { row.set(idx.pair(x2, y2)); });
            });
        }
    return Graph::from_adjacency(std::move(rows));
}

Graph mycielskian(const Graph& g) {
    // Vertices: originals x_0..x_{n-1}, shadows y_i = n+i, apex z = 2n.
    const int n = g.vertex_count();
    const int m = 2 * n + 1;
    std::vector<VertexSet> rows(static_cast<size_t>(m), VertexSet(m));
    for (int u = 0; u < n; ++u)
        g.neighbors(u).for_each([&](int v) {
            rows[static_cast<size_t>(u)].set(v);
            rows[static_cast<size_t>(n + u)].set(v);
            rows[static_cast<size_t>(v)].set(n + u);
        });
    for (int i = 0; i < n; ++i) {
        rows[static_cast<size_t>(n + i)].set(2 * n);
        rows[static_cast<size_t>(2 * n)].set(n + i);
    }
    return Graph::from_adjacency(std::move(rows));
}

Graph distance2_power(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<VertexSet> rows(static_cast<size_t>(n), VertexSet(n));
    for (int v = 0; v < n; ++v) {
        VertexSet reach = g.neighbors(v);
        g.neighbors(v).for_each([&](int u) { reach |= g.neighbors(u); });
        reach.reset(v);
        rows[static_cast<size_t>(v)] = reach;
    }
    return Graph::from_adjacency(std::move(rows));
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<bool> seen(static_cast<size_t>(n), false);
    std::vector<std::vector<int>> comps;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        std::vector<int> comp;
        stack.push_back(s);
        seen[static_cast<size_t>(s)] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            g.neighbors(v).for_each([&](int u) {
                if (!seen[static_cast<size_t>(u)]) {
                    seen[static_cast<size_t>(u)] = true;
                    stack.push_back(u);
                }
            });
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    if (vertices.empty()) throw InvalidArgument("induced_subgraph on an empty vertex set");
    std::vector<int> ids = vertices;
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (ids.front() < 0 || ids.back() >= g.vertex_count())
        throw InvalidArgument("induced_subgraph vertex out of range");

    const int m = static_cast<int>(ids.size());
    std::vector<int> position(static_cast<size_t>(g.vertex_count()), -1);
    for (int i = 0; i < m; ++i) position[static_cast<size_t>(ids[static_cast<size_t>(i)])] = i;

    std::vector<VertexSet> rows(static_cast<size_t>(m), VertexSet(m));
    for (int i = 0; i < m; ++i)
        g.neighbors(ids[static_cast<size_t>(i)]).for_each([&](int v) {
            int j = position[static_cast<size_t>(v)];
            if (j >= 0) rows[static_cast<size_t>(i)].set(j);
        });
    return {Graph::from_adjacency(std::move(rows)), std::move(ids)};
}

} // namespace fallcolor
