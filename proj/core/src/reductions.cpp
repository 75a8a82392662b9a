#include "fallcolor/reductions.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <string>

#include "fallcolor/errors.hpp"

namespace fallcolor {

namespace {

unsigned long long binomial_saturating(int n, int k) {
    if (k < 0 || k > n) return 0;
    unsigned long long r = 1;
    for (int i = 1; i <= k; ++i) {
        const unsigned long long cap = std::numeric_limits<unsigned long long>::max() / static_cast<unsigned long long>(n);
        if (r > cap) return std::numeric_limits<unsigned long long>::max();
        r = r * static_cast<unsigned long long>(n - k + i) / static_cast<unsigned long long>(i);
    }
    return r;
}

std::vector<uint64_t> adjacency_key(const Graph& g) {
    std::vector<uint64_t> key;
    for (int v = 0; v < g.vertex_count(); ++v)
        for (uint64_t w : g.neighbors(v).words()) key.push_back(w);
    return key;
}

} // namespace

GhatFamily::GhatFamily(const Graph& g, int t) : g_(g), t_(t) {
    if (t < 1 || t > g.min_degree() + 1)
        throw InvalidArgument("ghat_family needs 1 <= t <= min_degree+1, got t=" + std::to_string(t));
    const int n = g.vertex_count();
    neighbor_list_.resize(static_cast<size_t>(n));
    pick_.resize(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        neighbor_list_[static_cast<size_t>(v)] = g.neighbors(v).to_vector();
        pick_[static_cast<size_t>(v)].resize(static_cast<size_t>(t - 1));
        for (int i = 0; i < t - 1; ++i) pick_[static_cast<size_t>(v)][static_cast<size_t>(i)] = i;
    }
}

unsigned long long GhatFamily::tuple_count() const {
    unsigned long long total = 1;
    for (int v = 0; v < g_.vertex_count(); ++v) {
        const unsigned long long c = binomial_saturating(g_.degree(v), t_ - 1);
        if (c != 0 && total > std::numeric_limits<unsigned long long>::max() / c)
            return std::numeric_limits<unsigned long long>::max();
        total *= c;
    }
    return total;
}

Graph GhatFamily::materialize() const {
    const int n = g_.vertex_count();
    std::vector<VertexSet> rows(static_cast<size_t>(n), VertexSet(n));
    for (int v = 0; v < n; ++v) rows[static_cast<size_t>(v)] = g_.neighbors(v);
    for (int v = 0; v < n; ++v) {
        const auto& nbrs = neighbor_list_[static_cast<size_t>(v)];
        const auto& pick = pick_[static_cast<size_t>(v)];
        for (size_t i = 0; i < pick.size(); ++i)
            for (size_t j = i + 1; j < pick.size(); ++j) {
                const int a = nbrs[static_cast<size_t>(pick[i])];
                const int b = nbrs[static_cast<size_t>(pick[j])];
                rows[static_cast<size_t>(a)].set(b);
                rows[static_cast<size_t>(b)].set(a);
            }
    }
    return Graph::from_adjacency(std::move(rows));
}

bool GhatFamily::advance() {
    // Odometer over vertices, last vertex fastest; each digit runs through
    // the (t-1)-subsets of that vertex's neighbors in lexicographic order.
    for (int v = g_.vertex_count() - 1; v >= 0; --v) {
        auto& pick = pick_[static_cast<size_t>(v)];
        const int deg = static_cast<int>(neighbor_list_[static_cast<size_t>(v)].size());
        const int m = static_cast<int>(pick.size());
        int i = m - 1;
        while (i >= 0 && pick[static_cast<size_t>(i)] == deg - m + i) --i;
        if (i >= 0) {
            ++pick[static_cast<size_t>(i)];
            for (int j = i + 1; j < m; ++j) pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(i)] + (j - i);
            return true;
        }
        for (int j = 0; j < m; ++j) pick[static_cast<size_t>(j)] = j; // wrap and carry
    }
    return false;
}

bool GhatFamily::next(Graph& out, std::vector<std::vector<int>>* choice) {
    if (exhausted_) return false;
    if (started_ && !advance()) {
        exhausted_ = true;
        return false;
    }
    started_ = true;
    out = materialize();
    if (choice) {
        choice->clear();
        for (int v = 0; v < g_.vertex_count(); ++v) {
            std::vector<int> chosen;
            for (int idx : pick_[static_cast<size_t>(v)])
                chosen.push_back(neighbor_list_[static_cast<size_t>(v)][static_cast<size_t>(idx)]);
            choice->push_back(std::move(chosen));
        }
    }
    return true;
}

GhatScan scan_ghat(const Graph& g, int t, unsigned long long budget, const SolveOptions& opts) {
    GhatFamily family(g, t);
    GhatScan scan;
    std::set<std::vector<uint64_t>> seen;
    Graph member = g;
    while (scan.tuples_enumerated < budget && family.next(member)) {
        ++scan.tuples_enumerated;
        if (!seen.insert(adjacency_key(member)).second) continue;
        ++scan.unique_members;
        try {
            if (chromatic_number(member, opts) == t) {
                scan.status = SearchStatus::found;
                scan.witness = member;
                return scan;
            }
        } catch (const UndecidedError&) {
            scan.status = SearchStatus::undecided;
            return scan;
        }
    }
    // Either the family is exhausted (verdict: absent) or the budget ran
    // out first (verdict: undecided).
    Graph probe = g;
    scan.status = family.next(probe) ? SearchStatus::undecided : SearchStatus::absent;
    return scan;
}

SearchStatus fall_via_ghat(const Graph& g, int t, unsigned long long budget, const SolveOptions& opts) {
    return scan_ghat(g, t, budget, opts).status;
}

bool regular_d2_criterion(const Graph& g, const SolveOptions& opts) {
    const int r = g.regular_degree();
    if (r < 0)
        throw NotRegularError("regular_d2_criterion needs a regular graph; degrees span [" +
                                  std::to_string(g.min_degree()) + ", " + std::to_string(g.max_degree()) + "]",
                              g.min_degree(), g.max_degree());
    return chromatic_number(distance2_power(g), opts) == r + 1;
}

BipartitionOutcome bipartition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> side(static_cast<size_t>(n), -1);
    std::vector<int> parent(static_cast<size_t>(n), -1);
    std::vector<int> depth(static_cast<size_t>(n), 0);
    std::vector<int> queue;

    for (int root = 0; root < n; ++root) {
        if (side[static_cast<size_t>(root)] >= 0) continue;
        side[static_cast<size_t>(root)] = 0;
        queue.assign(1, root);
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            const int u = queue[qi];
            int clash = -1;
            g.neighbors(u).for_each([&](int v) {
                if (side[static_cast<size_t>(v)] < 0) {
                    side[static_cast<size_t>(v)] = 1 - side[static_cast<size_t>(u)];
                    parent[static_cast<size_t>(v)] = u;
                    depth[static_cast<size_t>(v)] = depth[static_cast<size_t>(u)] + 1;
                    queue.push_back(v);
                } else if (side[static_cast<size_t>(v)] == side[static_cast<size_t>(u)] && clash < 0) {
                    clash = v;
                }
            });
            if (clash >= 0) {
                // Tree paths from both endpoints to their lowest common
                // ancestor plus the clash edge form an odd cycle.
                std::vector<int> up_u, up_v;
                int a = u, b = clash;
                while (depth[static_cast<size_t>(a)] > depth[static_cast<size_t>(b)]) {
                    up_u.push_back(a);
                    a = parent[static_cast<size_t>(a)];
                }
                while (depth[static_cast<size_t>(b)] > depth[static_cast<size_t>(a)]) {
                    up_v.push_back(b);
                    b = parent[static_cast<size_t>(b)];
                }
                while (a != b) {
                    up_u.push_back(a);
                    up_v.push_back(b);
                    a = parent[static_cast<size_t>(a)];
                    b = parent[static_cast<size_t>(b)];
                }
                up_u.push_back(a);
                std::vector<int> cycle = std::move(up_u);
                cycle.insert(cycle.end(), up_v.rbegin(), up_v.rend());
                return {std::nullopt, std::move(cycle)};
            }
        }
    }

    Bipartition sides{VertexSet(n), VertexSet(n)};
    for (int v = 0; v < n; ++v)
        (side[static_cast<size_t>(v)] == 0 ? sides.side_a : sides.side_b).set(v);
    return {std::move(sides), {}};
}

Matching max_matching_bipartite(const Graph& g, const Bipartition& b) {
    const int n = g.vertex_count();
    if (b.side_a.capacity() != n || b.side_b.capacity() != n)
        throw InvalidArgument("bipartition does not fit the graph");
    if (b.side_a.intersects(b.side_b)) throw InvalidArgument("bipartition sides overlap");
    VertexSet all = b.side_a;
    all |= b.side_b;
    if (all.count() != n) throw InvalidArgument("bipartition does not cover every vertex");
    for (int u = 0; u < n; ++u)
        if (g.neighbors(u).intersects(b.side_a.test(u) ? b.side_a : b.side_b))
            throw InvalidArgument("bipartition has an internal edge at vertex " + std::to_string(u));

    std::vector<int> match(static_cast<size_t>(n), -1); // over B-vertices (indexed by vertex id)
    std::vector<bool> visited(static_cast<size_t>(n), false);

    auto augment = [&](auto&& self, int a) -> bool {
        bool done = false;
        g.neighbors(a).for_each([&](int v) {
            if (done || visited[static_cast<size_t>(v)]) return;
            visited[static_cast<size_t>(v)] = true;
            if (match[static_cast<size_t>(v)] < 0 || self(self, match[static_cast<size_t>(v)])) {
                match[static_cast<size_t>(v)] = a;
                done = true;
            }
        });
        return done;
    };

    for (int a = 0; a < n; ++a) {
        if (!b.side_a.test(a)) continue;
        std::fill(visited.begin(), visited.end(), false);
        augment(augment, a);
    }

#ifndef NDEBUG
    // Kuhn's invariant: once every A-vertex has been offered an augmenting
    // path, none remains.
    std::vector<bool> covered(static_cast<size_t>(n), false);
    for (int v = 0; v < n; ++v)
        if (match[static_cast<size_t>(v)] >= 0) covered[static_cast<size_t>(match[static_cast<size_t>(v)])] = true;
    for (int a = 0; a < n; ++a) {
        if (!b.side_a.test(a) || covered[static_cast<size_t>(a)]) continue;
        std::fill(visited.begin(), visited.end(), false);
        assert(!augment(augment, a));
    }
#endif

    Matching result;
    for (int v = 0; v < n; ++v)
        if (match[static_cast<size_t>(v)] >= 0) result.pairs.emplace_back(match[static_cast<size_t>(v)], v);
    std::sort(result.pairs.begin(), result.pairs.end());
    return result;
}

BipartiteComplementResult fall_of_bipartite_complement(const Graph& g) {
    auto outcome = bipartition(g);
    if (!outcome.sides)
        throw NotBipartiteError("fall_of_bipartite_complement needs a bipartite graph; found an odd cycle",
                                std::move(outcome.odd_cycle));

    const int n = g.vertex_count();
    BipartiteComplementResult result;
    std::vector<int> covered; // vertices with at least one edge
    for (int v = 0; v < n; ++v)
        (g.degree(v) > 0 ? covered : result.isolated).push_back(v);

    if (!covered.empty()) {
        const auto sub = induced_subgraph(g, covered);
        const int m = sub.graph.vertex_count();
        Bipartition restricted{VertexSet(m), VertexSet(m)};
        for (int i = 0; i < m; ++i)
            (outcome.sides->side_a.test(sub.original_ids[static_cast<size_t>(i)]) ? restricted.side_a
                                                                                  : restricted.side_b)
                .set(i);
        Matching sub_matching = max_matching_bipartite(sub.graph, restricted);
        for (auto [a, b] : sub_matching.pairs)
            result.matching.pairs.emplace_back(sub.original_ids[static_cast<size_t>(a)],
                                               sub.original_ids[static_cast<size_t>(b)]);
        if (2 * sub_matching.size() != m) return result; // no perfect matching: Fall is empty
    }

    // Color classes of complement(g): one per matching edge, one per
    // isolated vertex of g, ordered by smallest member.
    std::vector<std::pair<int, std::vector<int>>> classes;
    for (auto [a, b] : result.matching.pairs) classes.push_back({std::min(a, b), {a, b}});
    for (int v : result.isolated) classes.push_back({v, {v}});
    std::sort(classes.begin(), classes.end());

    const int k = n - static_cast<int>(covered.size()) / 2;
    std::vector<int> colors(static_cast<size_t>(n), -1);
    for (size_t c = 0; c < classes.size(); ++c)
        for (int v : classes[c].second) colors[static_cast<size_t>(v)] = static_cast<int>(c);
    Coloring witness(std::move(colors), k);
    if (!is_fall(complement(g), witness))
        throw Error("fall_of_bipartite_complement: assembled witness failed its fall check");

    result.report.fall_set = {k};
    result.report.witnesses.emplace(k, std::move(witness));
    result.report.chi_f = k;
    result.report.psi_f = k;
    return result;
}

} // namespace fallcolor
