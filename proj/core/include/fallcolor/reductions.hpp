#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "fallcolor/coloring.hpp"
#include "fallcolor/graph.hpp"
#include "fallcolor/solver.hpp"

namespace fallcolor {

/// Lazy enumeration of the graphs obtained from g by choosing, per vertex,
/// t-1 of its neighbors and turning each chosen set into a clique.
/// Choices advance in lexicographic order (last vertex fastest); members
/// are not deduplicated here.
class GhatFamily {
public:
    GhatFamily(const Graph& g, int t); // requires 1 <= t <= min_degree + 1

    /// Number of choice tuples (saturating).
    unsigned long long tuple_count() const;

    /// Next member; optionally reports the chosen neighbor sets.
    bool next(Graph& out, std::vector<std::vector<int>>* choice = nullptr);

private:
    Graph materialize() const;
    bool advance();

    Graph g_;
    int t_;
    std::vector<std::vector<int>> neighbor_list_;
    std::vector<std::vector<int>> pick_; // per vertex, indices into its neighbor list
    bool started_ = false;
    bool exhausted_ = false;
};

struct GhatScan {
    SearchStatus status = SearchStatus::undecided;
    unsigned long long tuples_enumerated = 0;
    unsigned long long unique_members = 0;
    std::optional<Graph> witness; // member with chromatic number exactly t
};

/// Is t in Fall(g), decided through chromatic numbers of the Ghat family.
/// Members are deduplicated by exact adjacency before the chromatic call.
/// Exceeding the tuple budget before a verdict yields `undecided`, never a
/// wrong boolean.
GhatScan scan_ghat(const Graph& g, int t, unsigned long long budget = 10000, const SolveOptions& opts = {});

SearchStatus fall_via_ghat(const Graph& g, int t, unsigned long long budget = 10000, const SolveOptions& opts = {});

/// For r-regular g: r+1 in Fall(g) iff the distance-<=2 power needs
/// exactly r+1 colors. Non-regular input raises NotRegularError.
bool regular_d2_criterion(const Graph& g, const SolveOptions& opts = {});

struct Bipartition {
    VertexSet side_a;
    VertexSet side_b;
};

struct BipartitionOutcome {
    std::optional<Bipartition> sides;
    std::vector<int> odd_cycle; // nonempty iff sides is absent
};

/// Two-color by breadth-first search; isolated vertices land in side A.
BipartitionOutcome bipartition(const Graph& g);

struct Matching {
    std::vector<std::pair<int, int>> pairs;

    int size() const { return static_cast<int>(pairs.size()); }
};

/// Maximum matching by augmenting paths from unmatched A-vertices in
/// ascending order; deterministic.
Matching max_matching_bipartite(const Graph& g, const Bipartition& b);

struct BipartiteComplementResult {
    FallReport report;      // Fall(complement(g)), decided without search
    Matching matching;      // maximum matching on the non-isolated part of g
    std::vector<int> isolated;
};

/// Fall(complement(g)) for bipartite g: the singleton
/// {n - |non-isolated|/2} when the non-isolated part of g has a perfect
/// matching, empty otherwise. Polynomial; never runs the solver.
BipartiteComplementResult fall_of_bipartite_complement(const Graph& g);

} // namespace fallcolor
