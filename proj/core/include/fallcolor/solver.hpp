#pragma once

#include <chrono>
#include <optional>

#include "fallcolor/coloring.hpp"
#include "fallcolor/graph.hpp"

namespace fallcolor {

/// Knobs shared by the exact searches. `timeout` applies per search call
/// (each k of a fall_set run gets its own budget); zero means no limit.
struct SolveOptions {
    int capacity = 64;
    std::chrono::milliseconds timeout{0};
};

/// Hard ceiling on `SolveOptions::capacity`.
inline constexpr int kSolverMaxCapacity = 128;

enum class SearchStatus { found, absent, undecided };

struct SearchOutcome {
    SearchStatus status = SearchStatus::undecided;
    std::optional<Coloring> coloring;

    bool found() const { return status == SearchStatus::found; }
};

/// Exact chromatic number by branch and bound (clique lower bound, greedy
/// upper bound, DSATUR-ordered feasibility search in between).
/// Throws CapacityError when the graph exceeds the capacity bound and
/// UndecidedError when a nonzero timeout expires first.
int chromatic_number(const Graph& g, const SolveOptions& opts = {});

/// A verified fall k-coloring if one exists. Absence is exact; `undecided`
/// is reported only when the timeout expires. The returned witness is the
/// lexicographically smallest color array along the search's vertex order.
SearchOutcome find_fall_coloring(const Graph& g, int k, const SolveOptions& opts = {});

/// Full Fall(g) over k in [1, min_degree+1] with one witness per member.
/// Disconnected graphs are decomposed per component and the component
/// fall sets intersected.
FallReport fall_set(const Graph& g, const SolveOptions& opts = {});

/// min / max of Fall(g). Throw NoFallColoringError when Fall(g) is empty
/// and UndecidedError when a timeout leaves the extremum uncertain.
int chi_f(const Graph& g, const SolveOptions& opts = {});
int psi_f(const Graph& g, const SolveOptions& opts = {});

/// Greedy clique, a cheap lower bound for the chromatic number.
int clique_lower_bound(const Graph& g);

} // namespace fallcolor
