#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fallcolor/graph.hpp"

namespace fallcolor {

/// Vertex coloring with a declared palette [0, k). A fall k-coloring is
/// proper, uses every color, and makes every vertex colorful.
struct Coloring {
    std::vector<int> colors;
    int k = 0;

    Coloring() = default;
    Coloring(std::vector<int> c, int palette) : colors(std::move(c)), k(palette) {}

    /// Palette inferred as max color + 1.
    static Coloring from_vector(std::vector<int> c);
};

bool is_proper(const Graph& g, const Coloring& f);

/// True iff every color of [0, k) appears on the closed neighborhood of v.
bool is_colorful(const Graph& g, const Coloring& f, int v);

bool is_fall(const Graph& g, const Coloring& f);

/// The fall set of a graph together with one witness per member.
/// `undecided` lists k values the search gave up on (timeout/budget);
/// they are never members of fall_set.
struct FallReport {
    std::vector<int> fall_set;
    std::map<int, Coloring> witnesses;
    std::optional<int> chi_f;
    std::optional<int> psi_f;
    std::vector<int> undecided;

    bool contains(int k) const;
};

/// Stable-key JSON document {fall_set, chi_f, psi_f, witnesses, undecided}.
std::string to_json_string(const FallReport& report, bool one_based = false);

} // namespace fallcolor
