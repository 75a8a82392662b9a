#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fallcolor/coloring.hpp"
#include "fallcolor/graph.hpp"

namespace fallcolor {

/// Fixed-point-free permutation of [0, t).
struct Derangement {
    std::vector<int> perm;
};

/// The deterministic derangement: cyclic shift i -> (i+1) mod t. t >= 2.
Derangement derangement(int t);

/// Outer fall coloring of g plus one fall coloring of h per outer color.
struct ColoringFamily {
    Coloring base;
    std::vector<Coloring> per_color;
};

/// Graph together with a fall coloring of it. Every builder returning one
/// has already verified the coloring; failure to verify is an error, not
/// a result.
struct BuiltColoring {
    Graph graph;
    Coloring coloring;
};

/// Fall coloring of lex_product(g, h) built by coloring layer x with the
/// inner coloring chosen by the outer color of x, palettes disjoint.
/// Uses sum(per_color[i].k) colors.
Coloring lex_compose(const Graph& g, const Graph& h, const ColoringFamily& fam);

/// Fall coloring of the (left-folded) join of the parts, palettes offset
/// so they are disjoint; k = sum of the part palettes.
Coloring join_compose(const std::vector<std::pair<Graph, Coloring>>& parts);

/// Fall coloring of cat_product(g, h) by first-coordinate projection.
/// Requires every vertex of h to have a neighbor whenever f.k >= 2.
Coloring cat_project(const Graph& g, const Coloring& f, const Graph& h);

/// C5 x C5 with f((i,j)) = (i + 2j) mod 5.
BuiltColoring c5xc5_coloring();

/// Fall (t + rn - 2)-coloring of K2 x K_t x K_rn; needs 3 <= t < rn.
BuiltColoring case1_coloring(int t, int rn);

/// Fall (rs*rj*rn/4)-coloring of K_rs x K_rj x K_rn by tiling a 2x2 base
/// block over the first and third coordinates; rs, rn even >= 4, rj >= 2.
BuiltColoring case2_coloring(int rs, int rj, int rn);

/// Same tiling as case2 with the even pair placed first and last; for
/// parameter sets whose largest value is the middle factor.
BuiltColoring case3_coloring(int rs, int rj, int rt);

/// Fall ((ra-1)*rb*rn/4 + 1)-coloring of K_ra x K_rb x K_rn: case2 tiling
/// over the first ra-1 slabs plus one extra color on the last slab;
/// ra odd >= 3, rb >= 3, rn even >= 4.
BuiltColoring case4_coloring(int ra, int rb, int rn);

/// Same extension as case4 with the single even factor last; for
/// parameter sets whose largest value is odd.
BuiltColoring case5_coloring(int ra, int rb, int re);

/// Per-layer color sets of a fall coloring f of lex_product(g, h),
/// indexed by the g-vertex. Each layer's restriction is checked to be a
/// fall coloring of h after renaming to a dense palette.
std::vector<std::vector<int>> layer_color_sets(const Graph& g, const Graph& h, const Coloring& f);

struct NamedFixture {
    std::string name;
    Graph graph;
    Coloring coloring;
};

/// The three hand-written fall 5-colorings of C5[K2], C9[K2], C8[K2],
/// transcribed 0-based in lexicographic vertex order.
std::vector<NamedFixture> paper_fixtures();

} // namespace fallcolor
