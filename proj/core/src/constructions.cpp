#include "fallcolor/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "fallcolor/errors.hpp"
#include "fallcolor/graph6.hpp"

namespace fallcolor {

namespace {

Coloring verified(const char* name, const Graph& g, Coloring c) {
    if (!is_fall(g, c))
        throw SelfVerificationError(std::string(name) + ": output failed its fall-coloring check", to_graph6(g),
                                    c.colors);
    return c;
}

Graph triple_complete(int a, int b, int c) {
    return cat_product(cat_product(complete_graph(a), complete_graph(b)), complete_graph(c));
}

// Vertex id of (x, y, z) in K_a x K_b x K_c under the row-major pairing.
int triple_id(int x, int y, int z, int b, int c) { return (x * b + y) * c + z; }

// Color of the 2x2 base block at coordinates (x0, z0) in {0,1}^2: the four
// vertices (0,t,0), (0,s(t),1), (1,t,1), (1,s(t),0) share color t.
int base_block_color(int x0, int y, int z0, const Derangement& sigma) {
    if (x0 == z0) return y;
    const int t = static_cast<int>(sigma.perm.size());
    return (y - 1 + t) % t; // sigma^{-1} for the cyclic shift
}

// The even-pair tiling shared by case2/case3 and the interior of
// case4/case5: x-blocks and z-blocks of size 2, each holding one base
// block worth of rj colors.
int tiling_color(int x, int y, int z, int rj, int rn, const Derangement& sigma) {
    return (x / 2) * (rj * rn / 2) + (z / 2) * rj + base_block_color(x % 2, y, z % 2, sigma);
}

} // namespace

Derangement derangement(int t) {
    if (t < 2) throw InvalidArgument("no derangement of [0, " + std::to_string(t) + ") exists");
    Derangement d;
    d.perm.resize(static_cast<size_t>(t));
    for (int i = 0; i < t; ++i) d.perm[static_cast<size_t>(i)] = (i + 1) % t;
    return d;
}

Coloring lex_compose(const Graph& g, const Graph& h, const ColoringFamily& fam) {
    if (!is_fall(g, fam.base)) throw InvalidArgument("lex_compose: base is not a fall coloring of g");
    if (static_cast<int>(fam.per_color.size()) != fam.base.k)
        throw InvalidArgument("lex_compose: need one inner coloring per outer color");
    for (const auto& inner : fam.per_color)
        if (!is_fall(h, inner)) throw InvalidArgument("lex_compose: an inner coloring is not a fall coloring of h");

    std::vector<int> offset(fam.per_color.size() + 1, 0);
    for (size_t i = 0; i < fam.per_color.size(); ++i) offset[i + 1] = offset[i] + fam.per_color[i].k;

    const ProductIndexMap idx{g.vertex_count(), h.vertex_count()};
    std::vector<int> colors(static_cast<size_t>(idx.size()));
    for (int x = 0; x < idx.n1; ++x) {
        const int gc = fam.base.colors[static_cast<size_t>(x)];
        const auto& inner = fam.per_color[static_cast<size_t>(gc)];
        for (int y = 0; y < idx.n2; ++y)
            colors[static_cast<size_t>(idx.pair(x, y))] = offset[static_cast<size_t>(gc)] + inner.colors[static_cast<size_t>(y)];
    }
    return verified("lex_compose", lex_product(g, h), Coloring(std::move(colors), offset.back()));
}

Coloring join_compose(const std::vector<std::pair<Graph, Coloring>>& parts) {
    if (parts.empty()) throw InvalidArgument("join_compose of an empty list");
    for (const auto& [graph, coloring] : parts)
        if (!is_fall(graph, coloring)) throw InvalidArgument("join_compose: a part coloring is not fall on its graph");

    Graph joined = parts.front().first;
    for (size_t i = 1; i < parts.size(); ++i) joined = join(joined, parts[i].first);

    std::vector<int> colors;
    colors.reserve(static_cast<size_t>(joined.vertex_count()));
    int offset = 0;
    for (const auto& [graph, coloring] : parts) {
        for (int c : coloring.colors) colors.push_back(offset + c);
        offset += coloring.k;
    }
    return verified("join_compose", joined, Coloring(std::move(colors), offset));
}

Coloring cat_project(const Graph& g, const Coloring& f, const Graph& h) {
    if (!is_fall(g, f)) throw InvalidArgument("cat_project: f is not a fall coloring of g");
    if (f.k >= 2 && h.min_degree() == 0)
        throw InvalidArgument("cat_project: h has an isolated vertex, which cannot be colorful for k >= 2");

    const ProductIndexMap idx{g.vertex_count(), h.vertex_count()};
    std::vector<int> colors(static_cast<size_t>(idx.size()));
    for (int u = 0; u < idx.n1; ++u)
        for (int v = 0; v < idx.n2; ++v)
            colors[static_cast<size_t>(idx.pair(u, v))] = f.colors[static_cast<size_t>(u)];
    return verified("cat_project", cat_product(g, h), Coloring(std::move(colors), f.k));
}

BuiltColoring c5xc5_coloring() {
    const Graph c5 = cycle_graph(5);
    Graph product = cat_product(c5, c5);
    std::vector<int> colors(25);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) colors[static_cast<size_t>(i * 5 + j)] = (i + 2 * j) % 5;
    Coloring c = verified("c5xc5_coloring", product, Coloring(std::move(colors), 5));
    return {std::move(product), std::move(c)};
}

BuiltColoring case1_coloring(int t, int rn) {
    if (t < 3 || t >= rn)
        throw InvalidArgument("case1 needs 3 <= t < rn, got t=" + std::to_string(t) + ", rn=" + std::to_string(rn));
    const Derangement sigma = derangement(t);
    Graph product = triple_complete(2, t, rn);
    std::vector<int> colors(static_cast<size_t>(2 * t * rn));
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < t; ++y)
            for (int z = 0; z < rn; ++z) {
                const int color = (z < 2) ? base_block_color(x, y, z, sigma) : t + (z - 2);
                colors[static_cast<size_t>(triple_id(x, y, z, t, rn))] = color;
            }
    Coloring c = verified("case1_coloring", product, Coloring(std::move(colors), t + rn - 2));
    return {std::move(product), std::move(c)};
}

BuiltColoring case2_coloring(int rs, int rj, int rn) {
    if (rs < 4 || rs % 2 != 0 || rn < 4 || rn % 2 != 0)
        throw InvalidArgument("case2 needs rs and rn even and >= 4");
    if (rj < 2) throw InvalidArgument("case2 needs rj >= 2");
    const Derangement sigma = derangement(rj);
    Graph product = triple_complete(rs, rj, rn);
    std::vector<int> colors(static_cast<size_t>(rs * rj * rn));
    for (int x = 0; x < rs; ++x)
        for (int y = 0; y < rj; ++y)
            for (int z = 0; z < rn; ++z)
                colors[static_cast<size_t>(triple_id(x, y, z, rj, rn))] = tiling_color(x, y, z, rj, rn, sigma);
    Coloring c = verified("case2_coloring", product, Coloring(std::move(colors), rs * rj * rn / 4));
    return {std::move(product), std::move(c)};
}

BuiltColoring case3_coloring(int rs, int rj, int rt) { return case2_coloring(rs, rj, rt); }

BuiltColoring case4_coloring(int ra, int rb, int rn) {
    if (ra < 3 || ra % 2 != 1) throw InvalidArgument("case4 needs ra odd and >= 3");
    if (rb < 3) throw InvalidArgument("case4 needs rb >= 3");
    if (rn < 4 || rn % 2 != 0) throw InvalidArgument("case4 needs rn even and >= 4");
    const Derangement sigma = derangement(rb);
    const int extra = (ra - 1) * rb * rn / 4; // single color of the last x-slab
    Graph product = triple_complete(ra, rb, rn);
    std::vector<int> colors(static_cast<size_t>(ra * rb * rn));
    for (int x = 0; x < ra; ++x)
        for (int y = 0; y < rb; ++y)
            for (int z = 0; z < rn; ++z) {
                const int color = (x == ra - 1) ? extra : tiling_color(x, y, z, rb, rn, sigma);
                colors[static_cast<size_t>(triple_id(x, y, z, rb, rn))] = color;
            }
    Coloring c = verified("case4_coloring", product, Coloring(std::move(colors), extra + 1));
    return {std::move(product), std::move(c)};
}

BuiltColoring case5_coloring(int ra, int rb, int re) { return case4_coloring(ra, rb, re); }

std::vector<std::vector<int>> layer_color_sets(const Graph& g, const Graph& h, const Coloring& f) {
    const Graph product = lex_product(g, h);
    if (!is_fall(product, f)) throw InvalidArgument("layer_color_sets: f is not a fall coloring of g[h]");

    const ProductIndexMap idx{g.vertex_count(), h.vertex_count()};
    std::vector<std::vector<int>> sets;
    sets.reserve(static_cast<size_t>(idx.n1));
    for (int x = 0; x < idx.n1; ++x) {
        std::vector<int> layer_colors(static_cast<size_t>(idx.n2));
        for (int y = 0; y < idx.n2; ++y) layer_colors[static_cast<size_t>(y)] = f.colors[static_cast<size_t>(idx.pair(x, y))];

        std::vector<int> sorted = layer_colors;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

        // The layer restriction, renamed to [0, |S_x|), must be fall on h.
        std::vector<int> renamed(layer_colors.size());
        for (size_t y = 0; y < layer_colors.size(); ++y)
            renamed[y] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), layer_colors[y]) - sorted.begin());
        Coloring restriction(std::move(renamed), static_cast<int>(sorted.size()));
        if (!is_fall(h, restriction))
            throw SelfVerificationError("layer_color_sets: layer " + std::to_string(x) + " is not fall on h",
                                        to_graph6(h), restriction.colors);
        sets.push_back(std::move(sorted));
    }
    return sets;
}

std::vector<NamedFixture> paper_fixtures() {
    auto make = [](const char* name, int cycle_len, std::vector<int> colors) {
        Graph g = lex_product(cycle_graph(cycle_len), complete_graph(2));
        Coloring c = verified(name, g, Coloring(std::move(colors), 5));
        return NamedFixture{name, std::move(g), std::move(c)};
    };
    std::vector<NamedFixture> fixtures;
    fixtures.push_back(make("C5[K2]", 5, {0, 1, 2, 3, 0, 4, 1, 3, 4, 2}));
    fixtures.push_back(make("C9[K2]", 9, {0, 3, 1, 2, 4, 0, 3, 1, 2, 0, 4, 1, 3, 2, 0, 1, 4, 2}));
    fixtures.push_back(make("C8[K2]", 8, {0, 1, 2, 3, 4, 0, 1, 2, 3, 0, 4, 1, 2, 0, 4, 3}));
    return fixtures;
}

} // namespace fallcolor
