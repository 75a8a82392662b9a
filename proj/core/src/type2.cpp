#include "fallcolor/type2.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "fallcolor/errors.hpp"

namespace fallcolor {

namespace {

bool is_surjective(const VertexMap& m) {
    std::vector<bool> hit(static_cast<size_t>(m.target.vertex_count()), false);
    for (int v : m.map) hit[static_cast<size_t>(v)] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool is_complete(const Graph& g) {
    return g.edge_count() == static_cast<long long>(g.vertex_count()) * (g.vertex_count() - 1) / 2;
}

} // namespace

VertexMap make_vertex_map(Graph source, Graph target, std::vector<int> map) {
    if (static_cast<int>(map.size()) != source.vertex_count())
        throw InvalidArgument("vertex map must assign every source vertex");
    for (int v : map)
        if (v < 0 || v >= target.vertex_count())
            throw InvalidArgument("vertex map image out of range: " + std::to_string(v));
    return {std::move(source), std::move(target), std::move(map)};
}

VertexMap identity_map(const Graph& g) {
    std::vector<int> map(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) map[static_cast<size_t>(v)] = v;
    return {g, g, std::move(map)};
}

bool is_type2_hom(const VertexMap& m) {
    const Graph& g = m.source;
    const Graph& h = m.target;

    for (int u = 0; u < g.vertex_count(); ++u) {
        bool ok = true;
        g.neighbors(u).for_each([&](int v) {
            if (u < v && !h.adjacent(m.map[static_cast<size_t>(u)], m.map[static_cast<size_t>(v)])) ok = false;
        });
        if (!ok) return false;
    }

    std::vector<std::vector<int>> preimage(static_cast<size_t>(h.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) preimage[static_cast<size_t>(m.map[static_cast<size_t>(v)])].push_back(v);

    for (int u1 = 0; u1 < h.vertex_count(); ++u1) {
        bool ok = true;
        h.neighbors(u1).for_each([&](int v1) {
            if (!ok) return;
            for (int v : preimage[static_cast<size_t>(v1)]) {
                bool reached = false;
                for (int u : preimage[static_cast<size_t>(u1)])
                    if (g.adjacent(u, v)) {
                        reached = true;
                        break;
                    }
                if (!reached) {
                    ok = false;
                    return;
                }
            }
        });
        if (!ok) return false;
    }
    return true;
}

VertexMap compose(const VertexMap& m1, const VertexMap& m2) {
    if (m1.target != m2.source) throw InvalidArgument("compose: middle graphs do not match");
    std::vector<int> map(m1.map.size());
    for (size_t v = 0; v < m1.map.size(); ++v) map[v] = m2.map[static_cast<size_t>(m1.map[v])];
    return {m1.source, m2.target, std::move(map)};
}

VertexMap hom_from_fall(const Graph& g, const Coloring& f) {
    if (!is_fall(g, f)) throw InvalidArgument("hom_from_fall: not a fall coloring");
    VertexMap m = make_vertex_map(g, complete_graph(f.k), f.colors);
    assert(is_type2_hom(m));
    return m;
}

Coloring fall_from_hom(const VertexMap& m) {
    if (!is_complete(m.target)) throw InvalidArgument("fall_from_hom: target is not a complete graph");
    if (!is_type2_hom(m)) throw InvalidArgument("fall_from_hom: map is not a type-II homomorphism");
    // Type-II maps into complete graphs are surjective; a miss here would
    // mean the check above is broken.
    if (!is_surjective(m)) throw Error("fall_from_hom: type-II map into a complete graph was not surjective");
    Coloring f(m.map, m.target.vertex_count());
    assert(is_fall(m.source, f));
    return f;
}

VertexMap lex_hom(const VertexMap& m1, const VertexMap& m2) {
    if (!is_type2_hom(m1)) throw InvalidArgument("lex_hom: first map is not type-II");
    if (!is_type2_hom(m2)) throw InvalidArgument("lex_hom: second map is not type-II");
    if (!is_surjective(m2)) throw SurjectivityError("lex_hom: the inner map must be surjective");

    const ProductIndexMap src{m1.source.vertex_count(), m2.source.vertex_count()};
    const ProductIndexMap dst{m1.target.vertex_count(), m2.target.vertex_count()};
    std::vector<int> map(static_cast<size_t>(src.size()));
    for (int x = 0; x < src.n1; ++x)
        for (int y = 0; y < src.n2; ++y)
            map[static_cast<size_t>(src.pair(x, y))] =
                dst.pair(m1.map[static_cast<size_t>(x)], m2.map[static_cast<size_t>(y)]);
    VertexMap out{lex_product(m1.source, m2.source), lex_product(m1.target, m2.target), std::move(map)};
    assert(is_type2_hom(out));
    return out;
}

VertexMap cat_hom(const VertexMap& m1, const VertexMap& m2) {
    if (!is_type2_hom(m1)) throw InvalidArgument("cat_hom: first map is not type-II");
    if (!is_type2_hom(m2)) throw InvalidArgument("cat_hom: second map is not type-II");

    const ProductIndexMap src{m1.source.vertex_count(), m2.source.vertex_count()};
    const ProductIndexMap dst{m1.target.vertex_count(), m2.target.vertex_count()};
    std::vector<int> map(static_cast<size_t>(src.size()));
    for (int x = 0; x < src.n1; ++x)
        for (int y = 0; y < src.n2; ++y)
            map[static_cast<size_t>(src.pair(x, y))] =
                dst.pair(m1.map[static_cast<size_t>(x)], m2.map[static_cast<size_t>(y)]);
    VertexMap out{cat_product(m1.source, m2.source), cat_product(m1.target, m2.target), std::move(map)};
    assert(is_type2_hom(out));
    return out;
}

} // namespace fallcolor
