#pragma once

#include <vector>

#include "fallcolor/coloring.hpp"
#include "fallcolor/graph.hpp"

namespace fallcolor {

/// Total vertex map between two graphs. Carries its endpoints so derived
/// maps can be validated eagerly.
struct VertexMap {
    Graph source;
    Graph target;
    std::vector<int> map;
};

/// Validates totality and range.
VertexMap make_vertex_map(Graph source, Graph target, std::vector<int> map);

VertexMap identity_map(const Graph& g);

/// Type-II homomorphism check: (1) edges map to edges; (2) for every
/// target edge {u1,v1} and every v in the preimage of v1 there is a
/// u in the preimage of u1 adjacent to v.
bool is_type2_hom(const VertexMap& m);

/// Pointwise composition g -> h -> i; endpoint graphs must match.
VertexMap compose(const VertexMap& m1, const VertexMap& m2);

/// A fall k-coloring of g, read as a map onto K_k (and back). The two
/// directions are mutually inverse.
VertexMap hom_from_fall(const Graph& g, const Coloring& f);
Coloring fall_from_hom(const VertexMap& m);

/// Coordinatewise lift to the lexicographic product. m2 must additionally
/// be surjective; a non-surjective m2 is rejected with SurjectivityError.
VertexMap lex_hom(const VertexMap& m1, const VertexMap& m2);

/// Coordinatewise lift to the categorical product.
VertexMap cat_hom(const VertexMap& m1, const VertexMap& m2);

} // namespace fallcolor
