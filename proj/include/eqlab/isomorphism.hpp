#pragma once

#include <optional>
#include <span>
#include <vector>

#include "eqlab/graph.hpp"

namespace eqlab {

// Colour-preserving isomorphism g -> h as image[v], found by equitable
// refinement plus individualisation backtracking. Colours are compared by value.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, std::span<const unsigned> g_colors,
                                                    const Graph& h, std::span<const unsigned> h_colors);

bool are_isomorphic(const Graph& g, const Graph& h);

// True iff some automorphism pi of g has pi(a) = b. Requires |a| = |b|.
bool has_automorphism_mapping(const Graph& g, const VertexSet& a, const VertexSet& b);

}  // namespace eqlab
