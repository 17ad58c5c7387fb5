#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "eqlab/graph.hpp"

namespace eqlab {

// Isomorphism-class key: the smallest upper-triangle bit string (graph6
// column order) over all leaves of an individualisation-refinement search.
// Bits are packed MSB-first so word order is lexicographic bit order.
struct CanonicalForm {
  unsigned order = 0;
  std::vector<Word> bits;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend std::strong_ordering operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const noexcept;
};

struct CanonicalLabeling {
  CanonicalForm form;
  // labeling[p] is the vertex placed at canonical position p.
  std::vector<Vertex> labeling;
  // Automorphisms found while searching (image[v] form); generate a subgroup.
  std::vector<std::vector<Vertex>> automorphisms;
};

CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);

// The graph relabelled into canonical position order.
Graph canonical_graph(const Graph& g);

// Upper-triangle bit string of g under a vertex sequence (sequence[p] at position p).
CanonicalForm form_under(const Graph& g, const std::vector<Vertex>& sequence);

}  // namespace eqlab
