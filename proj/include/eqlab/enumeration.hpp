#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "eqlab/canonical.hpp"
#include "eqlab/graph.hpp"
#include "eqlab/oracles.hpp"

namespace eqlab {

inline constexpr unsigned kMaxCatalogOrder = 8;
inline constexpr unsigned kMaxRegularCatalogOrder = 12;

// Pairwise non-isomorphic graphs of one order, exhaustive for the filter,
// sorted by canonical form. Graphs are stored in canonical labelling.
struct GraphCatalog {
  unsigned order = 0;
  std::optional<unsigned> degree;  // set for k-regular catalogs
  std::vector<Graph> graphs;
};

// Orders up to 6 dedup all 2^C(n,2) labelled graphs; 7 and 8 grow the
// previous order by one vertex and keep a child only when the new vertex is
// in the automorphism orbit of its canonically last vertex.
GraphCatalog enumerate_all(unsigned order);

// Row-by-row edge completion with degree bounds. Unprocessed vertices with
// identical rows so far are interchangeable, so only a prefix of each such
// class is ever chosen. Results are deduplicated by canonical form; degrees
// above (order-1)/2 are produced as complements of the low-degree catalog.
GraphCatalog enumerate_regular(unsigned order, unsigned degree);

struct SearchHit {
  Graph graph;
  Verdict verdict;
};

// Catalog graphs on which the property holds, in catalog order.
std::vector<SearchHit> search_property(const GraphCatalog& catalog, Property property,
                                       const OracleOptions& opts = {});

}  // namespace eqlab
