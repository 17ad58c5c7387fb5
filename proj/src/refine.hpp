#pragma once

// Ordered-partition refinement shared by the isomorphism search and the
// canonical labeller. Every step depends only on cell membership and
// neighbour counts, so isomorphic inputs refine to corresponding partitions.

#include <array>
#include <bit>
#include <span>
#include <vector>

#include "eqlab/graph.hpp"

namespace eqlab::detail {

struct Partition {
  std::vector<Word> cells;

  bool discrete() const noexcept;
  // First cell of minimum size > 1, or cells.size() when discrete.
  std::size_t target_cell() const noexcept;
  // Cell index containing v.
  std::size_t cell_of(Vertex v) const noexcept;
};

// Cells ordered by ascending colour value.
Partition partition_from_colors(std::span<const unsigned> colors);

Partition unit_partition(unsigned order);

// Splits the cell holding v into {v} followed by the rest.
void individualize(Partition& p, Vertex v);

// Refines p to the coarsest equitable partition finer than p. Split cells
// are replaced in place by their pieces in ascending neighbour-count order.
void refine(const Graph& g, Partition& p);

// Same cell sizes and the same cell-to-cell neighbour counts. Necessary for
// a colour-preserving isomorphism between equitable partitions.
bool compatible(const Graph& g, const Partition& p, const Graph& h, const Partition& q);

// Vertex sequence of a discrete partition.
std::vector<Vertex> discrete_order(const Partition& p);

}  // namespace eqlab::detail
