#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eqlab/errors.hpp"

namespace eqlab {

inline constexpr unsigned kMaxOrder = 64;

using Vertex = unsigned;
using Word = std::uint64_t;
using Edge = std::pair<Vertex, Vertex>;

// Mask with the low `order` bits set.
constexpr Word low_mask(unsigned order) noexcept {
  return order >= 64 ? ~Word{0} : (Word{1} << order) - 1;
}

// A set of vertices of a graph of order `owner_order`, one bit per vertex.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(Word bits, unsigned owner_order);
  VertexSet(std::initializer_list<Vertex> members, unsigned owner_order);

  static VertexSet all(unsigned order) { return {low_mask(order), order}; }

  Word bits() const noexcept { return bits_; }
  unsigned owner_order() const noexcept { return owner_order_; }
  unsigned size() const noexcept { return static_cast<unsigned>(std::popcount(bits_)); }
  bool empty() const noexcept { return bits_ == 0; }
  bool contains(Vertex v) const noexcept { return v < 64 && ((bits_ >> v) & 1U) != 0; }

  // Members in ascending order.
  std::vector<Vertex> members() const;
  VertexSet complement() const { return {low_mask(owner_order_) & ~bits_, owner_order_}; }

  // Lexicographic order on the ascending member lists.
  bool lex_less(const VertexSet& other) const;

  std::string to_string() const;  // "{0,1,2,5}"

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  Word bits_ = 0;
  unsigned owner_order_ = 0;
};

// Non-increasing degree list.
struct DegreeSequence {
  std::vector<unsigned> degrees;

  unsigned sum() const;
  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
};

// Undirected simple graph on at most 64 vertices; adj(v) bit u set iff {u,v} is an edge.
class Graph {
 public:
  Graph() = default;
  explicit Graph(unsigned order);

  unsigned order() const noexcept { return order_; }
  Word adj(Vertex v) const noexcept { return adj_[v]; }
  std::span<const Word> adjacency() const noexcept { return {adj_.data(), order_}; }
  Word vertex_mask() const noexcept { return low_mask(order_); }

  bool has_edge(Vertex u, Vertex v) const noexcept { return ((adj_[u] >> v) & 1U) != 0; }
  unsigned degree(Vertex v) const noexcept { return static_cast<unsigned>(std::popcount(adj_[v])); }
  unsigned edge_count() const noexcept;
  std::vector<Edge> edges() const;  // u < v, sorted

  // Unchecked mutators for builders that already guarantee u != v < order.
  void add_edge(Vertex u, Vertex v) noexcept {
    adj_[u] |= Word{1} << v;
    adj_[v] |= Word{1} << u;
  }
  void remove_edge(Vertex u, Vertex v) noexcept {
    adj_[u] &= ~(Word{1} << v);
    adj_[v] &= ~(Word{1} << u);
  }

  friend bool operator==(const Graph& a, const Graph& b) noexcept;

 private:
  unsigned order_ = 0;
  std::array<Word, kMaxOrder> adj_{};
};

// Validated construction; duplicate edges collapse.
Graph new_graph(unsigned order, std::span<const Edge> edges);
Graph new_graph(unsigned order, std::initializer_list<Edge> edges);

// Builds from raw rows, checking symmetry, loops and out-of-range bits.
Graph graph_from_adjacency(std::span<const Word> rows);

Graph complement(const Graph& g);

// Relabels by ascending position in s.
Graph induced_subgraph(const Graph& g, const VertexSet& s);
Graph induced_subgraph(const Graph& g, Word s);

DegreeSequence degree_sequence(const Graph& g);

// Some k when every vertex has degree k; the order-0 graph is 0-regular.
std::optional<unsigned> regular_degree(const Graph& g);

// Components by non-increasing size, ties by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

VertexSet closed_neighborhood(const Graph& g, Vertex v);

// Vertices whose closed neighbourhood misses closed_neighborhood(g, v).
VertexSet far_set(const Graph& g, Vertex v);

// Edges of g inside the vertex mask s.
unsigned induced_edge_count(const Graph& g, Word s) noexcept;

// Disjoint union, h relabeled to g.order() + i.
Graph disjoint_union(const Graph& g, const Graph& h);

}  // namespace eqlab
