#include "eqlab/graph.hpp"

#include <algorithm>
#include <functional>

namespace eqlab {

namespace {

void check_order(unsigned order) {
  if (order > kMaxOrder) {
    throw CapacityError("graph order " + std::to_string(order) + " exceeds the limit of 64");
  }
}

void check_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) {
    throw ValidationError("vertex " + std::to_string(v) + " out of range for order " +
                          std::to_string(g.order()));
  }
}

}  // namespace

VertexSet::VertexSet(Word bits, unsigned owner_order) : bits_(bits), owner_order_(owner_order) {
  check_order(owner_order);
  if ((bits & ~low_mask(owner_order)) != 0) {
    throw ValidationError("vertex set has members outside order " + std::to_string(owner_order));
  }
}

VertexSet::VertexSet(std::initializer_list<Vertex> members, unsigned owner_order)
    : owner_order_(owner_order) {
  check_order(owner_order);
  for (Vertex v : members) {
    if (v >= owner_order) {
      throw ValidationError("vertex " + std::to_string(v) + " outside order " +
                            std::to_string(owner_order));
    }
    bits_ |= Word{1} << v;
  }
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for (Word w = bits_; w != 0; w &= w - 1) out.push_back(static_cast<Vertex>(std::countr_zero(w)));
  return out;
}

bool VertexSet::lex_less(const VertexSet& other) const {
  auto a = members();
  auto b = other.members();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string VertexSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (Vertex v : members()) {
    if (!first) s += ',';
    s += std::to_string(v);
    first = false;
  }
  return s + "}";
}

unsigned DegreeSequence::sum() const {
  unsigned total = 0;
  for (unsigned d : degrees) total += d;
  return total;
}

Graph::Graph(unsigned order) : order_(order) { check_order(order); }

unsigned Graph::edge_count() const noexcept {
  unsigned twice = 0;
  for (unsigned v = 0; v < order_; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order_; ++u) {
    for (Word w = adj_[u] & ~low_mask(u + 1); w != 0; w &= w - 1) {
      out.emplace_back(u, static_cast<Vertex>(std::countr_zero(w)));
    }
  }
  return out;
}

bool operator==(const Graph& a, const Graph& b) noexcept {
  return a.order_ == b.order_ &&
         std::equal(a.adj_.begin(), a.adj_.begin() + a.order_, b.adj_.begin());
}

Graph new_graph(unsigned order, std::span<const Edge> edges) {
  Graph g(order);
  for (auto [u, v] : edges) {
    if (u >= order || v >= order) {
      throw ValidationError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") has an endpoint outside order " + std::to_string(order));
    }
    if (u == v) throw ValidationError("loop at vertex " + std::to_string(u));
    g.add_edge(u, v);
  }
  return g;
}

Graph new_graph(unsigned order, std::initializer_list<Edge> edges) {
  return new_graph(order, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph graph_from_adjacency(std::span<const Word> rows) {
  const auto order = static_cast<unsigned>(rows.size());
  Graph g(order);
  const Word mask = low_mask(order);
  for (Vertex v = 0; v < order; ++v) {
    if ((rows[v] & ~mask) != 0) throw ValidationError("adjacency row has bits beyond order");
    if ((rows[v] >> v) & 1U) throw ValidationError("loop at vertex " + std::to_string(v));
    for (Word w = rows[v]; w != 0; w &= w - 1) {
      const auto u = static_cast<Vertex>(std::countr_zero(w));
      if (((rows[u] >> v) & 1U) == 0) throw ValidationError("adjacency rows are not symmetric");
      g.add_edge(u, v);
    }
  }
  return g;
}

Graph complement(const Graph& g) {
  Graph h(g.order());
  const Word mask = g.vertex_mask();
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Word w = mask & ~g.adj(v) & ~(Word{1} << v); w != 0; w &= w - 1) {
      h.add_edge(v, static_cast<Vertex>(std::countr_zero(w)));
    }
  }
  return h;
}

Graph induced_subgraph(const Graph& g, Word s) {
  if ((s & ~g.vertex_mask()) != 0) throw ValidationError("vertex set exceeds graph order");
  std::array<Vertex, kMaxOrder> position{};
  unsigned k = 0;
  for (Word w = s; w != 0; w &= w - 1) position[std::countr_zero(w)] = k++;
  Graph h(k);
  for (Word w = s; w != 0; w &= w - 1) {
    const auto v = static_cast<Vertex>(std::countr_zero(w));
    for (Word nb = g.adj(v) & s & ~low_mask(v + 1); nb != 0; nb &= nb - 1) {
      h.add_edge(position[v], position[std::countr_zero(nb)]);
    }
  }
  return h;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.owner_order() > g.order()) throw ValidationError("vertex set exceeds graph order");
  return induced_subgraph(g, s.bits());
}

DegreeSequence degree_sequence(const Graph& g) {
  DegreeSequence ds;
  ds.degrees.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) ds.degrees.push_back(g.degree(v));
  std::sort(ds.degrees.begin(), ds.degrees.end(), std::greater<>());
  return ds;
}

std::optional<unsigned> regular_degree(const Graph& g) {
  if (g.order() == 0) return 0U;
  const unsigned k = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) {
    if (g.degree(v) != k) return std::nullopt;
  }
  return k;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  Word unseen = g.vertex_mask();
  while (unseen != 0) {
    Word comp = unseen & (~unseen + 1);
    Word frontier = comp;
    while (frontier != 0) {
      Word next = 0;
      for (Word w = frontier; w != 0; w &= w - 1) next |= g.adj(static_cast<Vertex>(std::countr_zero(w)));
      frontier = next & ~comp;
      comp |= next;
    }
    unseen &= ~comp;
    out.emplace_back(comp, g.order());
  }
  // Discovery order is by smallest member already; stable sort keeps that for ties.
  std::stable_sort(out.begin(), out.end(),
                   [](const VertexSet& a, const VertexSet& b) { return a.size() > b.size(); });
  return out;
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  check_vertex(g, v);
  return {g.adj(v) | (Word{1} << v), g.order()};
}

VertexSet far_set(const Graph& g, Vertex v) {
  check_vertex(g, v);
  const Word closed_v = g.adj(v) | (Word{1} << v);
  Word far = 0;
  for (Vertex x = 0; x < g.order(); ++x) {
    const Word closed_x = g.adj(x) | (Word{1} << x);
    if ((closed_x & closed_v) == 0) far |= Word{1} << x;
  }
  return {far, g.order()};
}

unsigned induced_edge_count(const Graph& g, Word s) noexcept {
  unsigned twice = 0;
  for (Word w = s; w != 0; w &= w - 1) {
    twice += static_cast<unsigned>(std::popcount(g.adj(static_cast<Vertex>(std::countr_zero(w))) & s));
  }
  return twice / 2;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  Graph u(g.order() + h.order());
  for (auto [a, b] : g.edges()) u.add_edge(a, b);
  for (auto [a, b] : h.edges()) u.add_edge(g.order() + a, g.order() + b);
  return u;
}

}  // namespace eqlab
