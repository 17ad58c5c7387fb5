#pragma once

#include <vector>

#include "eqlab/graph.hpp"

namespace named {

using eqlab::Edge;
using eqlab::Graph;
using eqlab::Vertex;

inline Graph cycle(unsigned n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return eqlab::new_graph(n, e);
}

inline Graph path(unsigned n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return eqlab::new_graph(n, e);
}

inline Graph complete(unsigned n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return eqlab::new_graph(n, e);
}

inline Graph empty(unsigned n) { return Graph(n); }

// Sides {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(unsigned a, unsigned b) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < a; ++i) {
    for (Vertex j = 0; j < b; ++j) e.emplace_back(i, a + j);
  }
  return eqlab::new_graph(a + b, e);
}

// Triangles 0-1-2 and 3-4-5 with rungs i -- i+3.
inline Graph prism() {
  return eqlab::new_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
}

// Outer cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
    e.emplace_back(i, 5 + i);
  }
  return eqlab::new_graph(10, e);
}

// Crown K_{n,n} minus the matching i -- n+i.
inline Graph crown(unsigned n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      if (i != j) e.emplace_back(i, n + j);
    }
  }
  return eqlab::new_graph(2 * n, e);
}

}  // namespace named
