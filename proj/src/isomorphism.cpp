#include "eqlab/isomorphism.hpp"

#include <algorithm>

#include "refine.hpp"

namespace eqlab {

namespace {

using detail::Partition;

bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<Vertex>& image) {
  for (Vertex u = 0; u < g.order(); ++u) {
    Word mapped = 0;
    for (Word w = g.adj(u); w != 0; w &= w - 1) mapped |= Word{1} << image[std::countr_zero(w)];
    if (mapped != h.adj(image[u])) return false;
  }
  return true;
}

bool search(const Graph& g, Partition p, const Graph& h, Partition q, std::vector<Vertex>& image) {
  detail::refine(g, p);
  detail::refine(h, q);
  if (!detail::compatible(g, p, h, q)) return false;
  const std::size_t t = p.target_cell();
  if (t == p.cells.size()) {
    for (std::size_t i = 0; i < p.cells.size(); ++i) {
      image[std::countr_zero(p.cells[i])] = static_cast<Vertex>(std::countr_zero(q.cells[i]));
    }
    return is_isomorphism(g, h, image);
  }
  const auto v = static_cast<Vertex>(std::countr_zero(p.cells[t]));
  Partition pv = p;
  detail::individualize(pv, v);
  for (Word w = q.cells[t]; w != 0; w &= w - 1) {
    Partition qw = q;
    detail::individualize(qw, static_cast<Vertex>(std::countr_zero(w)));
    if (search(g, pv, h, qw, image)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, std::span<const unsigned> g_colors,
                                                    const Graph& h, std::span<const unsigned> h_colors) {
  if (g.order() != h.order() || g_colors.size() != g.order() || h_colors.size() != h.order()) {
    return std::nullopt;
  }
  if (g.edge_count() != h.edge_count() || degree_sequence(g) != degree_sequence(h)) return std::nullopt;
  std::vector<unsigned> gc(g_colors.begin(), g_colors.end());
  std::vector<unsigned> hc(h_colors.begin(), h_colors.end());
  std::sort(gc.begin(), gc.end());
  std::sort(hc.begin(), hc.end());
  if (gc != hc) return std::nullopt;

  std::vector<Vertex> image(g.order());
  if (g.order() == 0) return image;
  if (!search(g, detail::partition_from_colors(g_colors), h, detail::partition_from_colors(h_colors), image)) {
    return std::nullopt;
  }
  return image;
}

bool are_isomorphic(const Graph& g, const Graph& h) {
  const std::vector<unsigned> gc(g.order(), 0);
  const std::vector<unsigned> hc(h.order(), 0);
  return find_isomorphism(g, gc, h, hc).has_value();
}

bool has_automorphism_mapping(const Graph& g, const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) {
    throw ValidationError("automorphism mapping needs equal-size sets, got " + std::to_string(a.size()) +
                          " and " + std::to_string(b.size()));
  }
  if (((a.bits() | b.bits()) & ~g.vertex_mask()) != 0) {
    throw ValidationError("vertex set exceeds graph order");
  }
  std::vector<unsigned> ac(g.order());
  std::vector<unsigned> bc(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    ac[v] = a.contains(v) ? 1U : 0U;
    bc[v] = b.contains(v) ? 1U : 0U;
  }
  return find_isomorphism(g, ac, g, bc).has_value();
}

}  // namespace eqlab
