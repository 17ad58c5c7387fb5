#include "refine.hpp"

#include <algorithm>
#include <map>

namespace eqlab::detail {

bool Partition::discrete() const noexcept {
  return std::all_of(cells.begin(), cells.end(), [](Word c) { return std::popcount(c) == 1; });
}

std::size_t Partition::target_cell() const noexcept {
  std::size_t best = cells.size();
  int best_size = 65;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const int s = std::popcount(cells[i]);
    if (s > 1 && s < best_size) {
      best = i;
      best_size = s;
    }
  }
  return best;
}

std::size_t Partition::cell_of(Vertex v) const noexcept {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if ((cells[i] >> v) & 1U) return i;
  }
  return cells.size();
}

Partition partition_from_colors(std::span<const unsigned> colors) {
  std::map<unsigned, Word> by_color;
  for (std::size_t v = 0; v < colors.size(); ++v) by_color[colors[v]] |= Word{1} << v;
  Partition p;
  for (const auto& [color, mask] : by_color) p.cells.push_back(mask);
  return p;
}

Partition unit_partition(unsigned order) {
  Partition p;
  if (order > 0) p.cells.push_back(low_mask(order));
  return p;
}

void individualize(Partition& p, Vertex v) {
  const std::size_t i = p.cell_of(v);
  const Word single = Word{1} << v;
  const Word rest = p.cells[i] & ~single;
  if (rest == 0) return;
  p.cells[i] = single;
  p.cells.insert(p.cells.begin() + static_cast<std::ptrdiff_t>(i) + 1, rest);
}

void refine(const Graph& g, Partition& p) {
  std::array<Word, kMaxOrder + 1> bucket{};
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < p.cells.size(); ++s) {
      const Word splitter = p.cells[s];
      std::size_t c = 0;
      while (c < p.cells.size()) {
        const Word cell = p.cells[c];
        if (std::popcount(cell) == 1) {
          ++c;
          continue;
        }
        unsigned lo = kMaxOrder + 1;
        unsigned hi = 0;
        for (Word w = cell; w != 0; w &= w - 1) {
          const auto v = static_cast<Vertex>(std::countr_zero(w));
          const auto k = static_cast<unsigned>(std::popcount(g.adj(v) & splitter));
          bucket[k] |= Word{1} << v;
          lo = std::min(lo, k);
          hi = std::max(hi, k);
        }
        if (lo == hi) {
          bucket[lo] = 0;
          ++c;
          continue;
        }
        std::vector<Word> pieces;
        for (unsigned k = lo; k <= hi; ++k) {
          if (bucket[k] != 0) pieces.push_back(bucket[k]);
          bucket[k] = 0;
        }
        p.cells.erase(p.cells.begin() + static_cast<std::ptrdiff_t>(c));
        p.cells.insert(p.cells.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
        if (s > c) s += pieces.size() - 1;
        c += pieces.size();
        changed = true;
      }
    }
  }
}

bool compatible(const Graph& g, const Partition& p, const Graph& h, const Partition& q) {
  if (p.cells.size() != q.cells.size()) return false;
  for (std::size_t i = 0; i < p.cells.size(); ++i) {
    if (std::popcount(p.cells[i]) != std::popcount(q.cells[i])) return false;
  }
  for (std::size_t i = 0; i < p.cells.size(); ++i) {
    const auto u = static_cast<Vertex>(std::countr_zero(p.cells[i]));
    const auto w = static_cast<Vertex>(std::countr_zero(q.cells[i]));
    for (std::size_t j = 0; j < p.cells.size(); ++j) {
      if (std::popcount(g.adj(u) & p.cells[j]) != std::popcount(h.adj(w) & q.cells[j])) return false;
    }
  }
  return true;
}

std::vector<Vertex> discrete_order(const Partition& p) {
  std::vector<Vertex> order;
  order.reserve(p.cells.size());
  for (Word c : p.cells) order.push_back(static_cast<Vertex>(std::countr_zero(c)));
  return order;
}

}  // namespace eqlab::detail
