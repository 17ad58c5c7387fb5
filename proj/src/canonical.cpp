#include "eqlab/canonical.hpp"

#include <numeric>

#include "refine.hpp"

namespace eqlab {

std::size_t CanonicalFormHash::operator()(const CanonicalForm& f) const noexcept {
  std::size_t h = f.order * 0x9e3779b97f4a7c15ULL;
  for (Word w : f.bits) h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

CanonicalForm form_under(const Graph& g, const std::vector<Vertex>& sequence) {
  const unsigned n = g.order();
  const std::size_t nbits = static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2;
  CanonicalForm f{n, std::vector<Word>((nbits + 63) / 64, 0)};
  std::size_t t = 0;
  for (unsigned j = 1; j < n; ++j) {
    const Word row = g.adj(sequence[j]);
    for (unsigned i = 0; i < j; ++i, ++t) {
      if ((row >> sequence[i]) & 1U) f.bits[t / 64] |= Word{1} << (63 - t % 64);
    }
  }
  return f;
}

namespace {

using detail::Partition;

class Searcher {
 public:
  explicit Searcher(const Graph& g) : g_(g) {}

  CanonicalLabeling run() {
    visit(detail::unit_partition(g_.order()));
    return CanonicalLabeling{std::move(best_), std::move(best_seq_), std::move(autos_)};
  }

 private:
  void visit(Partition p) {
    detail::refine(g_, p);
    const std::size_t t = p.target_cell();
    if (t == p.cells.size()) {
      leaf(detail::discrete_order(p));
      return;
    }
    std::vector<Vertex> explored;
    for (Word w = p.cells[t]; w != 0; w &= w - 1) {
      const auto v = static_cast<Vertex>(std::countr_zero(w));
      if (same_orbit_as_explored(v, explored)) continue;
      Partition child = p;
      detail::individualize(child, v);
      fixed_.push_back(v);
      visit(std::move(child));
      fixed_.pop_back();
      explored.push_back(v);
    }
  }

  // Orbits of the group generated by stored automorphisms that fix the
  // current individualised prefix pointwise. Children in one orbit have
  // identical subtrees.
  bool same_orbit_as_explored(Vertex v, const std::vector<Vertex>& explored) {
    if (explored.empty() || autos_.empty()) return false;
    std::vector<Vertex> parent(g_.order());
    std::iota(parent.begin(), parent.end(), 0U);
    auto find = [&](Vertex x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gamma : autos_) {
      bool fixes = true;
      for (Vertex f : fixed_) {
        if (gamma[f] != f) {
          fixes = false;
          break;
        }
      }
      if (!fixes) continue;
      for (Vertex x = 0; x < g_.order(); ++x) {
        const Vertex a = find(x);
        const Vertex b = find(gamma[x]);
        if (a != b) parent[a] = b;
      }
    }
    const Vertex root = find(v);
    for (Vertex x : explored) {
      if (find(x) == root) return true;
    }
    return false;
  }

  void leaf(std::vector<Vertex> seq) {
    CanonicalForm f = form_under(g_, seq);
    if (!have_best_) {
      have_best_ = true;
      first_ = best_ = f;
      first_seq_ = best_seq_ = seq;
      return;
    }
    if (f == first_) {
      record_automorphism(first_seq_, seq);
    } else if (f == best_) {
      record_automorphism(best_seq_, seq);
    } else if (f < best_) {
      best_ = std::move(f);
      best_seq_ = std::move(seq);
    }
  }

  void record_automorphism(const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
    std::vector<Vertex> gamma(g_.order());
    bool identity = true;
    for (std::size_t p = 0; p < from.size(); ++p) {
      gamma[from[p]] = to[p];
      identity = identity && from[p] == to[p];
    }
    if (!identity) autos_.push_back(std::move(gamma));
  }

  const Graph& g_;
  bool have_best_ = false;
  CanonicalForm first_, best_;
  std::vector<Vertex> first_seq_, best_seq_;
  std::vector<std::vector<Vertex>> autos_;
  std::vector<Vertex> fixed_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
  if (g.order() == 0) return CanonicalLabeling{CanonicalForm{0, {}}, {}, {}};
  return Searcher(g).run();
}

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

Graph canonical_graph(const Graph& g) {
  const auto lab = canonical_labeling(g);
  std::vector<Vertex> position(g.order());
  for (std::size_t p = 0; p < lab.labeling.size(); ++p) position[lab.labeling[p]] = static_cast<Vertex>(p);
  Graph h(g.order());
  for (auto [u, v] : g.edges()) h.add_edge(position[u], position[v]);
  return h;
}

}  // namespace eqlab
