#include "eqlab/families.hpp"

#include <vector>

#include "eqlab/isomorphism.hpp"

namespace eqlab {

std::string_view family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::EMPTY_2NK1: return "EMPTY_2NK1";
    case FamilyKind::PERFECT_MATCHING_NK2: return "PERFECT_MATCHING_NK2";
    case FamilyKind::TWO_C4: return "TWO_C4";
    case FamilyKind::CROWN_KNN_MINUS_NK2: return "CROWN_KNN_MINUS_NK2";
    case FamilyKind::TWO_KN: return "TWO_KN";
    case FamilyKind::COMPLETE_K2N: return "COMPLETE_K2N";
    case FamilyKind::COCKTAIL_K2N_MINUS_NK2: return "COCKTAIL_K2N_MINUS_NK2";
    case FamilyKind::K8_MINUS_2C4: return "K8_MINUS_2C4";
    case FamilyKind::TWO_KN_PLUS_NK2: return "TWO_KN_PLUS_NK2";
    case FamilyKind::COMPLETE_BIPARTITE_KNN: return "COMPLETE_BIPARTITE_KNN";
  }
  return "?";
}

std::optional<FamilyKind> parse_family(std::string_view name) {
  for (FamilyKind k : kAllFamilies) {
    if (family_name(k) == name) return k;
  }
  return std::nullopt;
}

std::string FamilyLabel::to_string() const {
  return std::string(family_name(kind)) + "(n=" + std::to_string(n) + ")";
}

FamilyKind complement_pairing(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::EMPTY_2NK1: return FamilyKind::COMPLETE_K2N;
    case FamilyKind::COMPLETE_K2N: return FamilyKind::EMPTY_2NK1;
    case FamilyKind::PERFECT_MATCHING_NK2: return FamilyKind::COCKTAIL_K2N_MINUS_NK2;
    case FamilyKind::COCKTAIL_K2N_MINUS_NK2: return FamilyKind::PERFECT_MATCHING_NK2;
    case FamilyKind::TWO_C4: return FamilyKind::K8_MINUS_2C4;
    case FamilyKind::K8_MINUS_2C4: return FamilyKind::TWO_C4;
    case FamilyKind::CROWN_KNN_MINUS_NK2: return FamilyKind::TWO_KN_PLUS_NK2;
    case FamilyKind::TWO_KN_PLUS_NK2: return FamilyKind::CROWN_KNN_MINUS_NK2;
    case FamilyKind::TWO_KN: return FamilyKind::COMPLETE_BIPARTITE_KNN;
    case FamilyKind::COMPLETE_BIPARTITE_KNN: return FamilyKind::TWO_KN;
  }
  return kind;
}

Graph generate(const FamilyLabel& label) {
  const unsigned n = label.n;
  if (n == 0) throw ValidationError("family size parameter must be at least 1");
  if ((label.kind == FamilyKind::TWO_C4 || label.kind == FamilyKind::K8_MINUS_2C4) && n != 4) {
    throw ValidationError(std::string(family_name(label.kind)) + " exists only for n = 4");
  }
  if (2 * n > kMaxOrder) throw CapacityError("family order " + std::to_string(2 * n) + " exceeds 64");

  Graph g(2 * n);
  switch (label.kind) {
    case FamilyKind::EMPTY_2NK1:
      break;
    case FamilyKind::PERFECT_MATCHING_NK2:
      for (Vertex i = 0; i < n; ++i) g.add_edge(i, n + i);
      break;
    case FamilyKind::TWO_C4:
      for (Vertex base : {0U, 4U}) {
        for (Vertex i = 0; i < 4; ++i) g.add_edge(base + i, base + (i + 1) % 4);
      }
      break;
    case FamilyKind::CROWN_KNN_MINUS_NK2:
      for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = 0; j < n; ++j) {
          if (i != j) g.add_edge(i, n + j);
        }
      }
      break;
    case FamilyKind::TWO_KN:
      for (Vertex base : {0U, n}) {
        for (Vertex i = 0; i < n; ++i) {
          for (Vertex j = i + 1; j < n; ++j) g.add_edge(base + i, base + j);
        }
      }
      break;
    case FamilyKind::COMPLETE_BIPARTITE_KNN:
      for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = 0; j < n; ++j) g.add_edge(i, n + j);
      }
      break;
    case FamilyKind::COMPLETE_K2N:
    case FamilyKind::COCKTAIL_K2N_MINUS_NK2:
    case FamilyKind::K8_MINUS_2C4:
    case FamilyKind::TWO_KN_PLUS_NK2:
      return complement(generate({complement_pairing(label.kind), n}));
  }
  return g;
}

namespace {

bool is_bipartite(const Graph& g) {
  Word unseen = g.vertex_mask();
  while (unseen != 0) {
    const Word start = unseen & (~unseen + 1);
    Word side[2] = {start, 0};
    Word frontier = start;
    int parity = 0;
    while (frontier != 0) {
      Word next = 0;
      for (Word w = frontier; w != 0; w &= w - 1) next |= g.adj(static_cast<Vertex>(std::countr_zero(w)));
      parity ^= 1;
      if ((next & side[parity ^ 1]) != 0) return false;
      frontier = next & ~side[parity];
      side[parity] |= next;
    }
    unseen &= ~(side[0] | side[1]);
  }
  return true;
}

// Families whose members have degree at most n-1, read off the degree k.
std::set<FamilyKind> low_degree_candidates(const Graph& g, unsigned k) {
  const unsigned n = g.order() / 2;
  std::set<FamilyKind> out;
  if (k == 0) out.insert(FamilyKind::EMPTY_2NK1);
  if (k == 1) out.insert(FamilyKind::PERFECT_MATCHING_NK2);
  if (k > n - 1) return out;

  const auto comps = connected_components(g);
  const bool two_halves = comps.size() == 2 && comps[0].size() == n && comps[1].size() == n;
  if (k == n - 1) {
    // Two (n-1)-regular components on n vertices are cliques.
    if (two_halves) out.insert(FamilyKind::TWO_KN);
    // An (n-1)-regular bipartite graph on 2n vertices has sides of size n and
    // misses exactly one vertex across.
    if (is_bipartite(g)) out.insert(FamilyKind::CROWN_KNN_MINUS_NK2);
  }
  // 2-regular on 4 vertices per component is a quadrilateral.
  if (g.order() == 8 && k == 2 && two_halves) out.insert(FamilyKind::TWO_C4);
  return out;
}

}  // namespace

Classification recognize(const Graph& g) {
  Classification result;
  if (g.order() == 0 || g.order() % 2 != 0) return result;
  const auto k = regular_degree(g);
  if (!k) return result;
  const unsigned n = g.order() / 2;

  std::set<FamilyKind> candidates = low_degree_candidates(g, *k);
  const Graph gc = complement(g);
  for (FamilyKind kind : low_degree_candidates(gc, g.order() - 1 - *k)) {
    candidates.insert(complement_pairing(kind));
  }
  for (FamilyKind kind : candidates) {
    const FamilyLabel label{kind, n};
    if (are_isomorphic(g, generate(label))) result.labels.insert(label);
  }
  return result;
}

}  // namespace eqlab
