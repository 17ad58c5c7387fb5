#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "eqlab/graph.hpp"

namespace eqlab {

// The ten families of degree-equipartite graphs of order 2n.
enum class FamilyKind {
  EMPTY_2NK1,               // 2n K_1
  PERFECT_MATCHING_NK2,     // n K_2
  TWO_C4,                   // 2 C_4, order 8 only
  CROWN_KNN_MINUS_NK2,      // K_{n,n} minus a perfect matching
  TWO_KN,                   // 2 K_n
  COMPLETE_K2N,             // K_{2n}
  COCKTAIL_K2N_MINUS_NK2,   // K_{2n} minus a perfect matching
  K8_MINUS_2C4,             // complement of 2 C_4
  TWO_KN_PLUS_NK2,          // 2 K_n joined by a perfect matching
  COMPLETE_BIPARTITE_KNN,   // K_{n,n}
};

inline constexpr FamilyKind kAllFamilies[] = {
    FamilyKind::EMPTY_2NK1,          FamilyKind::PERFECT_MATCHING_NK2,   FamilyKind::TWO_C4,
    FamilyKind::CROWN_KNN_MINUS_NK2, FamilyKind::TWO_KN,                 FamilyKind::COMPLETE_K2N,
    FamilyKind::COCKTAIL_K2N_MINUS_NK2, FamilyKind::K8_MINUS_2C4,        FamilyKind::TWO_KN_PLUS_NK2,
    FamilyKind::COMPLETE_BIPARTITE_KNN,
};

std::string_view family_name(FamilyKind kind);
std::optional<FamilyKind> parse_family(std::string_view name);

struct FamilyLabel {
  FamilyKind kind;
  unsigned n;  // half the order

  std::string to_string() const;  // "CROWN_KNN_MINUS_NK2(n=3)"
  friend auto operator<=>(const FamilyLabel&, const FamilyLabel&) = default;
};

struct Classification {
  std::set<FamilyLabel> labels;
  bool in_characterization() const noexcept { return !labels.empty(); }
};

// Involution pairing each family with its complement family.
FamilyKind complement_pairing(FamilyKind kind);

// Vertices 0..n-1 form the first side or component, n..2n-1 the second;
// matchings pair i with n+i. Throws ValidationError for n = 0, or n != 4 on
// the two order-8 families.
Graph generate(const FamilyLabel& label);

// Structural membership test following the degree case analysis:
// k = 0, k = 1, k = n-1 (two cliques or crown) and the 2C_4 case, applied to
// g and to its complement with labels mapped through complement_pairing.
// Each candidate is confirmed by isomorphism with generate(label).
Classification recognize(const Graph& g);

}  // namespace eqlab
