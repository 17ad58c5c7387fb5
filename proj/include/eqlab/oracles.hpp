#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "eqlab/graph.hpp"

namespace eqlab {

enum class Property {
  DegreeEquipartite,
  WeaklyEquipartite,
  Equipartite,
  SpectralEquipartite,
  BalancedBisections,
};

inline constexpr Property kAllProperties[] = {
    Property::DegreeEquipartite, Property::WeaklyEquipartite, Property::Equipartite,
    Property::SpectralEquipartite, Property::BalancedBisections,
};

// CLI identifiers: degree-equipartite, weakly-equipartite, equipartite,
// spectral-equipartite, balanced-bisections.
std::string_view property_name(Property p);
std::optional<Property> parse_property(std::string_view name);

// Outcome of a brute-force decider. A witness is the half A (the one holding
// vertex 0) of the lexicographically first bisection that breaks the property.
struct Verdict {
  bool holds = true;
  std::optional<VertexSet> witness;
  // Half-sets visited in serial enumeration order up to and including the
  // witness, or all of them when the property holds.
  std::uint64_t subsets_examined = 0;
};

// Orders above this are refused unless force is set.
inline constexpr unsigned kOracleOrderCeiling = 28;

struct OracleOptions {
  unsigned jobs = 1;   // 1 runs the serial reference scan
  bool force = false;  // lift kOracleOrderCeiling
};

Verdict is_degree_equipartite(const Graph& g, const OracleOptions& opts = {});
Verdict is_weakly_equipartite(const Graph& g, const OracleOptions& opts = {});
Verdict is_equipartite(const Graph& g, const OracleOptions& opts = {});
Verdict is_spectral_equipartite(const Graph& g, const OracleOptions& opts = {});
Verdict has_balanced_bisections(const Graph& g, const OracleOptions& opts = {});

Verdict evaluate(Property p, const Graph& g, const OracleOptions& opts = {});

// One direct evaluation of the defining comparison on (a, V \ a).
// True when that bisection violates p.
bool violates(Property p, const Graph& g, Word a);

}  // namespace eqlab
