#include "eqlab/oracles.hpp"

#include <array>
#include <string>

#include "eqlab/halfsets.hpp"
#include "eqlab/isomorphism.hpp"
#include "eqlab/spectral.hpp"

namespace eqlab {

namespace {

bool unequal_edges(const Graph& g, Word a, Word b) {
  return induced_edge_count(g, a) != induced_edge_count(g, b);
}

// Equal induced degree multisets iff equal degree histograms.
bool unequal_degree_sequences(const Graph& g, Word a, Word b) {
  std::array<int, kMaxOrder> hist{};
  for (Word w = a; w != 0; w &= w - 1) ++hist[std::popcount(g.adj(static_cast<Vertex>(std::countr_zero(w))) & a)];
  for (Word w = b; w != 0; w &= w - 1) --hist[std::popcount(g.adj(static_cast<Vertex>(std::countr_zero(w))) & b)];
  for (int h : hist) {
    if (h != 0) return true;
  }
  return false;
}

void check_oracle_input(const Graph& g, const OracleOptions& opts) {
  if (g.order() % 2 != 0) {
    throw ValidationError("equipartite properties need an even order, got " + std::to_string(g.order()));
  }
  if (g.order() > kOracleOrderCeiling && !opts.force) {
    throw CapacityError("order " + std::to_string(g.order()) + " is above the oracle ceiling of " +
                        std::to_string(kOracleOrderCeiling) + "; pass force to run anyway");
  }
}

}  // namespace

std::string_view property_name(Property p) {
  switch (p) {
    case Property::DegreeEquipartite: return "degree-equipartite";
    case Property::WeaklyEquipartite: return "weakly-equipartite";
    case Property::Equipartite: return "equipartite";
    case Property::SpectralEquipartite: return "spectral-equipartite";
    case Property::BalancedBisections: return "balanced-bisections";
  }
  return "?";
}

std::optional<Property> parse_property(std::string_view name) {
  for (Property p : kAllProperties) {
    if (property_name(p) == name) return p;
  }
  return std::nullopt;
}

bool violates(Property p, const Graph& g, Word a) {
  const Word b = g.vertex_mask() & ~a;
  switch (p) {
    case Property::BalancedBisections:
      return unequal_edges(g, a, b);
    case Property::DegreeEquipartite:
      return unequal_degree_sequences(g, a, b);
    case Property::WeaklyEquipartite:
      return unequal_degree_sequences(g, a, b) || !are_isomorphic(induced_subgraph(g, a), induced_subgraph(g, b));
    case Property::Equipartite:
      return unequal_degree_sequences(g, a, b) ||
             !has_automorphism_mapping(g, VertexSet(a, g.order()), VertexSet(b, g.order()));
    case Property::SpectralEquipartite:
      // Isospectral halves share c_{d-2} = -|E|, so the edge test decides most cases.
      return unequal_edges(g, a, b) || !are_isospectral(induced_subgraph(g, a), induced_subgraph(g, b));
  }
  return false;
}

Verdict evaluate(Property p, const Graph& g, const OracleOptions& opts) {
  check_oracle_input(g, opts);
  const HalfSetSpace space(g.order());
  const scan::Predicate predicate = [&](Word a) { return violates(p, g, a); };
  const auto found = opts.jobs <= 1 ? scan::serial(g.order(), predicate)
                                    : scan::parallel(g.order(), predicate, opts.jobs);

  // A non-regular graph has an unbalanced bisection, and every predicate above
  // rejects unequal edge counts, so the scan cannot come back empty.
  const bool regular = regular_degree(g).has_value();
  if (!found) {
    if (!regular) {
      throw InvariantViolation("non-regular graph passed " + std::string(property_name(p)));
    }
    return Verdict{true, std::nullopt, space.size()};
  }
  return Verdict{false, VertexSet(found->half, g.order()), found->rank + 1};
}

Verdict is_degree_equipartite(const Graph& g, const OracleOptions& opts) {
  return evaluate(Property::DegreeEquipartite, g, opts);
}

Verdict is_weakly_equipartite(const Graph& g, const OracleOptions& opts) {
  return evaluate(Property::WeaklyEquipartite, g, opts);
}

Verdict is_equipartite(const Graph& g, const OracleOptions& opts) {
  return evaluate(Property::Equipartite, g, opts);
}

Verdict is_spectral_equipartite(const Graph& g, const OracleOptions& opts) {
  return evaluate(Property::SpectralEquipartite, g, opts);
}

Verdict has_balanced_bisections(const Graph& g, const OracleOptions& opts) {
  return evaluate(Property::BalancedBisections, g, opts);
}

}  // namespace eqlab
