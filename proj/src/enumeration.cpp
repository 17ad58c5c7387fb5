#include "eqlab/enumeration.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include <omp.h>

#include "eqlab/isomorphism.hpp"

namespace eqlab {

namespace {

Graph relabel(const Graph& g, const std::vector<Vertex>& labeling) {
  std::vector<Vertex> position(g.order());
  for (std::size_t p = 0; p < labeling.size(); ++p) position[labeling[p]] = static_cast<Vertex>(p);
  Graph h(g.order());
  for (auto [u, v] : g.edges()) h.add_edge(position[u], position[v]);
  return h;
}

using FormMap = std::map<CanonicalForm, Graph>;

GraphCatalog to_catalog(unsigned order, std::optional<unsigned> degree, FormMap&& forms) {
  GraphCatalog cat{order, degree, {}};
  cat.graphs.reserve(forms.size());
  for (auto& [form, g] : forms) cat.graphs.push_back(std::move(g));
  return cat;
}

// Same orbit under the subgroup generated by the labeller's automorphisms.
bool orbit_joined(const std::vector<std::vector<Vertex>>& gens, unsigned order, Vertex a, Vertex b) {
  std::vector<Vertex> parent(order);
  std::iota(parent.begin(), parent.end(), 0U);
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& gamma : gens) {
    for (Vertex x = 0; x < order; ++x) {
      const Vertex ra = find(x);
      const Vertex rb = find(gamma[x]);
      if (ra != rb) parent[ra] = rb;
    }
  }
  return find(a) == find(b);
}

GraphCatalog all_by_subsets(unsigned order) {
  std::vector<Edge> pairs;
  for (Vertex j = 1; j < order; ++j) {
    for (Vertex i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  FormMap forms;
  const std::uint64_t count = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    Graph g(order);
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      if ((mask >> e) & 1U) g.add_edge(pairs[e].first, pairs[e].second);
    }
    auto lab = canonical_labeling(g);
    if (!forms.contains(lab.form)) forms.emplace(std::move(lab.form), relabel(g, lab.labeling));
  }
  return to_catalog(order, std::nullopt, std::move(forms));
}

GraphCatalog all_by_augmentation(unsigned order) {
  const GraphCatalog parents = enumerate_all(order - 1);
  const Vertex fresh = order - 1;
  FormMap forms;
  for (const Graph& parent : parents.graphs) {
    std::set<CanonicalForm> siblings;
    for (Word nbrs = 0; nbrs < (Word{1} << fresh); ++nbrs) {
      Graph child(order);
      for (auto [u, v] : parent.edges()) child.add_edge(u, v);
      for (Word w = nbrs; w != 0; w &= w - 1) child.add_edge(fresh, static_cast<Vertex>(std::countr_zero(w)));

      auto lab = canonical_labeling(child);
      const Vertex last = lab.labeling.back();
      const bool canonical_parent =
          last == fresh || orbit_joined(lab.automorphisms, order, last, fresh) ||
          has_automorphism_mapping(child, VertexSet({fresh}, order), VertexSet({last}, order));
      if (!canonical_parent || !siblings.insert(lab.form).second) continue;
      Graph canon = relabel(child, lab.labeling);
      if (!forms.emplace(std::move(lab.form), std::move(canon)).second) {
        throw InvariantViolation("canonical augmentation produced a class from two parents at order " +
                                 std::to_string(order));
      }
    }
  }
  return to_catalog(order, std::nullopt, std::move(forms));
}

class RegularBuilder {
 public:
  RegularBuilder(unsigned order, unsigned degree) : n_(order), k_(degree), g_(order), deg_(order, 0) {}

  FormMap run() {
    row(0);
    return std::move(forms_);
  }

 private:
  void row(Vertex i) {
    if (i == n_) {
      auto lab = canonical_labeling(g_);
      if (!forms_.contains(lab.form)) forms_.emplace(std::move(lab.form), relabel(g_, lab.labeling));
      return;
    }
    const unsigned need = k_ - deg_[i];
    Word candidates = 0;
    for (Vertex j = i + 1; j < n_; ++j) {
      if (deg_[j] < k_) candidates |= Word{1} << j;
    }
    if (static_cast<unsigned>(std::popcount(candidates)) < need) return;

    // Unprocessed vertices only have edges to processed ones, so equal rows
    // mean interchangeable vertices. Classes in order of smallest member.
    std::vector<std::vector<Vertex>> classes;
    std::vector<Word> patterns;
    for (Word w = candidates; w != 0; w &= w - 1) {
      const auto j = static_cast<Vertex>(std::countr_zero(w));
      const auto it = std::find(patterns.begin(), patterns.end(), g_.adj(j));
      if (it == patterns.end()) {
        patterns.push_back(g_.adj(j));
        classes.push_back({j});
      } else {
        classes[static_cast<std::size_t>(it - patterns.begin())].push_back(j);
      }
    }
    choose(i, classes, 0, need);
  }

  void choose(Vertex i, const std::vector<std::vector<Vertex>>& classes, std::size_t c, unsigned need) {
    if (need == 0) {
      // Vertex j > i can still gain edges only from i+1..n-1 other than itself.
      for (Vertex j = i + 1; j < n_; ++j) {
        if (k_ - deg_[j] > n_ - i - 2) return;
      }
      row(i + 1);
      return;
    }
    if (c == classes.size()) return;
    unsigned later = 0;
    for (std::size_t d = c + 1; d < classes.size(); ++d) later += static_cast<unsigned>(classes[d].size());
    const auto size = static_cast<unsigned>(classes[c].size());
    const unsigned most = std::min(size, need);
    const unsigned least = need > later ? need - later : 0;
    for (unsigned take = most + 1; take-- > least;) {
      for (unsigned t = 0; t < take; ++t) connect(i, classes[c][t]);
      choose(i, classes, c + 1, need - take);
      for (unsigned t = 0; t < take; ++t) disconnect(i, classes[c][t]);
    }
  }

  void connect(Vertex a, Vertex b) {
    g_.add_edge(a, b);
    ++deg_[a];
    ++deg_[b];
  }
  void disconnect(Vertex a, Vertex b) {
    g_.remove_edge(a, b);
    --deg_[a];
    --deg_[b];
  }

  unsigned n_, k_;
  Graph g_;
  std::vector<unsigned> deg_;
  FormMap forms_;
};

}  // namespace

GraphCatalog enumerate_all(unsigned order) {
  if (order > kMaxCatalogOrder) {
    throw CapacityError("enumerate_all supports orders up to " + std::to_string(kMaxCatalogOrder) +
                        "; read larger catalogs from graph6 files instead");
  }
  if (order <= 6) return all_by_subsets(order);
  return all_by_augmentation(order);
}

GraphCatalog enumerate_regular(unsigned order, unsigned degree) {
  if (order > kMaxRegularCatalogOrder) {
    throw CapacityError("enumerate_regular supports orders up to " + std::to_string(kMaxRegularCatalogOrder));
  }
  if (degree >= order) {
    throw ValidationError("degree " + std::to_string(degree) + " needs more than " + std::to_string(order) +
                          " vertices");
  }
  if ((degree * order) % 2 != 0) {
    throw ValidationError("no " + std::to_string(degree) + "-regular graph has odd order " + std::to_string(order));
  }
  const unsigned co_degree = order - 1 - degree;
  if (degree > co_degree) {
    FormMap forms;
    for (const Graph& g : enumerate_regular(order, co_degree).graphs) {
      const Graph h = complement(g);
      auto lab = canonical_labeling(h);
      forms.emplace(std::move(lab.form), relabel(h, lab.labeling));
    }
    return to_catalog(order, degree, std::move(forms));
  }
  return to_catalog(order, degree, RegularBuilder(order, degree).run());
}

std::vector<SearchHit> search_property(const GraphCatalog& catalog, Property property, const OracleOptions& opts) {
  const auto count = static_cast<std::int64_t>(catalog.graphs.size());
  std::vector<std::optional<Verdict>> verdicts(catalog.graphs.size());
  OracleOptions inner = opts;
  inner.jobs = 1;
  if (opts.jobs <= 1) {
    for (std::int64_t i = 0; i < count; ++i) verdicts[i] = evaluate(property, catalog.graphs[i], inner);
  } else {
    // Exceptions cannot cross the parallel region; rethrow the first by index.
    std::vector<std::exception_ptr> errors(catalog.graphs.size());
#pragma omp parallel for num_threads(static_cast<int>(opts.jobs)) schedule(dynamic, 4)
    for (std::int64_t i = 0; i < count; ++i) {
      try {
        verdicts[i] = evaluate(property, catalog.graphs[i], inner);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  std::vector<SearchHit> hits;
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    if (verdicts[i]->holds) hits.push_back({catalog.graphs[i], *verdicts[i]});
  }
  return hits;
}

}  // namespace eqlab
