#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "eqlab/graph.hpp"

namespace eqlab {

// C(n, k); 0 when k > n. Exact for n <= 64, k <= 32.
std::uint64_t binomial(unsigned n, unsigned k);

// The n-subsets of {0..2n-1} that contain vertex 0, ranked in lexicographic
// order of their ascending member lists. Every bisection {A, B} appears once,
// as the half holding vertex 0.
class HalfSetSpace {
 public:
  explicit HalfSetSpace(unsigned order);

  unsigned order() const noexcept { return order_; }
  std::uint64_t size() const noexcept { return size_; }

  Word unrank(std::uint64_t rank) const;
  std::uint64_t rank(Word half) const;

 private:
  unsigned order_;
  std::uint64_t size_;
};

namespace scan {

// Returns true when the half-set (and its complement) violate the property.
// Must be safe to call concurrently.
using Predicate = std::function<bool(Word)>;

struct FirstViolation {
  std::uint64_t rank;
  Word half;
};

// Reference scan: walks combinations with a successor step, one at a time.
std::optional<FirstViolation> serial(unsigned order, const Predicate& violates);

// OpenMP scan over contiguous rank chunks; returns the same minimum-rank
// violation as serial() for any job count.
std::optional<FirstViolation> parallel(unsigned order, const Predicate& violates, unsigned jobs);

}  // namespace scan

}  // namespace eqlab
