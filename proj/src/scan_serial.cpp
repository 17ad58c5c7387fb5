#include <vector>

#include "eqlab/halfsets.hpp"

namespace eqlab::scan {

std::optional<FirstViolation> serial(unsigned order, const Predicate& violates) {
  const HalfSetSpace space(order);
  if (space.size() == 0) return std::nullopt;
  const unsigned n = order / 2;

  // idx = sorted members, idx[0] = 0 stays fixed.
  std::vector<unsigned> idx(n);
  for (unsigned i = 0; i < n; ++i) idx[i] = i;

  for (std::uint64_t rank = 0;; ++rank) {
    Word half = 0;
    for (unsigned v : idx) half |= Word{1} << v;
    if (violates(half)) return FirstViolation{rank, half};

    // Lexicographic successor over positions 1..n-1 with values <= order-1.
    unsigned i = n;
    while (i > 1 && idx[i - 1] == order - n + (i - 1)) --i;
    if (i == 1) break;
    ++idx[i - 1];
    for (unsigned j = i; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }
  return std::nullopt;
}

}  // namespace eqlab::scan
