#include <algorithm>
#include <atomic>
#include <vector>

#include <omp.h>

#include "eqlab/halfsets.hpp"

namespace eqlab::scan {

namespace {

// Lexicographic successor on the mask: the highest member below the block
// packed against order-1 moves up by one and the block re-packs behind it.
// Returns 0 once only vertex 0 could move.
Word lex_successor(Word half, unsigned order) {
  unsigned trailing = 0;  // members already packed at the top end
  for (unsigned v = order; v-- > 1;) {
    if (((half >> v) & 1U) == 0) break;
    ++trailing;
  }
  Word rest = half & ~(low_mask(order) & ~low_mask(order - trailing));
  const auto top = static_cast<unsigned>(63 - std::countl_zero(rest));
  if (top == 0) return 0;
  rest &= ~(Word{1} << top);
  return rest | (low_mask(top + 2 + trailing) & ~low_mask(top + 1));
}

}  // namespace

std::optional<FirstViolation> parallel(unsigned order, const Predicate& violates, unsigned jobs) {
  const HalfSetSpace space(order);
  const std::uint64_t total = space.size();
  if (total == 0) return std::nullopt;
  jobs = std::max(1U, jobs);

  const std::uint64_t chunk = std::max<std::uint64_t>(1, total / (std::uint64_t{jobs} * 64));
  const auto chunks = static_cast<std::int64_t>((total + chunk - 1) / chunk);
  std::atomic<std::uint64_t> best{total};

#pragma omp parallel for num_threads(static_cast<int>(jobs)) schedule(dynamic, 1)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * chunk;
    const std::uint64_t end = std::min(total, begin + chunk);
    if (begin >= best.load(std::memory_order_relaxed)) continue;
    Word half = space.unrank(begin);
    for (std::uint64_t r = begin; r < end; ++r) {
      if (r >= best.load(std::memory_order_relaxed)) break;
      if (violates(half)) {
        std::uint64_t seen = best.load(std::memory_order_relaxed);
        while (r < seen && !best.compare_exchange_weak(seen, r, std::memory_order_relaxed)) {
        }
        break;
      }
      if (r + 1 < end) half = lex_successor(half, order);
    }
  }

  const std::uint64_t found = best.load();
  if (found == total) return std::nullopt;
  return FirstViolation{found, space.unrank(found)};
}

}  // namespace eqlab::scan
