#include "eqlab/halfsets.hpp"

#include <array>
#include <string>

namespace eqlab {

namespace {

struct BinomialTable {
  std::array<std::array<std::uint64_t, kMaxOrder + 1>, kMaxOrder + 1> c{};
  BinomialTable() {
    for (unsigned n = 0; n <= kMaxOrder; ++n) {
      c[n][0] = 1;
      for (unsigned k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
    }
  }
};

const BinomialTable& table() {
  static const BinomialTable t;
  return t;
}

}  // namespace

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n || n > kMaxOrder) return 0;
  return table().c[n][k];
}

HalfSetSpace::HalfSetSpace(unsigned order) : order_(order) {
  if (order % 2 != 0) throw ValidationError("half-sets need an even order, got " + std::to_string(order));
  if (order > kMaxOrder) throw CapacityError("order " + std::to_string(order) + " exceeds 64");
  size_ = order == 0 ? 0 : binomial(order - 1, order / 2 - 1);
}

// After fixing vertex 0, a half-set is an (n-1)-subset of {1..2n-1}; the
// number of completions once element e is chosen for the next free slot is
// C(2n-1-e, slots left after it).
Word HalfSetSpace::unrank(std::uint64_t rank) const {
  const unsigned last = order_ - 1;
  unsigned slots = order_ / 2 - 1;
  Word half = 1;
  unsigned next = 1;
  while (slots > 0) {
    for (unsigned e = next; e <= last; ++e) {
      const std::uint64_t count = binomial(last - e, slots - 1);
      if (rank < count) {
        half |= Word{1} << e;
        next = e + 1;
        break;
      }
      rank -= count;
    }
    --slots;
  }
  return half;
}

std::uint64_t HalfSetSpace::rank(Word half) const {
  const unsigned last = order_ - 1;
  unsigned slots = order_ / 2 - 1;
  std::uint64_t r = 0;
  unsigned next = 1;
  for (Word w = half & ~Word{1}; w != 0; w &= w - 1) {
    const auto e = static_cast<unsigned>(std::countr_zero(w));
    for (unsigned skipped = next; skipped < e; ++skipped) r += binomial(last - skipped, slots - 1);
    next = e + 1;
    --slots;
  }
  return r;
}

}  // namespace eqlab
