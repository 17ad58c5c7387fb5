#include "eqlab/spectral.hpp"

#include <cstdint>
#include <optional>

namespace eqlab {

namespace {

struct Overflow {};

// Checked int64 arithmetic; throws Overflow so the caller can retry in BigInt.
struct Checked {
  static std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static std::int64_t neg(std::int64_t a) {
    if (a == INT64_MIN) throw Overflow{};
    return -a;
  }
};

struct Exact {
  static BigInt add(const BigInt& a, const BigInt& b) { return a + b; }
  static BigInt neg(const BigInt& a) { return -a; }
};

// M_0 = 0, c_d = 1; M_k = A M_{k-1} + c_{d-k+1} I, c_{d-k} = -tr(A M_k) / k.
// A is 0/1, so A*M is a sum of neighbour rows.
template <typename T, typename Ops>
std::vector<T> faddeev_leverrier(const Graph& g) {
  const unsigned d = g.order();
  std::vector<T> c(d + 1, T{0});
  c[d] = T{1};
  std::vector<T> m(static_cast<std::size_t>(d) * d, T{0});
  std::vector<T> am(static_cast<std::size_t>(d) * d, T{0});
  for (unsigned k = 1; k <= d; ++k) {
    // m <- A*m + c_{d-k+1} I
    for (unsigned i = 0; i < d; ++i) {
      for (unsigned j = 0; j < d; ++j) {
        T s{0};
        for (Word w = g.adj(i); w != 0; w &= w - 1) {
          s = Ops::add(s, m[static_cast<std::size_t>(std::countr_zero(w)) * d + j]);
        }
        am[static_cast<std::size_t>(i) * d + j] = s;
      }
    }
    for (unsigned i = 0; i < d; ++i) {
      am[static_cast<std::size_t>(i) * d + i] = Ops::add(am[static_cast<std::size_t>(i) * d + i], c[d - k + 1]);
    }
    m.swap(am);
    // tr(A M_k) = sum_i sum_{l in N(i)} M_k[l][i]
    T trace{0};
    for (unsigned i = 0; i < d; ++i) {
      for (Word w = g.adj(i); w != 0; w &= w - 1) {
        trace = Ops::add(trace, m[static_cast<std::size_t>(std::countr_zero(w)) * d + i]);
      }
    }
    c[d - k] = Ops::neg(trace) / static_cast<T>(k);
  }
  return c;
}

}  // namespace

CharPoly characteristic_polynomial(const Graph& g) {
  CharPoly p;
  try {
    const auto small = faddeev_leverrier<std::int64_t, Checked>(g);
    p.coeffs.assign(small.begin(), small.end());
  } catch (const Overflow&) {
    p.coeffs = faddeev_leverrier<BigInt, Exact>(g);
  }
  return p;
}

bool are_isospectral(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  return characteristic_polynomial(g) == characteristic_polynomial(h);
}

bool edge_count_spectral_identity(const Graph& g) {
  const CharPoly p = characteristic_polynomial(g);
  const unsigned d = p.degree();
  if (p.coeffs.size() != g.order() + 1U || p.coeffs[d] != 1) {
    throw InvariantViolation("characteristic polynomial is not monic of degree " + std::to_string(g.order()));
  }
  if (d >= 1 && p.coeffs[d - 1] != 0) {
    throw InvariantViolation("x^(d-1) coefficient is nonzero although trace(A) = 0");
  }
  if (d >= 2 && -p.coeffs[d - 2] != BigInt(g.edge_count())) {
    throw InvariantViolation("-c_{d-2} = " + BigInt(-p.coeffs[d - 2]).str() + " but the graph has " +
                             std::to_string(g.edge_count()) + " edges");
  }
  return true;
}

std::string CharPoly::to_string() const {
  std::string out;
  for (unsigned i = degree() + 1; i-- > 0;) {
    const BigInt& c = coeffs[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mag != 1 || i == 0) out += mag.str();
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace eqlab
