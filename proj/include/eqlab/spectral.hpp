#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "eqlab/graph.hpp"

namespace eqlab {

using BigInt = boost::multiprecision::cpp_int;

// det(xI - A) as c_0 + c_1 x + ... + c_d x^d, c_d = 1, d = order.
struct CharPoly {
  std::vector<BigInt> coeffs;

  unsigned degree() const noexcept { return coeffs.empty() ? 0U : static_cast<unsigned>(coeffs.size() - 1); }
  std::string to_string() const;  // "x^4 - 4x^2"

  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

// Faddeev-LeVerrier over the integers. Runs in checked 64-bit arithmetic
// and redoes the computation in BigInt if any step would overflow.
CharPoly characteristic_polynomial(const Graph& g);

bool are_isospectral(const Graph& g, const Graph& h);

// Checks -c_{d-2} == |E(g)| (trace(A^2) = 2m) and c_{d-1} == 0.
// Throws InvariantViolation on mismatch; returns true otherwise.
bool edge_count_spectral_identity(const Graph& g);

}  // namespace eqlab
