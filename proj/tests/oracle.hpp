#pragma once

// Brute-force reference routes for the tests. Nothing here calls the library
// code it is used to check: digit sums come from repeated division, the
// carry-free test from digit-sum additivity, and S(x) entries from a literal
// Kronecker product of 2x2 factors.

#include <cstdint>
#include <vector>

#include "sierp/rational.hpp"
#include "sierp/tmword.hpp"
#include "sierp/trimatrix.hpp"

namespace oracle {

using sierp::Rational;

inline unsigned digit_sum(std::uint64_t n) {
  unsigned s = 0;
  while (n > 0) {
    s += n % 2;
    n /= 2;
  }
  return s;
}

// i + j carries in base 2 exactly when the digit sum drops.
inline bool no_carry(std::uint64_t i, std::uint64_t j) { return digit_sum(i + j) == digit_sum(i) + digit_sum(j); }

inline Rational power(const Rational& x, unsigned e) {
  Rational r(1);
  for (unsigned t = 0; t < e; ++t) r *= x;
  return r;
}

// Entry of S(x) straight from its definition.
inline Rational s_entry(const Rational& x, std::uint64_t i, std::uint64_t j) {
  if (i < j || !no_carry(i - j, j)) return Rational(0);
  return power(x, digit_sum(i - j));
}

// Entry (i, j) of the k-fold Kronecker power of [[1, 0], [x, 1]]: the product
// over bit positions of factor[bit of i][bit of j].
inline Rational kron_entry(const Rational& x, unsigned k, std::uint64_t i, std::uint64_t j) {
  Rational r(1);
  for (unsigned p = 0; p < k; ++p) {
    const unsigned bi = (i >> p) & 1, bj = (j >> p) & 1;
    if (bi == 0 && bj == 1) return Rational(0);
    if (bi == 1 && bj == 0) r *= x;
  }
  return r;
}

// (S(x) S(y))_{ij} summed over every k in [j, i], no pruning.
inline Rational brute_product_entry(std::uint64_t i, std::uint64_t j, const Rational& x, const Rational& y) {
  Rational sum(0);
  for (std::uint64_t k = j; k <= i; ++k) sum += s_entry(x, i, k) * s_entry(y, k, j);
  return sum;
}

inline std::vector<Rational> dense_matvec(const sierp::TriMatrix& a, const std::vector<Rational>& v) {
  std::vector<Rational> out(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out[i] += a.at(i, j) * v[j];
  return out;
}

// Literal O(L^4) search for a factor www.
inline bool has_cube(const std::vector<sierp::Letter>& w) {
  const std::size_t len = w.size();
  for (std::size_t start = 0; start < len; ++start)
    for (std::size_t p = 1; start + 3 * p <= len; ++p) {
      bool cube = true;
      for (std::size_t t = 0; t < p && cube; ++t)
        cube = w[start + t] == w[start + p + t] && w[start + t] == w[start + 2 * p + t];
      if (cube) return true;
    }
  return false;
}

}  // namespace oracle
