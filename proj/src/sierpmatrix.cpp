#include "sierp/sierpmatrix.hpp"

#include <stdexcept>
#include <string>

namespace sierp {

Rational s_entry(const Rational& x, Index i, Index j) {
  if (i < j || !is_free_of(i - j, j)) return Rational(0);
  return pow(x, digit_sum(i - j));
}

TriMatrix build_s(const Rational& x, std::size_t n) {
  TriMatrix m(n);
  // Powers of x only go up to log2(n).
  std::vector<Rational> powers{Rational(1)};
  for (std::size_t e = 1; (std::size_t{1} << (e - 1)) < n; ++e) powers.push_back(powers.back() * x);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (is_free_of(i - j, j)) m.set(i, j, powers[digit_sum(i - j)]);
  return m;
}

TriMatrix s_power(const Rational& r, std::size_t n) { return build_s(r, n); }

TriMatrix mat_mul(const TriMatrix& a, const TriMatrix& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("mat_mul: size mismatch " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  const std::size_t n = a.size();
  TriMatrix out(n);
  std::vector<Rational> acc;
  for (std::size_t i = 0; i < n; ++i) {
    acc.assign(i + 1, Rational(0));
    const auto arow = a.row(i);
    for (std::size_t k = 0; k <= i; ++k) {
      if (sgn(arow[k]) == 0) continue;
      const auto brow = b.row(k);
      for (std::size_t j = 0; j <= k; ++j)
        if (sgn(brow[j]) != 0) acc[j] += arow[k] * brow[j];
    }
    for (std::size_t j = 0; j <= i; ++j)
      if (sgn(acc[j]) != 0) out.set(i, j, std::move(acc[j]));
  }
  return out;
}

TriMatrix mat_power(const TriMatrix& a, unsigned q) {
  TriMatrix out = TriMatrix::identity(a.size());
  for (unsigned t = 0; t < q; ++t) out = mat_mul(out, a);
  return out;
}

TriMatrix mat_inverse(const TriMatrix& a) {
  if (!a.unit_diagonal()) throw std::domain_error("mat_inverse: diagonal is not all ones");
  const std::size_t n = a.size();
  TriMatrix inv(n);
  // Row i of X = A^{-1}: X[i][j] = delta_ij - sum_{k<i} A[i][k] X[k][j].
  std::vector<Rational> acc;
  for (std::size_t i = 0; i < n; ++i) {
    acc.assign(i + 1, Rational(0));
    acc[i] = 1;
    const auto arow = a.row(i);
    for (std::size_t k = 0; k < i; ++k) {
      if (sgn(arow[k]) == 0) continue;
      const auto xrow = inv.row(k);
      for (std::size_t j = 0; j <= k; ++j)
        if (sgn(xrow[j]) != 0) acc[j] -= arow[k] * xrow[j];
    }
    for (std::size_t j = 0; j <= i; ++j)
      if (sgn(acc[j]) != 0) inv.set(i, j, std::move(acc[j]));
  }
  return inv;
}

std::vector<Rational> mat_vec(const TriMatrix& a, std::span<const Rational> v) {
  if (v.size() != a.size()) throw std::invalid_argument("mat_vec: vector length does not match matrix size");
  std::vector<Rational> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto r = a.row(i);
    Rational sum(0);
    for (std::size_t j = 0; j <= i; ++j) sum += r[j] * v[j];
    out[i] = std::move(sum);
  }
  return out;
}

SignWord column_nonzero_signs(const TriMatrix& a, std::size_t j) {
  if (j >= a.size()) throw std::out_of_range("column_nonzero_signs: column out of range");
  SignWord out;
  for (std::size_t i = j; i < a.size(); ++i) {
    const Rational& v = a.at(i, j);
    if (sgn(v) == 0) continue;
    if (v == 1) out.push_back(1);
    else if (v == -1) out.push_back(-1);
    else
      throw std::domain_error("column_nonzero_signs: entry (" + std::to_string(i) + "," + std::to_string(j) +
                              ") = " + to_string(v) + " is not +1 or -1");
  }
  return out;
}

Rational theorem2_summand_oracle(Index i, Index j, const Rational& x, const Rational& y) {
  if (i < j) throw std::invalid_argument("theorem2_summand_oracle: requires i >= j");
  Rational sum(0);
  // No admissible k unless every 1-bit of j is also a 1-bit of i.
  if ((j & ~i) != 0) return sum;
  const Index free_bits = i & ~j;
  Index sub = 0;
  do {
    const Index k = j | sub;
    sum += s_entry(x, i, k) * s_entry(y, k, j);
    sub = (sub - free_bits) & free_bits;
  } while (sub != 0);
  return sum;
}

}  // namespace sierp
