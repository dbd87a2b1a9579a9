#include "sierp/bitops.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace sierp {

unsigned digit_sum(Index n) noexcept { return static_cast<unsigned>(std::popcount(n)); }

bool is_free_of(Index i, Index j) noexcept { return (i & j) == 0; }

std::vector<Index> free_residues(Index j, Index limit) {
  std::vector<Index> out;
  // Submasks of ~j enumerate in increasing order via d = (d - mask) & mask.
  const Index mask = ~j;
  Index d = 0;
  while (d < limit) {
    out.push_back(d);
    d = (d - mask) & mask;
    if (d == 0) break;
  }
  return out;
}

bool kummer_oracle(Index i, Index j) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(i + j),
               static_cast<unsigned long>(std::min(i, j)));
  return mpz_odd_p(c.get_mpz_t()) != 0;
}

bool kummer_oracle(const mpz_class& i, const mpz_class& j) {
  if (sgn(i) < 0 || sgn(j) < 0) throw std::domain_error("kummer_oracle: negative argument");
  // C(i+j, j) = C(i+j, i); the lower index must fit a machine word.
  const mpz_class& lower = (cmp(i, j) < 0) ? i : j;
  if (!lower.fits_ulong_p()) throw std::length_error("kummer_oracle: binomial too large to expand");
  const mpz_class top = i + j;
  mpz_class c;
  mpz_bin_ui(c.get_mpz_t(), top.get_mpz_t(), lower.get_ui());
  return mpz_odd_p(c.get_mpz_t()) != 0;
}

BinomialParityTable::BinomialParityTable(Index bound)
    : bound_(bound), odd_((bound + 1) * (bound + 1), false) {
  const Index side = bound + 1;
  // Row m of Pascal's triangle holds C(m, j); (i, j) sits in row i + j.
  std::vector<mpz_class> row{mpz_class(1)};
  for (Index m = 0; m <= 2 * bound; ++m) {
    for (Index j = (m > bound ? m - bound : 0); j <= std::min(m, bound); ++j)
      odd_[(m - j) * side + j] = mpz_odd_p(row[j].get_mpz_t()) != 0;
    std::vector<mpz_class> next(row.size() + 1);
    next.front() = 1;
    next.back() = 1;
    for (std::size_t t = 1; t < row.size(); ++t) next[t] = row[t - 1] + row[t];
    row = std::move(next);
  }
}

bool BinomialParityTable::odd(Index i, Index j) const {
  if (i > bound_ || j > bound_) throw std::out_of_range("BinomialParityTable: index beyond bound");
  return odd_[i * (bound_ + 1) + j];
}

}  // namespace sierp
