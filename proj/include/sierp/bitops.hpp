#pragma once

// Bit-level primitives on matrix indices: binary digit sum, the carry-free
// ("free of") relation, and an arbitrary-precision binomial-parity oracle
// that checks the relation without sharing its bit trick.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace sierp {

using Index = std::uint64_t;

/// Number of 1-bits in the binary expansion of n.
unsigned digit_sum(Index n) noexcept;

/// True iff i has 0s wherever j has 1s, i.e. i + j in base 2 produces no carry.
bool is_free_of(Index i, Index j) noexcept;

/// All d in [0, limit) with is_free_of(d, j), increasing.
std::vector<Index> free_residues(Index j, Index limit);

/// Parity of C(i + j, j) computed exactly. Odd iff i is free of j.
bool kummer_oracle(Index i, Index j);
bool kummer_oracle(const mpz_class& i, const mpz_class& j);

/// Exact binomial-parity table over 0 <= i, j <= bound, built from Pascal's
/// rule on arbitrary-precision integers. Entry (i, j) holds the parity of
/// C(i + j, j). Used for bulk sweeps where per-pair binomials would be slow.
class BinomialParityTable {
 public:
  explicit BinomialParityTable(Index bound);

  [[nodiscard]] Index bound() const noexcept { return bound_; }
  [[nodiscard]] bool odd(Index i, Index j) const;

 private:
  Index bound_;
  std::vector<bool> odd_;  // (bound+1)^2, indexed [i * (bound+1) + j]
};

}  // namespace sierp
