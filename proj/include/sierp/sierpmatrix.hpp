#pragma once

// The Sierpinski-Pascal family S(x): entry (i, j) is x^{digit_sum(i-j)} when
// i >= j and i-j is free of j, zero otherwise. S(1) is Pascal's triangle
// mod 2, S(0) = I, and S(x) S(y) = S(x + y).
//
// The generic algebra here (product, forward-substitution inverse, integer
// powers) knows nothing about that closed form, so it can serve as an
// independent check of it.

#include <cstddef>
#include <span>
#include <vector>

#include "sierp/bitops.hpp"
#include "sierp/rational.hpp"
#include "sierp/tmword.hpp"
#include "sierp/trimatrix.hpp"

namespace sierp {

/// Closed-form entry (i, j) of S(x) for any i, j.
Rational s_entry(const Rational& x, Index i, Index j);

/// The n x n window of S(x). Throws std::invalid_argument unless n = 2^k.
TriMatrix build_s(const Rational& x, std::size_t n);

/// S(r) as the r-th power of S: s_power(p/q, n)^q == s_power(p, n).
TriMatrix s_power(const Rational& r, std::size_t n);

/// Exact product; zero entries are skipped. Throws on a size mismatch.
TriMatrix mat_mul(const TriMatrix& a, const TriMatrix& b);

/// a^q by repeated multiplication; a^0 = I.
TriMatrix mat_power(const TriMatrix& a, unsigned q);

/// Inverse by forward substitution. Throws std::domain_error unless the
/// diagonal is all ones.
TriMatrix mat_inverse(const TriMatrix& a);

/// Dense matrix-vector product. Throws on a length mismatch.
std::vector<Rational> mat_vec(const TriMatrix& a, std::span<const Rational> v);

/// Nonzero entries of column j, read from row j downward. Throws
/// std::domain_error if one of them is not +1 or -1.
SignWord column_nonzero_signs(const TriMatrix& a, std::size_t j);

/// Entry (i, j) of S(x) S(y), summed only over the k that the carry-free
/// structure admits: k has 0s where i has 0s, 1s where j has 1s, and is free
/// elsewhere. Requires i >= j.
Rational theorem2_summand_oracle(Index i, Index j, const Rational& x, const Rational& y);

}  // namespace sierp
