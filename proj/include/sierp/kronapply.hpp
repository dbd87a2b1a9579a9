#pragma once

// S(x) restricted to a 2^k window is the k-fold Kronecker power of the 2x2
// factor [[1, 0], [x, 1]]. Applying it factor by factor is a butterfly
// transform: one stage per bit position, N/2 multiply-adds per stage.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "sierp/rational.hpp"
#include "sierp/trimatrix.hpp"

namespace sierp {

struct KronOperator {
  unsigned k = 0;
  Rational x;

  [[nodiscard]] std::size_t size() const noexcept { return std::size_t{1} << k; }
};

struct WorkCounter {
  std::uint64_t multiply_adds = 0;
};

inline constexpr unsigned kMaterializeCap = 10;

namespace detail {

// Stage for bit p: v[i] += x * v[i - 2^p] for every i with bit p set. The
// partner index has bit p clear and is not written in this stage, so the
// update can run in place and in any order within the stage.
template <class T>
void butterfly_stage(std::span<T> v, const T& x, unsigned p, WorkCounter* counter) {
  const std::size_t half = std::size_t{1} << p;
  const std::size_t block = half << 1;
  for (std::size_t base = 0; base < v.size(); base += block)
    for (std::size_t off = 0; off < half; ++off) v[base + half + off] += x * v[base + off];
  if (counter) counter->multiply_adds += v.size() / 2;
}

}  // namespace detail

/// S(x) v in k butterfly stages, ascending bit order.
std::vector<Rational> kron_apply(const KronOperator& op, std::span<const Rational> v, WorkCounter* counter = nullptr);

/// As above with an explicit stage order, which must be a permutation of 0..k-1.
std::vector<Rational> kron_apply(const KronOperator& op, std::span<const Rational> v,
                                 std::span<const unsigned> stage_order, WorkCounter* counter = nullptr);

/// The unique v with kron_apply(op, v) == w; S(x)^{-1} = S(-x).
std::vector<Rational> kron_solve(const KronOperator& op, std::span<const Rational> w, WorkCounter* counter = nullptr);

/// Expands the Kronecker power by the block rule [[M, 0], [x M, M]].
/// Throws std::length_error when op.k exceeds cap.
TriMatrix kron_materialize(const KronOperator& op, unsigned cap = kMaterializeCap);

/// Floating-point butterfly path, for throughput measurement only.
void kron_apply_fp(unsigned k, double x, std::span<double> v, WorkCounter* counter = nullptr);

}  // namespace sierp
