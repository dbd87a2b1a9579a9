#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sierp/rational.hpp"

namespace sierp {

/// Dense lower-triangular n x n matrix of rationals, n a power of two.
///
/// Only the lower triangle is stored (row-major, row i holds columns 0..i);
/// entries above the diagonal read as zero and cannot be written. Whether
/// the diagonal is all ones is tracked as the entries change.
class TriMatrix {
 public:
  /// Zero matrix. Throws std::invalid_argument unless n is a power of two.
  explicit TriMatrix(std::size_t n);

  static TriMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  [[nodiscard]] bool unit_diagonal() const noexcept { return non_unit_diagonal_ == 0; }

  /// Entry (i, j); zero above the diagonal.
  [[nodiscard]] const Rational& at(std::size_t i, std::size_t j) const;
  /// Sets a lower-triangle entry. Throws std::out_of_range above the diagonal.
  void set(std::size_t i, std::size_t j, Rational value);

  /// Stored part of row i: columns 0..i.
  [[nodiscard]] std::span<const Rational> row(std::size_t i) const;

  /// Upper-left m x m window (m a power of two, m <= n).
  [[nodiscard]] TriMatrix leading_block(std::size_t m) const;

  friend bool operator==(const TriMatrix& a, const TriMatrix& b) { return a.n_ == b.n_ && a.data_ == b.data_; }

 private:
  static std::size_t offset(std::size_t i, std::size_t j) noexcept { return i * (i + 1) / 2 + j; }

  std::size_t n_;
  std::vector<Rational> data_;
  std::size_t non_unit_diagonal_;
};

struct Mismatch {
  std::size_t row;
  std::size_t col;
  Rational got;
  Rational expected;
};

/// First differing entry in row-major order, or nullopt when equal.
/// Throws std::invalid_argument on a size mismatch.
std::optional<Mismatch> first_mismatch(const TriMatrix& got, const TriMatrix& expected);

bool is_power_of_two(std::size_t n) noexcept;

}  // namespace sierp
