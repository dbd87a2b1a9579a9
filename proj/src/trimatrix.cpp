#include "sierp/trimatrix.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace sierp {

namespace {

const Rational& zero() {
  static const Rational z(0);
  return z;
}

}  // namespace

bool is_power_of_two(std::size_t n) noexcept { return std::has_single_bit(n); }

TriMatrix::TriMatrix(std::size_t n) : n_(n), non_unit_diagonal_(n) {
  if (!is_power_of_two(n)) throw std::invalid_argument("TriMatrix: size " + std::to_string(n) + " is not a power of two");
  data_.resize(n * (n + 1) / 2);
}

TriMatrix TriMatrix::identity(std::size_t n) {
  TriMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Rational(1));
  return m;
}

const Rational& TriMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw std::out_of_range("TriMatrix::at: index out of range");
  return j > i ? zero() : data_[offset(i, j)];
}

void TriMatrix::set(std::size_t i, std::size_t j, Rational value) {
  if (i >= n_ || j > i) throw std::out_of_range("TriMatrix::set: outside the lower triangle");
  Rational& slot = data_[offset(i, j)];
  if (i == j) {
    const bool was_unit = slot == 1;
    const bool is_unit = value == 1;
    if (was_unit && !is_unit) ++non_unit_diagonal_;
    if (!was_unit && is_unit) --non_unit_diagonal_;
  }
  slot = std::move(value);
}

std::span<const Rational> TriMatrix::row(std::size_t i) const {
  if (i >= n_) throw std::out_of_range("TriMatrix::row: index out of range");
  return {data_.data() + offset(i, 0), i + 1};
}

TriMatrix TriMatrix::leading_block(std::size_t m) const {
  if (m > n_) throw std::invalid_argument("TriMatrix::leading_block: block larger than matrix");
  TriMatrix out(m);
  // The packed layout of the first m rows is exactly the packed m x m block.
  std::copy(data_.begin(), data_.begin() + static_cast<std::ptrdiff_t>(m * (m + 1) / 2), out.data_.begin());
  out.non_unit_diagonal_ = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (out.data_[offset(i, i)] != 1) ++out.non_unit_diagonal_;
  return out;
}

std::optional<Mismatch> first_mismatch(const TriMatrix& got, const TriMatrix& expected) {
  if (got.size() != expected.size()) throw std::invalid_argument("first_mismatch: size mismatch");
  for (std::size_t i = 0; i < got.size(); ++i) {
    const auto g = got.row(i);
    const auto e = expected.row(i);
    for (std::size_t j = 0; j <= i; ++j)
      if (g[j] != e[j]) return Mismatch{i, j, g[j], e[j]};
  }
  return std::nullopt;
}

}  // namespace sierp
