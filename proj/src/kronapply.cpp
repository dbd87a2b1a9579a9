#include "sierp/kronapply.hpp"

#include <string>

namespace sierp {

namespace {

void check_length(const KronOperator& op, std::size_t len) {
  if (len != op.size())
    throw std::invalid_argument("kron: vector length " + std::to_string(len) + " != 2^" + std::to_string(op.k));
}

void check_permutation(std::span<const unsigned> order, unsigned k) {
  std::vector<bool> seen(k, false);
  if (order.size() != k) throw std::invalid_argument("kron_apply: stage order must list each bit once");
  for (unsigned p : order) {
    if (p >= k || seen[p]) throw std::invalid_argument("kron_apply: stage order must list each bit once");
    seen[p] = true;
  }
}

}  // namespace

std::vector<Rational> kron_apply(const KronOperator& op, std::span<const Rational> v,
                                 std::span<const unsigned> stage_order, WorkCounter* counter) {
  check_length(op, v.size());
  check_permutation(stage_order, op.k);
  std::vector<Rational> out(v.begin(), v.end());
  for (unsigned p : stage_order) detail::butterfly_stage<Rational>(out, op.x, p, counter);
  return out;
}

std::vector<Rational> kron_apply(const KronOperator& op, std::span<const Rational> v, WorkCounter* counter) {
  std::vector<unsigned> order(op.k);
  for (unsigned p = 0; p < op.k; ++p) order[p] = p;
  return kron_apply(op, v, order, counter);
}

std::vector<Rational> kron_solve(const KronOperator& op, std::span<const Rational> w, WorkCounter* counter) {
  return kron_apply(KronOperator{op.k, -op.x}, w, counter);
}

TriMatrix kron_materialize(const KronOperator& op, unsigned cap) {
  if (op.k > cap)
    throw std::length_error("kron_materialize: k=" + std::to_string(op.k) + " exceeds cap " + std::to_string(cap));
  TriMatrix m = TriMatrix::identity(1);
  for (unsigned level = 0; level < op.k; ++level) {
    const std::size_t h = m.size();
    TriMatrix next(2 * h);
    for (std::size_t i = 0; i < h; ++i) {
      const auto r = m.row(i);
      for (std::size_t j = 0; j <= i; ++j) {
        if (sgn(r[j]) == 0) continue;
        next.set(i, j, r[j]);
        next.set(i + h, j, op.x * r[j]);
        next.set(i + h, j + h, r[j]);
      }
    }
    m = std::move(next);
  }
  return m;
}

void kron_apply_fp(unsigned k, double x, std::span<double> v, WorkCounter* counter) {
  if (v.size() != (std::size_t{1} << k)) throw std::invalid_argument("kron_apply_fp: vector length must be 2^k");
  for (unsigned p = 0; p < k; ++p) detail::butterfly_stage(v, x, p, counter);
}

}  // namespace sierp
