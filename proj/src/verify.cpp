#include "sierp/verify.hpp"

#include <exception>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "sierp/bitops.hpp"
#include "sierp/kronapply.hpp"
#include "sierp/sierpmatrix.hpp"
#include "sierp/tmword.hpp"

namespace sierp {

namespace {

using Counterexample = std::optional<std::string>;

std::string describe(const Mismatch& m) {
  std::ostringstream os;
  os << "entry (" << m.row << "," << m.col << ") got " << to_string(m.got) << " expected " << to_string(m.expected);
  return os.str();
}

Counterexample compare(const TriMatrix& got, const TriMatrix& expected, const std::string& context) {
  if (auto m = first_mismatch(got, expected)) return context + ": " + describe(*m);
  return std::nullopt;
}

Counterexample compare(const std::vector<Rational>& got, const std::vector<Rational>& expected,
                       const std::string& context) {
  for (std::size_t i = 0; i < got.size(); ++i)
    if (got[i] != expected[i])
      return context + ": component " + std::to_string(i) + " got " + to_string(got[i]) + " expected " +
             to_string(expected[i]);
  return std::nullopt;
}

// Distinct grid abscissae; (2a-1)/3 increases and (1-2b)/(b+2) decreases.
Rational grid_x(unsigned a) { return make_rational(2L * a - 1, 3); }
Rational grid_y(unsigned b) { return make_rational(1L - 2L * b, b + 2L); }

class Suite {
 public:
  Suite(const VerifyOptions& opt, std::ostream& out) : opt_(opt), out_(out) {}

  template <class Fn>
  void check(unsigned k, const char* name, Fn&& fn) {
    Counterexample ce;
    try {
      ce = fn();
    } catch (const std::exception& e) {
      ce = std::string("exception: ") + e.what();
    }
    ++result_.checks;
    if (ce) {
      ++result_.failures;
      out_ << "FAIL k=" << k << ' ' << name << ": " << *ce << '\n';
    } else {
      out_ << "PASS k=" << k << ' ' << name << '\n';
    }
  }

  VerifyResult run();

 private:
  TriMatrix build(const Rational& x, std::size_t n) const { return opt_.build ? opt_.build(x, n) : build_s(x, n); }

  void run_window(unsigned k, Xorshift64& rng);

  const VerifyOptions& opt_;
  std::ostream& out_;
  VerifyResult result_;
};

void Suite::run_window(unsigned k, Xorshift64& rng) {
  const std::size_t n = std::size_t{1} << k;
  const Rational one(1), minus_one(-1);

  check(k, "kummer-agreement", [&]() -> Counterexample {
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        if (is_free_of(i, j) != kummer_oracle(i, j))
          return "i=" + std::to_string(i) + " j=" + std::to_string(j) + " free-of and binomial parity disagree";
    return std::nullopt;
  });

  // One random nonzero parameter per window, drawn up front so the report
  // does not depend on which checks ran before.
  Rational sampled = random_rational(rng);
  while (sgn(sampled) == 0) sampled = random_rational(rng);
  const std::vector<Rational> params{one, minus_one, make_rational(5, 3), sampled};

  check(k, "self-similarity", [&]() -> Counterexample {
    if (k == 0) return std::nullopt;
    for (const auto& x : params)
      if (auto ce = compare(build(x, n).leading_block(n / 2), build(x, n / 2), "x=" + to_string(x))) return ce;
    return std::nullopt;
  });

  check(k, "zero-pattern", [&]() -> Counterexample {
    const TriMatrix s = build(one, n);
    for (const auto& x : params) {
      const TriMatrix m = build(x, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j)
          if ((sgn(m.at(i, j)) != 0) != (sgn(s.at(i, j)) != 0))
            return "x=" + to_string(x) + " entry (" + std::to_string(i) + "," + std::to_string(j) + ") is " +
                   to_string(m.at(i, j)) + " where S has " + to_string(s.at(i, j));
    }
    return std::nullopt;
  });

  check(k, "theorem2-grid", [&]() -> Counterexample {
    for (unsigned a = 0; a <= k; ++a)
      for (unsigned b = 0; b <= k; ++b) {
        const Rational x = grid_x(a), y = grid_y(b);
        if (auto ce = compare(mat_mul(build(x, n), build(y, n)), build(x + y, n),
                              "S(" + to_string(x) + ")S(" + to_string(y) + ")"))
          return ce;
      }
    return std::nullopt;
  });

  const auto inverse_of_s = [&] { return mat_inverse(build(one, n)); };

  check(k, "theorem1-inverse", [&]() -> Counterexample {
    const TriMatrix inv = inverse_of_s();
    if (auto ce = compare(inv, build(minus_one, n), "inverse(S) vs S(-1)")) return ce;
    const TriMatrix s = build(one, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        const Rational& v = inv.at(i, j);
        const std::string where = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
        if (v != 0 && v != 1 && v != -1) return "inverse(S) entry " + where + " = " + to_string(v) + " outside {-1,0,1}";
        if ((sgn(v) != 0) != (sgn(s.at(i, j)) != 0)) return "inverse(S) zero pattern differs from S at " + where;
      }
    return std::nullopt;
  });

  check(k, "theorem1-columns", [&]() -> Counterexample {
    const TriMatrix inv = inverse_of_s();
    for (std::size_t j = 0; j < n; ++j) {
      const SignWord col = column_nonzero_signs(inv, j);
      if (col != tm_by_digit_sum(col.size()))
        return "column " + std::to_string(j) + " reads " + sign_string(col) + ", not a Thue-Morse prefix";
    }
    return std::nullopt;
  });

  check(k, "rational-powers", [&]() -> Counterexample {
    const TriMatrix s = build(one, n);
    const TriMatrix s_inv = mat_inverse(s);
    for (long p = -3; p <= 3; ++p) {
      const TriMatrix target = build(make_rational(p), n);
      // S(p) is the p-th power of S.
      const TriMatrix s_p = p >= 0 ? mat_power(s, static_cast<unsigned>(p)) : mat_power(s_inv, static_cast<unsigned>(-p));
      if (auto ce = compare(s_p, target, "S^" + std::to_string(p) + " vs S(" + std::to_string(p) + ")")) return ce;
      for (unsigned q = 1; q <= 5; ++q) {
        const Rational r = make_rational(p, q);
        if (auto ce = compare(mat_power(build(r, n), q), target,
                              "S(" + to_string(r) + ")^" + std::to_string(q) + " vs S(" + std::to_string(p) + ")"))
          return ce;
      }
    }
    return compare(mat_mul(build(minus_one, n), build(one, n)), TriMatrix::identity(n), "S(-1)S(1) vs I");
  });

  check(k, "kron-materialize", [&]() -> Counterexample {
    for (const auto& x : params)
      if (auto ce = compare(kron_materialize(KronOperator{k, x}), build(x, n), "x=" + to_string(x))) return ce;
    return std::nullopt;
  });

  // Vectors drawn before the check bodies run, again for stable output.
  std::vector<std::vector<Rational>> vectors;
  for (unsigned s = 0; s < opt_.samples; ++s) vectors.push_back(random_vector(rng, n));

  check(k, "kron-apply", [&]() -> Counterexample {
    for (const auto& x : params) {
      const TriMatrix dense = build(x, n);
      const KronOperator op{k, x};
      for (std::size_t s = 0; s < vectors.size(); ++s) {
        const auto& v = vectors[s];
        const std::string ctx = "x=" + to_string(x) + " vector#" + std::to_string(s);
        if (auto ce = compare(kron_apply(op, v), mat_vec(dense, v), ctx + " apply vs dense")) return ce;
        if (auto ce = compare(kron_solve(op, kron_apply(op, v)), v, ctx + " solve round trip")) return ce;
      }
    }
    return std::nullopt;
  });

  check(k, "kron-composition", [&]() -> Counterexample {
    for (std::size_t s = 0; s < vectors.size(); ++s) {
      const Rational& x = params[s % params.size()];
      const Rational& y = params[(s + 1) % params.size()];
      const auto lhs = kron_apply(KronOperator{k, y}, kron_apply(KronOperator{k, x}, vectors[s]));
      const auto rhs = kron_apply(KronOperator{k, x + y}, vectors[s]);
      if (auto ce = compare(lhs, rhs, "x=" + to_string(x) + " y=" + to_string(y) + " vector#" + std::to_string(s)))
        return ce;
    }
    return std::nullopt;
  });

  struct Draw {
    Index i, j;
    Rational x, y;
  };
  std::vector<Draw> draws;
  for (unsigned s = 0; s < opt_.samples; ++s) {
    Index i = rng.below(n), j = rng.below(n);
    if (i < j) std::swap(i, j);
    Rational x = random_rational(rng);
    Rational y = random_rational(rng);
    draws.push_back({i, j, std::move(x), std::move(y)});
  }

  check(k, "summand-oracle", [&]() -> Counterexample {
    for (const auto& d : draws) {
      const Rational got = theorem2_summand_oracle(d.i, d.j, d.x, d.y);
      const Rational expected = build(d.x + d.y, n).at(d.i, d.j);
      if (got != expected)
        return "i=" + std::to_string(d.i) + " j=" + std::to_string(d.j) + " x=" + to_string(d.x) +
               " y=" + to_string(d.y) + ": summed " + to_string(got) + " expected " + to_string(expected);
    }
    return std::nullopt;
  });
}

VerifyResult Suite::run() {
  Xorshift64 rng(opt_.seed);
  for (unsigned k = 0; k <= opt_.k_max; ++k) run_window(k, rng);
  out_ << (result_.failures == 0 ? "ALL PASS" : "FAILED") << ": " << result_.checks - result_.failures << '/'
       << result_.checks << " checks passed\n";
  return result_;
}

}  // namespace

VerifyResult run_verify(const VerifyOptions& options, std::ostream& report) {
  if (options.k_max > kMaxVerifyK)
    throw std::invalid_argument("verify: k_max=" + std::to_string(options.k_max) + " exceeds " +
                                std::to_string(kMaxVerifyK));
  return Suite(options, report).run();
}

MatrixBuilder corrupted_builder(std::size_t row, std::size_t col) {
  if (col > row) throw std::invalid_argument("corrupted_builder: entry must lie in the lower triangle");
  return [row, col](const Rational& x, std::size_t n) {
    TriMatrix m = build_s(x, n);
    if (row < n) m.set(row, col, sgn(m.at(row, col)) == 0 ? Rational(1) : Rational(0));
    return m;
  };
}

Rational random_rational(Xorshift64& rng, long max_abs) {
  const long num = rng.between(-max_abs, max_abs);
  const long den = rng.between(1, max_abs);
  return make_rational(num, den);
}

std::vector<Rational> random_vector(Xorshift64& rng, std::size_t n, long max_abs) {
  std::vector<Rational> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_rational(rng, max_abs));
  return v;
}

}  // namespace sierp
