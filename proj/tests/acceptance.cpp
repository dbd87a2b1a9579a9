// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.
// All checks are exact; the only tolerances are the runtime ceilings and the
// coarse 10x speedup floor.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "sierp/bench.hpp"
#include "sierp/bitops.hpp"
#include "sierp/cli.hpp"
#include "sierp/kronapply.hpp"
#include "sierp/render.hpp"
#include "sierp/rng.hpp"
#include "sierp/sierpmatrix.hpp"
#include "sierp/tmword.hpp"
#include "sierp/verify.hpp"

using namespace sierp;  // NOLINT

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

Rational q(long p, long d = 1) { return make_rational(p, d); }

std::string golden(const std::string& name) {
  std::ifstream in(std::string(SIERP_GOLDEN_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string where(std::size_t i, std::size_t j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

std::string mismatch_text(const TriMatrix& got, const TriMatrix& expected) {
  const auto m = first_mismatch(got, expected);
  if (!m) return {};
  return "entry " + where(m->row, m->col) + " got " + to_string(m->got) + " expected " + to_string(m->expected);
}

// 1. Kummer agreement over 0 <= i, j <= 1024, exact binomials, < 10 s.
Outcome kummer_agreement() {
  constexpr Index bound = 1024;
  const BinomialParityTable table(bound);
  for (Index i = 0; i <= bound; ++i)
    for (Index j = 0; j <= bound; ++j)
      if (is_free_of(i, j) != table.odd(i, j)) return fail("disagreement at " + where(i, j));
  // Spot-check the table against independent per-pair binomials.
  for (Index i = 0; i <= bound; i += 97)
    for (Index j = 0; j <= bound; j += 89)
      if (table.odd(i, j) != kummer_oracle(i, j)) return fail("parity table wrong at " + where(i, j));
  return {true, "1025x1025 pairs"};
}

// 2. Golden 8x8 windows, string-level.
Outcome golden_8x8() {
  const struct {
    const char* x;
    const char* file;
  } cases[] = {{"2", "s_x2_k3.csv"}, {"1", "s_x1_k3.csv"}};
  for (const auto& c : cases) {
    std::ostringstream lib;
    write_matrix_csv(build_s(parse_rational(c.x), 8), lib);
    std::ostringstream cli_out, cli_err;
    const int code = cli::run({"matrix", "--x", c.x, "--k", "3", "--format", "csv"}, cli_out, cli_err);
    const std::string expected = golden(c.file);
    if (expected.empty()) return fail(std::string("missing golden file ") + c.file);
    if (lib.str() != expected) return fail(std::string("library output differs from ") + c.file);
    if (code != 0 || cli_out.str() != expected) return fail(std::string("CLI output differs from ") + c.file);
  }
  return {true, "S(2) and S(1), 8x8"};
}

// 3. S(x)S(y) = S(x+y) on a (k+1)^2 grid for k <= 6, < 60 s.
Outcome bilinear_grid() {
  for (unsigned k = 0; k <= 6; ++k) {
    const std::size_t n = std::size_t{1} << k;
    for (unsigned a = 0; a <= k; ++a)
      for (unsigned b = 0; b <= k; ++b) {
        // Distinct abscissae in each variable.
        const Rational x = q(3L * a - 4, 7), y = q(5L - 2L * b, 3);
        const std::string diff = mismatch_text(mat_mul(build_s(x, n), build_s(y, n)), build_s(x + y, n));
        if (!diff.empty()) return fail("k=" + std::to_string(k) + " x=" + to_string(x) + " y=" + to_string(y) + ": " + diff);
      }
  }
  return {true, "k=0..6, (k+1)^2 grid points each"};
}

// 4. Inverse of S: equals S(-1), entries in {-1,0,1}, zero pattern of S,
//    columns read Thue-Morse prefixes. k <= 5.
Outcome inverse_structure() {
  for (unsigned k = 0; k <= 5; ++k) {
    const std::size_t n = std::size_t{1} << k;
    const TriMatrix s = build_s(q(1), n);
    const TriMatrix inv = mat_inverse(s);
    const std::string diff = mismatch_text(inv, build_s(q(-1), n));
    if (!diff.empty()) return fail("k=" + std::to_string(k) + " inverse vs S(-1): " + diff);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        const Rational& v = inv.at(i, j);
        if (v != 0 && v != 1 && v != -1) return fail("entry outside {-1,0,1} at " + where(i, j));
        if ((sgn(v) != 0) != (sgn(s.at(i, j)) != 0)) return fail("zero pattern differs at " + where(i, j));
      }
    for (std::size_t j = 0; j < n; ++j) {
      const SignWord col = column_nonzero_signs(inv, j);
      if (col != tm_by_digit_sum(col.size()))
        return fail("k=" + std::to_string(k) + " column " + std::to_string(j) + " reads " + sign_string(col));
    }
  }
  return {true, "k=0..5"};
}

// 5. Rational powers: S(p/q)^q = S(p) = S^p and S(-1)S(1) = I. k <= 4.
Outcome rational_powers() {
  for (unsigned k = 0; k <= 4; ++k) {
    const std::size_t n = std::size_t{1} << k;
    const TriMatrix s = s_power(q(1), n);
    const TriMatrix s_inv = mat_inverse(s);
    for (long p = -3; p <= 3; ++p) {
      const TriMatrix target = s_power(q(p), n);
      const TriMatrix s_p = p >= 0 ? mat_power(s, static_cast<unsigned>(p)) : mat_power(s_inv, static_cast<unsigned>(-p));
      if (target != s_p) return fail("k=" + std::to_string(k) + " S^" + std::to_string(p) + " != S(" + std::to_string(p) + ")");
      for (unsigned d = 1; d <= 5; ++d)
        if (mat_power(s_power(q(p, d), n), d) != target)
          return fail("k=" + std::to_string(k) + " S(" + std::to_string(p) + "/" + std::to_string(d) + ")^" +
                      std::to_string(d) + " != S(" + std::to_string(p) + ")");
    }
    if (mat_mul(s_power(q(-1), n), s_power(q(1), n)) != TriMatrix::identity(n))
      return fail("k=" + std::to_string(k) + " S(-1)S(1) != I");
  }
  return {true, "p=-3..3, q=1..5, k=0..4"};
}

// 6. Kronecker factorization: materialization and 100 random vectors, k <= 8.
Outcome kronecker() {
  Xorshift64 rng(20061118);
  for (unsigned k = 0; k <= 8; ++k) {
    const std::size_t n = std::size_t{1} << k;
    Rational sampled = random_rational(rng);
    const std::vector<Rational> xs{q(1), q(-1), sampled};
    for (const auto& x : xs) {
      const TriMatrix dense = build_s(x, n);
      const std::string diff = mismatch_text(kron_materialize(KronOperator{k, x}), dense);
      if (!diff.empty()) return fail("k=" + std::to_string(k) + " x=" + to_string(x) + " materialize: " + diff);
    }
    const TriMatrix dense = build_s(sampled, n);
    for (int s = 0; s < 100; ++s) {
      const auto v = random_vector(rng, n);
      if (kron_apply(KronOperator{k, sampled}, v) != mat_vec(dense, v))
        return fail("k=" + std::to_string(k) + " x=" + to_string(sampled) + " vector#" + std::to_string(s));
    }
  }
  return {true, "k=0..8, 3 parameters, 100 vectors per k"};
}

// 7. Word constructions agree to length 1024; prefixes to 512 are cube-free, < 30 s.
Outcome words() {
  for (std::size_t len = 1; len <= 1024; ++len) {
    const TmWord w = tm_by_doubling(len);
    if (to_signs(w) != tm_by_digit_sum(w.size())) return fail("constructions differ at length " + std::to_string(len));
  }
  const TmWord w = tm_by_doubling(512);
  for (std::size_t len = 1; len <= 512; ++len) {
    std::vector<Letter> prefix(w.letters().begin(), w.letters().begin() + static_cast<std::ptrdiff_t>(len));
    if (!is_cube_free(TmWord(prefix))) return fail("cube in prefix of length " + std::to_string(len));
  }
  return {true, "lengths 1..1024, cube scan on all 512 prefixes"};
}

// 8. Work counters exact; at k = 13 the butterfly is at least 10x faster.
Outcome performance() {
  for (unsigned k = 0; k <= 13; ++k) {
    const BenchReport r = run_bench(k, 1);
    const std::uint64_t n = std::uint64_t{1} << k;
    const std::uint64_t fast_expected = k == 0 ? 0 : std::uint64_t{k} << (k - 1);
    if (r.fast.multiply_adds != fast_expected) return fail("fast counter wrong at k=" + std::to_string(k));
    if (!r.dense || r.dense->multiply_adds != n * (n + 1) / 2) return fail("dense counter wrong at k=" + std::to_string(k));
    if (r.max_abs_difference != 0) return fail("paths disagree at k=" + std::to_string(k));
  }
  const BenchReport r = run_bench(13, 5);
  const double speedup = r.speedup().value_or(0);
  std::ostringstream detail;
  detail << "k=13 fast " << r.fast.multiply_adds << " vs dense " << r.dense->multiply_adds
         << " multiply-adds, speedup " << speedup << "x";
  if (speedup < 10.0) return fail(detail.str() + " (< 10x)");
  return {true, detail.str()};
}

// 9. A single flipped entry makes verify exit 1 and name the entry.
Outcome harness_integrity() {
  std::ostringstream report;
  VerifyOptions opt;
  opt.k_max = 4;
  opt.samples = 10;
  opt.seed = 7;
  opt.build = corrupted_builder(6, 2);
  const VerifyResult res = run_verify(opt, report);
  if (res.exit_code() != 1) return fail("verify did not fail on a corrupted build");
  if (report.str().find("entry (6,2)") == std::string::npos) return fail("report does not name entry (6,2)");

  std::ostringstream out, err;
  const int code = cli::run({"verify", "--k-max", "3", "--samples", "5", "--corrupt-entry", "5,1"}, out, err);
  if (code != 1) return fail("CLI verify exit code " + std::to_string(code) + " on a corrupted build");
  if (out.str().find("entry (5,1)") == std::string::npos) return fail("CLI report does not name entry (5,1)");

  std::ostringstream clean_out, clean_err;
  if (cli::run({"verify", "--k-max", "3", "--samples", "5"}, clean_out, clean_err) != 0)
    return fail("uncorrupted verify does not pass");
  return {true, std::to_string(res.failures) + " checks caught the flip"};
}

struct Criterion {
  int id;
  const char* name;
  double max_seconds;  // 0 = no runtime ceiling
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "kummer-agreement", 10, kummer_agreement},
      {2, "golden-8x8", 0, golden_8x8},
      {3, "bilinear-grid", 60, bilinear_grid},
      {4, "inverse-structure", 0, inverse_structure},
      {5, "rational-powers", 0, rational_powers},
      {6, "kronecker-factorization", 0, kronecker},
      {7, "thue-morse-words", 30, words},
      {8, "performance", 0, performance},
      {9, "harness-integrity", 0, harness_integrity},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (o.pass && c.max_seconds > 0 && secs >= c.max_seconds) {
      o.pass = false;
      o.detail += " (runtime over " + std::to_string(static_cast<int>(c.max_seconds)) + " s)";
    }
    if (!o.pass) ++failures;
    std::printf("AC%d %s %-24s %7.2fs  %s\n", c.id, o.pass ? "PASS" : "FAIL", c.name, secs, o.detail.c_str());
  }
  std::printf("%s: %zu/%zu criteria passed\n", failures == 0 ? "ACCEPTED" : "REJECTED", criteria.size() - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
