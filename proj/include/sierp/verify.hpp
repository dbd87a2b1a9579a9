#pragma once

// Verification harness behind `sierp verify`. For every window size 2^k up to
// k_max it checks each identity of the S(x) family against an independent
// route and prints one PASS/FAIL line per check, with the first
// counterexample on failure.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "sierp/rational.hpp"
#include "sierp/rng.hpp"
#include "sierp/trimatrix.hpp"

namespace sierp {

inline constexpr unsigned kMaxVerifyK = 8;

using MatrixBuilder = std::function<TriMatrix(const Rational& x, std::size_t n)>;

struct VerifyOptions {
  unsigned k_max = 4;
  unsigned samples = 50;
  std::uint64_t seed = 1;
  /// Construction under test; defaults to build_s. Fault-injection fixtures
  /// swap in a corrupted builder to prove the harness can fail.
  MatrixBuilder build;
};

struct VerifyResult {
  unsigned checks = 0;
  unsigned failures = 0;

  [[nodiscard]] int exit_code() const noexcept { return failures == 0 ? 0 : 1; }
};

/// Runs the suite, writing the report to `report`. Throws
/// std::invalid_argument when k_max exceeds kMaxVerifyK.
VerifyResult run_verify(const VerifyOptions& options, std::ostream& report);

/// build_s with entry (row, col) flipped between zero and one, whenever the
/// window contains it.
MatrixBuilder corrupted_builder(std::size_t row, std::size_t col);

/// Random rational with numerator in [-max_abs, max_abs] and denominator in [1, max_abs].
Rational random_rational(Xorshift64& rng, long max_abs = 9);

std::vector<Rational> random_vector(Xorshift64& rng, std::size_t n, long max_abs = 9);

}  // namespace sierp
