#pragma once

// Throughput comparison of the butterfly path against a dense lower-triangular
// mat-vec, on doubles. Exact rationals grow with k and would measure bignum
// arithmetic rather than the transform, so this path never touches them.

#include <cstdint>
#include <iosfwd>
#include <optional>

namespace sierp {

inline constexpr unsigned kMaxBenchFastK = 22;
inline constexpr unsigned kMaxBenchDenseK = 13;

struct PathTiming {
  double median_seconds = 0;
  std::uint64_t multiply_adds = 0;  // per application
};

struct BenchReport {
  unsigned k = 0;
  unsigned reps = 0;
  double x = 1;
  PathTiming fast;
  std::optional<PathTiming> dense;  // only for k <= kMaxBenchDenseK
  double max_abs_difference = 0;    // fast vs dense output, when dense ran

  [[nodiscard]] std::optional<double> speedup() const;
};

/// Throws std::invalid_argument if k > kMaxBenchFastK or reps == 0.
BenchReport run_bench(unsigned k, unsigned reps, double x = 1.0);

void print_bench(const BenchReport& report, std::ostream& out);

}  // namespace sierp
