#include "sierp/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sierp/bitops.hpp"
#include "sierp/kronapply.hpp"
#include "sierp/rng.hpp"

namespace sierp {

namespace {

using Clock = std::chrono::steady_clock;

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

// Packed lower triangle of S(x) in doubles, row-major.
std::vector<double> dense_s(std::size_t n, double x) {
  std::vector<double> a(n * (n + 1) / 2, 0.0);
  std::vector<double> powers{1.0};
  while (powers.size() < 64) powers.push_back(powers.back() * x);
  for (std::size_t i = 0; i < n; ++i) {
    double* row = a.data() + i * (i + 1) / 2;
    for (std::size_t j = 0; j <= i; ++j)
      if (is_free_of(i - j, j)) row[j] = powers[digit_sum(i - j)];
  }
  return a;
}

void dense_apply(const std::vector<double>& a, const std::vector<double>& v, std::vector<double>& out,
                 WorkCounter* counter) {
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = a.data() + i * (i + 1) / 2;
    double sum = 0;
    for (std::size_t j = 0; j <= i; ++j) sum += row[j] * v[j];
    out[i] = sum;
  }
  if (counter) counter->multiply_adds += n * (n + 1) / 2;
}

}  // namespace

std::optional<double> BenchReport::speedup() const {
  if (!dense || fast.median_seconds <= 0) return std::nullopt;
  return dense->median_seconds / fast.median_seconds;
}

BenchReport run_bench(unsigned k, unsigned reps, double x) {
  if (k > kMaxBenchFastK)
    throw std::invalid_argument("bench: k=" + std::to_string(k) + " exceeds " + std::to_string(kMaxBenchFastK));
  if (reps == 0) throw std::invalid_argument("bench: reps must be positive");

  const std::size_t n = std::size_t{1} << k;
  BenchReport report;
  report.k = k;
  report.reps = reps;
  report.x = x;

  // Small integers keep every intermediate exact in double at x = 1.
  Xorshift64 rng(12345);
  std::vector<double> input(n);
  for (auto& e : input) e = static_cast<double>(rng.between(-4, 4));

  std::vector<double> fast_out;
  std::vector<double> times;
  for (unsigned r = 0; r < reps; ++r) {
    fast_out = input;
    WorkCounter counter;
    const auto t0 = Clock::now();
    kron_apply_fp(k, x, fast_out, &counter);
    times.push_back(std::chrono::duration<double>(Clock::now() - t0).count());
    report.fast.multiply_adds = counter.multiply_adds;
  }
  report.fast.median_seconds = median(times);

  if (k <= kMaxBenchDenseK) {
    const std::vector<double> a = dense_s(n, x);
    std::vector<double> dense_out(n);
    PathTiming dense;
    times.clear();
    for (unsigned r = 0; r < reps; ++r) {
      WorkCounter counter;
      const auto t0 = Clock::now();
      dense_apply(a, input, dense_out, &counter);
      times.push_back(std::chrono::duration<double>(Clock::now() - t0).count());
      dense.multiply_adds = counter.multiply_adds;
    }
    dense.median_seconds = median(times);
    report.dense = dense;
    for (std::size_t i = 0; i < n; ++i)
      report.max_abs_difference = std::max(report.max_abs_difference, std::abs(fast_out[i] - dense_out[i]));
  }
  return report;
}

void print_bench(const BenchReport& r, std::ostream& out) {
  const std::uint64_t n = std::uint64_t{1} << r.k;
  out << "k=" << r.k << " n=" << n << " reps=" << r.reps << " x=" << r.x << '\n';
  out << "fast  median_s=" << r.fast.median_seconds << " multiply_adds=" << r.fast.multiply_adds
      << " expected k*2^(k-1)=" << (r.k == 0 ? 0 : std::uint64_t{r.k} << (r.k - 1)) << '\n';
  if (!r.dense) {
    out << "dense skipped (k > " << kMaxBenchDenseK << ")\n";
    return;
  }
  out << "dense median_s=" << r.dense->median_seconds << " multiply_adds=" << r.dense->multiply_adds
      << " expected n(n+1)/2=" << n * (n + 1) / 2 << '\n';
  if (auto s = r.speedup()) out << "speedup=" << *s << '\n';
  else out << "speedup=n/a\n";
  out << "max_abs_difference=" << r.max_abs_difference << '\n';
}

}  // namespace sierp
