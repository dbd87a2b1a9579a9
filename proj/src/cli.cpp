#include "sierp/cli.hpp"

#include <cstdint>
#include <exception>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "sierp/bench.hpp"
#include "sierp/kronapply.hpp"
#include "sierp/render.hpp"
#include "sierp/sierpmatrix.hpp"
#include "sierp/tmword.hpp"
#include "sierp/verify.hpp"

namespace sierp::cli {

namespace {

constexpr std::size_t kMaxThueMorseLength = std::size_t{1} << 20;

struct MatrixArgs {
  std::string x = "1";
  unsigned k = 3;
  std::string format = "csv";
};

struct RenderArgs {
  unsigned k = 4;
  std::string format = "ascii";
  std::string glyphs = "#.";
};

struct ThueMorseArgs {
  std::size_t length = 16;
  std::string alphabet = "letters";
};

struct VerifyArgs {
  unsigned k_max = 4;
  unsigned samples = 50;
  std::uint64_t seed = 1;
  std::vector<std::size_t> corrupt;
};

struct BenchArgs {
  unsigned k = 10;
  unsigned reps = 5;
  double x = 1.0;
};

// Limit and argument-shape violations that surface after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int cmd_matrix(const MatrixArgs& a, std::ostream& out) {
  Rational x;
  try {
    x = parse_rational(a.x);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (a.k > kMaterializeCap) throw UsageError("matrix: k must be at most " + std::to_string(kMaterializeCap));
  const TriMatrix m = build_s(x, std::size_t{1} << a.k);
  if (a.format == "json") write_matrix_json(m, out);
  else write_matrix_csv(m, out);
  return kOk;
}

int cmd_render(const RenderArgs& a, std::ostream& out) {
  RenderSpec spec;
  spec.k = a.k;
  spec.format = a.format == "pbm" ? RenderFormat::Pbm : RenderFormat::Ascii;
  if (a.glyphs.size() != 2) throw UsageError("render: --glyphs takes exactly two characters");
  spec.on = a.glyphs[0];
  spec.off = a.glyphs[1];
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  render(spec, out);
  return kOk;
}

int cmd_thue_morse(const ThueMorseArgs& a, std::ostream& out) {
  if (a.length < 1 || a.length > kMaxThueMorseLength)
    throw UsageError("thue-morse: length must be in [1, " + std::to_string(kMaxThueMorseLength) + "]");
  if (a.alphabet == "signs") {
    out << sign_string(tm_by_digit_sum(a.length)) << '\n';
  } else {
    out << tm_by_doubling(a.length).str().substr(0, a.length) << '\n';
  }
  return kOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  if (a.k_max > kMaxVerifyK) throw UsageError("verify: --k-max must be at most " + std::to_string(kMaxVerifyK));
  VerifyOptions opt;
  opt.k_max = a.k_max;
  opt.samples = a.samples;
  opt.seed = a.seed;
  if (!a.corrupt.empty()) {
    if (a.corrupt[1] > a.corrupt[0]) throw UsageError("verify: --corrupt-entry needs COL <= ROW");
    opt.build = corrupted_builder(a.corrupt[0], a.corrupt[1]);
  }
  return run_verify(opt, out).exit_code();
}

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  if (a.k > kMaxBenchFastK) throw UsageError("bench: k must be at most " + std::to_string(kMaxBenchFastK));
  if (a.reps == 0) throw UsageError("bench: --reps must be positive");
  print_bench(run_bench(a.k, a.reps, a.x), out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Sierpinski-Pascal matrices S(x), Thue-Morse words and fast Kronecker application", "sierp"};
  app.require_subcommand(1);

  MatrixArgs matrix;
  auto* matrix_cmd = app.add_subcommand("matrix", "Print the 2^k window of S(x) with exact p/q entries");
  matrix_cmd->add_option("--x", matrix.x, "Parameter as p/q, p, or -p/q")->capture_default_str();
  matrix_cmd->add_option("-k,--k", matrix.k, "Window exponent (size 2^k), at most 10")->capture_default_str();
  matrix_cmd->add_option("--format", matrix.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  RenderArgs rend;
  auto* render_cmd = app.add_subcommand("render", "Draw Pascal's triangle mod 2 (the 0/1 pattern of S)");
  render_cmd->add_option("-k,--k", rend.k, "Window exponent; at most 12 for ascii, 14 for pbm")->capture_default_str();
  render_cmd->add_option("--format", rend.format, "ascii or pbm")
      ->check(CLI::IsMember({"ascii", "pbm"}))
      ->capture_default_str();
  render_cmd->add_option("--glyphs", rend.glyphs, "Two characters for one/zero in ascii mode")->capture_default_str();

  ThueMorseArgs tm;
  auto* tm_cmd = app.add_subcommand("thue-morse", "Print a prefix of the Prouhet-Thue-Morse word");
  tm_cmd->add_option("-n,--length", tm.length, "Prefix length, 1..2^20")->capture_default_str();
  tm_cmd->add_option("--alphabet", tm.alphabet, "letters (ab) or signs (+-)")
      ->check(CLI::IsMember({"letters", "signs"}))
      ->capture_default_str();

  VerifyArgs ver;
  auto* verify_cmd = app.add_subcommand("verify", "Check every identity of the S(x) family up to 2^k_max");
  verify_cmd->add_option("--k-max", ver.k_max, "Largest window exponent, at most 8")->capture_default_str();
  verify_cmd->add_option("--samples", ver.samples, "Random vectors and (i,j,x,y) draws per window")
      ->capture_default_str();
  verify_cmd->add_option("--seed", ver.seed, "Seed for the xorshift generator")->capture_default_str();
  verify_cmd->add_option("--corrupt-entry", ver.corrupt, "ROW,COL: flip this entry of every S(x) built (harness self-test)")
      ->delimiter(',')
      ->expected(2);

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time butterfly vs dense application on doubles");
  bench_cmd->add_option("-k,--k", bench.k, "Window exponent; fast path to 22, dense path to 13")->capture_default_str();
  bench_cmd->add_option("--reps", bench.reps, "Repetitions per path (median reported)")->capture_default_str();
  bench_cmd->add_option("--x", bench.x, "Parameter (floating point)")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "sierp: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (matrix_cmd->parsed()) return cmd_matrix(matrix, out);
    if (render_cmd->parsed()) return cmd_render(rend, out);
    if (tm_cmd->parsed()) return cmd_thue_morse(tm, out);
    if (verify_cmd->parsed()) return cmd_verify(ver, out);
    if (bench_cmd->parsed()) return cmd_bench(bench, out);
  } catch (const UsageError& e) {
    err << "sierp: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace sierp::cli
