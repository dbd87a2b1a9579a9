#pragma once

// Text and image output: the Sierpinski pattern as ASCII rows or a PBM P1
// image, and S(x) windows as CSV or JSON of exact "p/q" strings.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sierp/trimatrix.hpp"

namespace sierp {

enum class RenderFormat { Ascii, Pbm };

inline constexpr unsigned kMaxAsciiK = 12;
inline constexpr unsigned kMaxPbmK = 14;

struct RenderSpec {
  unsigned k = 0;
  RenderFormat format = RenderFormat::Ascii;
  char on = '#';
  char off = '.';

  /// Throws std::invalid_argument when k exceeds the cap for the format.
  void validate() const;
};

/// Writes the 0/1 pattern of S on the 2^k window, lower triangle left-justified.
void render(const RenderSpec& spec, std::ostream& out);

/// A decoded P1 image; pixels row-major, 1 = black.
struct Bitmap {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> pixels;

  [[nodiscard]] bool at(std::size_t row, std::size_t col) const { return pixels[row * width + col] != 0; }
};

/// Parses a plain (P1) PBM. Throws std::invalid_argument on malformed input.
Bitmap read_pbm_p1(std::string_view text);

void write_matrix_csv(const TriMatrix& m, std::ostream& out);
void write_matrix_json(const TriMatrix& m, std::ostream& out);

/// Inverse of write_matrix_csv. Rejects ragged rows, non-square or
/// non-power-of-two shapes, and nonzero entries above the diagonal.
TriMatrix read_matrix_csv(std::string_view text);

}  // namespace sierp
