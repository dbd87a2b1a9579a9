#pragma once

// Prouhet-Thue-Morse word: doubling construction over {A, B}, closed form
// over {+1, -1}, and a naive cube-freeness scan.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sierp {

enum class Letter : std::uint8_t { A = 0, B = 1 };

constexpr Letter complement(Letter l) noexcept { return l == Letter::A ? Letter::B : Letter::A; }
constexpr int to_sign(Letter l) noexcept { return l == Letter::A ? 1 : -1; }

/// A nonempty word over {A, B}.
class TmWord {
 public:
  explicit TmWord(std::vector<Letter> letters);
  /// From "abba"-style text; accepts a/b in either case.
  static TmWord from_string(std::string_view text);

  [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
  [[nodiscard]] Letter operator[](std::size_t n) const { return letters_[n]; }
  [[nodiscard]] const std::vector<Letter>& letters() const noexcept { return letters_; }

  /// Lower-case "ab..." rendering.
  [[nodiscard]] std::string str() const;

  friend bool operator==(const TmWord&, const TmWord&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Sequence over {+1, -1}.
using SignWord = std::vector<int>;

SignWord to_signs(const TmWord& word);

/// "+--+"-style rendering.
std::string sign_string(const SignWord& signs);

/// Smallest power of two >= n (n >= 1).
std::size_t ceil_pow2(std::size_t n);

/// Prefix of length ceil_pow2(min_length), grown from "A" by switch-and-append.
TmWord tm_by_doubling(std::size_t min_length);

/// signs[n] = (-1)^{digit_sum(n)} for n < length.
SignWord tm_by_digit_sum(std::size_t length);

/// True iff no factor has the form www with w nonempty.
bool is_cube_free(const TmWord& word);

}  // namespace sierp
