#include "sierp/tmword.hpp"

#include <bit>
#include <stdexcept>

#include "sierp/bitops.hpp"

namespace sierp {

TmWord::TmWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw std::invalid_argument("TmWord: empty word");
}

TmWord TmWord::from_string(std::string_view text) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) {
    if (c == 'a' || c == 'A') letters.push_back(Letter::A);
    else if (c == 'b' || c == 'B') letters.push_back(Letter::B);
    else throw std::invalid_argument(std::string("TmWord: letter outside {a,b}: ") + c);
  }
  return TmWord(std::move(letters));
}

std::string TmWord::str() const {
  std::string out;
  out.reserve(letters_.size());
  for (Letter l : letters_) out.push_back(l == Letter::A ? 'a' : 'b');
  return out;
}

SignWord to_signs(const TmWord& word) {
  SignWord out;
  out.reserve(word.size());
  for (Letter l : word.letters()) out.push_back(to_sign(l));
  return out;
}

std::string sign_string(const SignWord& signs) {
  std::string out;
  out.reserve(signs.size());
  for (int s : signs) out.push_back(s > 0 ? '+' : '-');
  return out;
}

std::size_t ceil_pow2(std::size_t n) {
  if (n == 0) throw std::invalid_argument("ceil_pow2: n must be positive");
  return std::bit_ceil(n);
}

TmWord tm_by_doubling(std::size_t min_length) {
  const std::size_t target = ceil_pow2(min_length);
  std::vector<Letter> w{Letter::A};
  w.reserve(target);
  while (w.size() < target) {
    const std::size_t half = w.size();
    for (std::size_t n = 0; n < half; ++n) w.push_back(complement(w[n]));
  }
  return TmWord(std::move(w));
}

SignWord tm_by_digit_sum(std::size_t length) {
  if (length == 0) throw std::invalid_argument("tm_by_digit_sum: length must be positive");
  SignWord out(length);
  for (std::size_t n = 0; n < length; ++n) out[n] = (digit_sum(n) % 2 == 0) ? 1 : -1;
  return out;
}

bool is_cube_free(const TmWord& word) {
  const auto& w = word.letters();
  const std::size_t len = w.size();
  for (std::size_t period = 1; 3 * period <= len; ++period) {
    // Count the run of positions where w[n] == w[n + period]; a cube of this
    // period exists iff some run reaches 2 * period.
    std::size_t run = 0;
    for (std::size_t n = 0; n + period < len; ++n) {
      run = (w[n] == w[n + period]) ? run + 1 : 0;
      if (run >= 2 * period) return false;
    }
  }
  return true;
}

}  // namespace sierp
