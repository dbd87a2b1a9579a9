#include "sierp/render.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "sierp/bitops.hpp"

namespace sierp {

namespace {

// Plain PBM lines should stay within 70 characters: 35 "d " cells.
constexpr std::size_t kPbmCellsPerLine = 35;

bool pattern_bit(std::size_t i, std::size_t j) { return j <= i && is_free_of(i - j, j); }

}  // namespace

void RenderSpec::validate() const {
  const unsigned cap = format == RenderFormat::Ascii ? kMaxAsciiK : kMaxPbmK;
  if (k > cap)
    throw std::invalid_argument("render: k=" + std::to_string(k) + " exceeds the limit " + std::to_string(cap) +
                                " for this format");
}

void render(const RenderSpec& spec, std::ostream& out) {
  spec.validate();
  const std::size_t n = std::size_t{1} << spec.k;
  std::string line;
  if (spec.format == RenderFormat::Ascii) {
    line.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) line[j] = pattern_bit(i, j) ? spec.on : spec.off;
      out << line << '\n';
    }
    return;
  }

  out << "P1\n" << n << ' ' << n << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    line.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (j > 0) line.push_back(j % kPbmCellsPerLine == 0 ? '\n' : ' ');
      line.push_back(pattern_bit(i, j) ? '1' : '0');
    }
    out << line << '\n';
  }
}

Bitmap read_pbm_p1(std::string_view text) {
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size()) {
      if (text[pos] == '#') {
        while (pos < text.size() && text[pos] != '\n') ++pos;
      } else if (std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      } else {
        break;
      }
    }
  };
  auto read_uint = [&] {
    skip_space();
    const std::size_t start = pos;
    std::size_t value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      value = value * 10 + static_cast<std::size_t>(text[pos++] - '0');
    if (pos == start) throw std::invalid_argument("pbm: expected an integer");
    return value;
  };

  if (text.substr(0, 2) != "P1") throw std::invalid_argument("pbm: missing P1 magic");
  pos = 2;
  Bitmap bmp;
  bmp.width = read_uint();
  bmp.height = read_uint();
  if (bmp.width == 0 || bmp.height == 0) throw std::invalid_argument("pbm: empty image");
  bmp.pixels.reserve(bmp.width * bmp.height);
  while (bmp.pixels.size() < bmp.width * bmp.height) {
    skip_space();
    if (pos >= text.size()) throw std::invalid_argument("pbm: truncated pixel data");
    const char c = text[pos++];
    if (c != '0' && c != '1') throw std::invalid_argument(std::string("pbm: bad pixel character '") + c + "'");
    bmp.pixels.push_back(c == '1');
  }
  skip_space();
  if (pos != text.size()) throw std::invalid_argument("pbm: trailing data after pixels");
  return bmp;
}

void write_matrix_csv(const TriMatrix& m, std::ostream& out) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = m.row(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (j > 0) out << ',';
      out << (j <= i ? to_string(r[j]) : "0");
    }
    out << '\n';
  }
}

void write_matrix_json(const TriMatrix& m, std::ostream& out) {
  const std::size_t n = m.size();
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < n; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  out << rows.dump() << '\n';
}

TriMatrix read_matrix_csv(std::string_view text) {
  std::vector<std::vector<Rational>> rows;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    start = end + 1;
    if (line.empty()) continue;

    std::vector<Rational>& row = rows.emplace_back();
    std::size_t cell = 0;
    while (true) {
      const std::size_t comma = line.find(',', cell);
      row.push_back(parse_rational(line.substr(cell, comma == std::string_view::npos ? std::string_view::npos : comma - cell)));
      if (comma == std::string_view::npos) break;
      cell = comma + 1;
    }
  }

  const std::size_t n = rows.size();
  if (n == 0) throw std::invalid_argument("csv: no rows");
  TriMatrix m(n);  // rejects non-powers of two
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw std::invalid_argument("csv: row " + std::to_string(i) + " has the wrong length");
    for (std::size_t j = 0; j < n; ++j) {
      if (j > i) {
        if (sgn(rows[i][j]) != 0)
          throw std::invalid_argument("csv: nonzero entry above the diagonal at (" + std::to_string(i) + "," +
                                      std::to_string(j) + ")");
      } else if (sgn(rows[i][j]) != 0) {
        m.set(i, j, std::move(rows[i][j]));
      }
    }
  }
  return m;
}

}  // namespace sierp
