#include "pats/pattern.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "pats/error.hpp"

namespace pats {

Pattern::Pattern(int width, int height, std::vector<Color> cells,
                 std::vector<char> glyphs)
    : width_(width), height_(height), cells_(std::move(cells)),
      glyphs_(std::move(glyphs)) {
  if (width_ <= 0 || height_ <= 0) throw FormatError("pattern must be non-empty");
  if (cells_.size() != static_cast<std::size_t>(width_) * height_)
    throw FormatError("pattern cell count does not match dimensions");
  for (Color c : cells_)
    if (c >= glyphs_.size()) throw FormatError("pattern cell color out of range");
}

Pattern Pattern::from_rows(const std::vector<std::string>& rows) {
  if (rows.empty()) throw FormatError("empty pattern");
  const std::size_t w = rows.front().size();
  if (w == 0) throw FormatError("empty pattern row");
  const int h = static_cast<int>(rows.size());
  std::vector<Color> cells(w * rows.size());
  std::vector<char> glyphs;
  std::unordered_map<char, Color> ids;
  for (int r = 0; r < h; ++r) {
    const std::string& row = rows[static_cast<std::size_t>(r)];
    if (row.size() != w) throw FormatError("ragged pattern rows");
    const int y = h - r;
    for (std::size_t i = 0; i < w; ++i) {
      const char g = row[i];
      if (g < 0x21 || g > 0x7e)
        throw FormatError(std::string("non-printable glyph in pattern"));
      auto [it, inserted] = ids.try_emplace(g, static_cast<Color>(glyphs.size()));
      if (inserted) glyphs.push_back(g);
      cells[static_cast<std::size_t>(y - 1) * w + i] = it->second;
    }
  }
  return Pattern(static_cast<int>(w), h, std::move(cells), std::move(glyphs));
}

std::set<Color> Pattern::color_set() const {
  return std::set<Color>(cells_.begin(), cells_.end());
}

std::vector<Color> Pattern::column(int x) const {
  std::vector<Color> col;
  col.reserve(static_cast<std::size_t>(height_));
  for (int y = 1; y <= height_; ++y) col.push_back(at(x, y));
  return col;
}

Pattern Pattern::canonical_colors() const {
  std::vector<Color> remap(glyphs_.size(), static_cast<Color>(-1));
  std::vector<char> glyphs;
  std::vector<Color> cells(cells_.size());
  for (int x = 1; x <= width_; ++x) {
    for (int y = 1; y <= height_; ++y) {
      const Color c = at(x, y);
      if (remap[c] == static_cast<Color>(-1)) {
        remap[c] = static_cast<Color>(glyphs.size());
        glyphs.push_back(static_cast<char>('a' + glyphs.size()));
      }
      cells[static_cast<std::size_t>((y - 1) * width_ + (x - 1))] = remap[c];
    }
  }
  return Pattern(width_, height_, std::move(cells), std::move(glyphs));
}

Pattern parse_pattern(std::string_view text) {
  std::vector<std::string> rows;
  std::string line;
  std::istringstream in{std::string(text)};
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    rows.push_back(line);
  }
  // A single trailing newline is tolerated; interior blank lines are not.
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  if (rows.empty()) throw FormatError("empty pattern");
  return Pattern::from_rows(rows);
}

std::string render_pattern(const Pattern& p) {
  std::string out;
  out.reserve(static_cast<std::size_t>((p.width() + 1) * p.height()));
  for (int y = p.height(); y >= 1; --y) {
    for (int x = 1; x <= p.width(); ++x) out.push_back(p.glyph(p.at(x, y)));
    if (y > 1) out.push_back('\n');
  }
  return out;
}

std::vector<Pattern> enumerate_patterns(int width, int height, int colors) {
  const std::size_t n = static_cast<std::size_t>(width) * height;
  std::vector<char> glyphs;
  for (int c = 0; c < colors; ++c) glyphs.push_back(static_cast<char>('a' + c));
  std::vector<Pattern> out;
  std::vector<Color> cells(n, 0);
  while (true) {
    out.emplace_back(width, height, cells, glyphs);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++cells[i] < static_cast<Color>(colors)) break;
      cells[i] = 0;
      if (i == 0) return out;
    }
    if (n == 0) return out;
  }
}

}  // namespace pats
