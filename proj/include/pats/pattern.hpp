#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace pats {

using Color = std::uint32_t;

/// Rectangular color grid. Cells are addressed with 1-based (x, y), y = 1 the
/// bottom row. Color ids are dense; each id carries a display glyph.
class Pattern {
 public:
  Pattern() = default;
  Pattern(int width, int height, std::vector<Color> cells,
          std::vector<char> glyphs);

  /// Builds a pattern from glyph rows given top row first. Color ids are
  /// assigned by first occurrence in reading order.
  static Pattern from_rows(const std::vector<std::string>& rows_top_first);

  int width() const { return width_; }
  int height() const { return height_; }
  Color at(int x, int y) const {
    return cells_[static_cast<std::size_t>((y - 1) * width_ + (x - 1))];
  }
  const std::vector<Color>& cells() const { return cells_; }

  /// Declared color count (number of glyphs).
  int num_colors() const { return static_cast<int>(glyphs_.size()); }
  const std::vector<char>& glyphs() const { return glyphs_; }
  char glyph(Color c) const { return glyphs_.at(c); }

  /// color(P): the distinct colors that actually occur.
  std::set<Color> color_set() const;

  /// Column x (1-based) bottom to top.
  std::vector<Color> column(int x) const;

  /// Same grid with colors renumbered by first occurrence in column-major
  /// order; glyphs follow the ids. Used to share work between patterns that
  /// differ only by a color permutation.
  Pattern canonical_colors() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<Color> cells_;
  std::vector<char> glyphs_;
};

Pattern parse_pattern(std::string_view text);
std::string render_pattern(const Pattern& p);

/// All width x height patterns over `colors` colors, in lexicographic order
/// of the row-major cell vector. Glyphs are 'a', 'b', ...
std::vector<Pattern> enumerate_patterns(int width, int height, int colors);

}  // namespace pats
