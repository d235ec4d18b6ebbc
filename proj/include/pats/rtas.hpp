#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pats/pattern.hpp"

namespace pats {

using Glue = std::uint32_t;

/// Seed model: glues chosen with the tile set, or fixed and identical.
enum class PatsVariant { NonUniform, Uniform };

/// A tile type is identified by its color and its four glues.
struct TileType {
  Color color = 0;
  Glue north = 0;
  Glue east = 0;
  Glue south = 0;
  Glue west = 0;

  friend auto operator<=>(const TileType&, const TileType&) = default;
};

using TileSet = std::vector<TileType>;

/// L-shaped seed, stored as the glues it exposes to the w x h rectangle:
/// `bottom[x-1]` is the north glue of seed tile (x, 0) and `left[y-1]` the
/// east glue of seed tile (0, y).
struct Seed {
  enum class Kind { NonUniform, Uniform };

  Kind kind = Kind::Uniform;
  std::vector<Glue> bottom;
  std::vector<Glue> left;

  static Seed uniform(int width, int height, Glue east = 0, Glue north = 0);
  static Seed non_uniform(std::vector<Glue> bottom, std::vector<Glue> left);

  Glue below(int x) const { return bottom[static_cast<std::size_t>(x - 1)]; }
  Glue west_of(int y) const { return left[static_cast<std::size_t>(y - 1)]; }

  friend bool operator==(const Seed&, const Seed&) = default;
};

struct Rtas {
  TileSet tiles;
  Seed seed;
  int width = 0;
  int height = 0;

  /// Throws ValidationError on duplicate types or seed/size mismatch.
  void validate() const;

  friend bool operator==(const Rtas&, const Rtas&) = default;
};

/// Partial placement over the w x h rectangle; entries are indices into the
/// tile set that produced it, or -1 when empty.
struct Assembly {
  int width = 0;
  int height = 0;
  std::vector<std::int32_t> cells;

  Assembly() = default;
  Assembly(int w, int h)
      : width(w), height(h),
        cells(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), -1) {}

  std::int32_t at(int x, int y) const {
    return cells[static_cast<std::size_t>((y - 1) * width + (x - 1))];
  }
  void set(int x, int y, std::int32_t t) {
    cells[static_cast<std::size_t>((y - 1) * width + (x - 1))] = t;
  }
  bool filled(int x, int y) const { return at(x, y) >= 0; }
  std::size_t size() const;
  bool is_full() const;

  friend auto operator<=>(const Assembly&, const Assembly&) = default;
};

bool is_directed(const TileSet& tiles);

/// True when every filled cell has its west and south neighbours filled or on
/// the seed.
bool is_staircase(const Assembly& a);

/// True when every placement agrees with its west and south neighbours.
bool satisfies_tiling_rule(const Rtas& rtas, const Assembly& a);

enum class FillOrder { ColumnMajor, RowMajor };

/// Unique terminal assembly of a directed system. Throws NotDirectedError.
Assembly simulate(const Rtas& rtas, FillOrder order = FillOrder::ColumnMajor);

/// Every terminal assembly, by exhaustive nondeterministic growth memoized on
/// the assembly. Throws CapExceeded when more than `cap` terminal assemblies
/// exist or the explored state count exceeds `state_cap`.
std::set<Assembly> brute_force_terminal_assemblies(const Rtas& rtas,
                                                   std::size_t cap,
                                                   std::size_t state_cap = 1'000'000);

/// Color projection matches `p` on the full rectangle.
bool assembly_has_pattern(const Rtas& rtas, const Assembly& a, const Pattern& p);

/// Every terminal assembly is total and has pattern `p`. Directed systems are
/// simulated; others go through brute_force_terminal_assemblies with `cap`.
bool uniquely_assembles(const Rtas& rtas, const Pattern& p, std::size_t cap = 1000);

struct RandomRtasParams {
  int width = 4;
  int height = 3;
  int tiles = 6;
  int glues = 3;
  int colors = 2;
  bool uniform_seed = false;
};

/// Random directed system: distinct (W, S) pairs drawn from the glue range,
/// other glues and colors uniform. Patterns need not be realized.
Rtas random_directed_rtas(std::mt19937_64& rng, const RandomRtasParams& params);

// ---- tile set files -------------------------------------------------------

/// Glue names for I/O. Glues are interned in first-occurrence order.
class GlueTable {
 public:
  Glue intern(const std::string& name);
  std::string name(Glue g) const;
  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Glue> ids_;
};

struct TileSetFile {
  Rtas rtas;
  GlueTable glues;
  /// Pattern glyphs followed by any glyphs only the tile file uses.
  std::vector<char> glyphs;
};

/// Parses `tile <glyph> N=.. E=.. S=.. W=..` and `seed ...` records. Colors
/// are mapped through the pattern's glyphs; unknown glyphs get fresh ids.
/// Dimensions come from the pattern.
TileSetFile parse_tileset(std::string_view text, const Pattern& p);

/// Writes a tile set file. Glue names come from `glues` when given, else the
/// numeric id is used.
std::string render_tileset(const Rtas& rtas, const std::vector<char>& glyphs,
                           const GlueTable* glues = nullptr);

/// Renders an assembly with pattern glyphs, '.' for empty cells, top first.
std::string render_assembly(const Rtas& rtas, const Assembly& a, const Pattern& p);

}  // namespace pats
