#include "pats/rtas.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "pats/error.hpp"

namespace pats {

namespace {

std::uint64_t pair_key(Glue west, Glue south) {
  return (static_cast<std::uint64_t>(west) << 32) | south;
}

/// (W, S) -> tile index for a directed set.
std::unordered_map<std::uint64_t, std::int32_t> index_by_inputs(const TileSet& tiles) {
  std::unordered_map<std::uint64_t, std::int32_t> index;
  index.reserve(tiles.size() * 2);
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    auto [it, inserted] = index.emplace(pair_key(tiles[i].west, tiles[i].south),
                                        static_cast<std::int32_t>(i));
    if (!inserted) throw NotDirectedError();
  }
  return index;
}

struct AssemblyHash {
  std::size_t operator()(const Assembly& a) const {
    std::size_t h = 1469598103934665603ull;
    for (auto c : a.cells) h = (h ^ static_cast<std::size_t>(c + 1)) * 1099511628211ull;
    return h;
  }
};

}  // namespace

Seed Seed::uniform(int width, int height, Glue east, Glue north) {
  Seed s;
  s.kind = Kind::Uniform;
  s.bottom.assign(static_cast<std::size_t>(width), north);
  s.left.assign(static_cast<std::size_t>(height), east);
  return s;
}

Seed Seed::non_uniform(std::vector<Glue> bottom, std::vector<Glue> left) {
  Seed s;
  s.kind = Kind::NonUniform;
  s.bottom = std::move(bottom);
  s.left = std::move(left);
  return s;
}

void Rtas::validate() const {
  if (width <= 0 || height <= 0) throw ValidationError("RTAS dimensions must be positive");
  if (seed.bottom.size() != static_cast<std::size_t>(width) ||
      seed.left.size() != static_cast<std::size_t>(height))
    throw ValidationError("seed dimensions do not match the RTAS");
  if (seed.kind == Seed::Kind::Uniform) {
    auto all_same = [](const std::vector<Glue>& v) {
      return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
    };
    if (!all_same(seed.bottom) || !all_same(seed.left))
      throw ValidationError("uniform seed exposes differing glues");
  }
  TileSet sorted = tiles;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ValidationError("duplicate tile type");
}

std::size_t Assembly::size() const {
  return static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(), [](std::int32_t c) { return c >= 0; }));
}

bool Assembly::is_full() const {
  return std::all_of(cells.begin(), cells.end(), [](std::int32_t c) { return c >= 0; });
}

bool is_directed(const TileSet& tiles) {
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(tiles.size() * 2);
  for (const auto& t : tiles)
    if (!seen.insert(pair_key(t.west, t.south)).second) return false;
  return true;
}

bool is_staircase(const Assembly& a) {
  for (int x = 1; x <= a.width; ++x)
    for (int y = 1; y <= a.height; ++y) {
      if (!a.filled(x, y)) continue;
      if (x > 1 && !a.filled(x - 1, y)) return false;
      if (y > 1 && !a.filled(x, y - 1)) return false;
    }
  return true;
}

bool satisfies_tiling_rule(const Rtas& rtas, const Assembly& a) {
  auto tile = [&](int x, int y) -> const TileType& {
    return rtas.tiles[static_cast<std::size_t>(a.at(x, y))];
  };
  for (int x = 1; x <= a.width; ++x)
    for (int y = 1; y <= a.height; ++y) {
      if (!a.filled(x, y)) continue;
      if ((x > 1 && !a.filled(x - 1, y)) || (y > 1 && !a.filled(x, y - 1))) return false;
      const Glue w = x == 1 ? rtas.seed.west_of(y) : tile(x - 1, y).east;
      const Glue s = y == 1 ? rtas.seed.below(x) : tile(x, y - 1).north;
      if (w != tile(x, y).west || s != tile(x, y).south) return false;
    }
  return true;
}

Assembly simulate(const Rtas& rtas, FillOrder order) {
  const auto index = index_by_inputs(rtas.tiles);
  Assembly a(rtas.width, rtas.height);
  // One pass suffices in either order: both neighbours of (x, y) are final
  // before (x, y) is visited, and an empty neighbour blocks (x, y) for good.
  auto visit = [&](int x, int y) {
    Glue w, s;
    if (x == 1) {
      w = rtas.seed.west_of(y);
    } else {
      const auto left = a.at(x - 1, y);
      if (left < 0) return;
      w = rtas.tiles[static_cast<std::size_t>(left)].east;
    }
    if (y == 1) {
      s = rtas.seed.below(x);
    } else {
      const auto below = a.at(x, y - 1);
      if (below < 0) return;
      s = rtas.tiles[static_cast<std::size_t>(below)].north;
    }
    if (auto it = index.find(pair_key(w, s)); it != index.end()) a.set(x, y, it->second);
  };
  if (order == FillOrder::ColumnMajor) {
    for (int x = 1; x <= rtas.width; ++x)
      for (int y = 1; y <= rtas.height; ++y) visit(x, y);
  } else {
    for (int y = 1; y <= rtas.height; ++y)
      for (int x = 1; x <= rtas.width; ++x) visit(x, y);
  }
  return a;
}

std::set<Assembly> brute_force_terminal_assemblies(const Rtas& rtas, std::size_t cap,
                                                   std::size_t state_cap) {
  std::unordered_multimap<std::uint64_t, std::int32_t> by_inputs;
  for (std::size_t i = 0; i < rtas.tiles.size(); ++i)
    by_inputs.emplace(pair_key(rtas.tiles[i].west, rtas.tiles[i].south),
                      static_cast<std::int32_t>(i));

  std::set<Assembly> terminal;
  std::unordered_set<Assembly, AssemblyHash> visited;
  std::vector<Assembly> stack{Assembly(rtas.width, rtas.height)};
  visited.insert(stack.back());

  while (!stack.empty()) {
    Assembly a = std::move(stack.back());
    stack.pop_back();
    bool grew = false;
    for (int x = 1; x <= a.width; ++x) {
      for (int y = 1; y <= a.height; ++y) {
        if (a.filled(x, y)) continue;
        Glue w, s;
        if (x == 1) {
          w = rtas.seed.west_of(y);
        } else if (a.filled(x - 1, y)) {
          w = rtas.tiles[static_cast<std::size_t>(a.at(x - 1, y))].east;
        } else {
          continue;
        }
        if (y == 1) {
          s = rtas.seed.below(x);
        } else if (a.filled(x, y - 1)) {
          s = rtas.tiles[static_cast<std::size_t>(a.at(x, y - 1))].north;
        } else {
          continue;
        }
        auto [lo, hi] = by_inputs.equal_range(pair_key(w, s));
        for (auto it = lo; it != hi; ++it) {
          grew = true;
          Assembly next = a;
          next.set(x, y, it->second);
          if (visited.insert(next).second) {
            if (visited.size() > state_cap)
              throw CapExceeded("assembly state cap exceeded");
            stack.push_back(std::move(next));
          }
        }
      }
    }
    if (!grew) {
      terminal.insert(std::move(a));
      if (terminal.size() > cap) throw CapExceeded("terminal assembly cap exceeded");
    }
  }
  return terminal;
}

bool assembly_has_pattern(const Rtas& rtas, const Assembly& a, const Pattern& p) {
  if (a.width != p.width() || a.height != p.height()) return false;
  for (int x = 1; x <= a.width; ++x)
    for (int y = 1; y <= a.height; ++y) {
      if (!a.filled(x, y)) return false;
      if (rtas.tiles[static_cast<std::size_t>(a.at(x, y))].color != p.at(x, y)) return false;
    }
  return true;
}

bool uniquely_assembles(const Rtas& rtas, const Pattern& p, std::size_t cap) {
  if (rtas.width != p.width() || rtas.height != p.height())
    throw ValidationError("RTAS and pattern dimensions differ");
  if (is_directed(rtas.tiles)) return assembly_has_pattern(rtas, simulate(rtas), p);
  const auto terminal = brute_force_terminal_assemblies(rtas, cap);
  return std::all_of(terminal.begin(), terminal.end(),
                     [&](const Assembly& a) { return assembly_has_pattern(rtas, a, p); });
}

// ---- files ----------------------------------------------------------------

Rtas random_directed_rtas(std::mt19937_64& rng, const RandomRtasParams& params) {
  if (params.glues <= 0 || params.colors <= 0 || params.width <= 0 || params.height <= 0)
    throw ValidationError("random RTAS parameters must be positive");
  std::uniform_int_distribution<int> glue(0, params.glues - 1);
  std::uniform_int_distribution<int> color(0, params.colors - 1);
  std::vector<std::uint64_t> pairs;
  for (int w = 0; w < params.glues; ++w)
    for (int s = 0; s < params.glues; ++s) pairs.push_back(pair_key(static_cast<Glue>(w), static_cast<Glue>(s)));
  std::shuffle(pairs.begin(), pairs.end(), rng);
  const auto count = std::min<std::size_t>(pairs.size(), static_cast<std::size_t>(std::max(params.tiles, 0)));
  Rtas r;
  r.width = params.width;
  r.height = params.height;
  for (std::size_t i = 0; i < count; ++i)
    r.tiles.push_back(TileType{static_cast<Color>(color(rng)), static_cast<Glue>(glue(rng)),
                               static_cast<Glue>(glue(rng)), static_cast<Glue>(pairs[i] & 0xffffffffu),
                               static_cast<Glue>(pairs[i] >> 32)});
  if (params.uniform_seed) {
    r.seed = Seed::uniform(params.width, params.height, static_cast<Glue>(glue(rng)),
                           static_cast<Glue>(glue(rng)));
  } else {
    std::vector<Glue> bottom(static_cast<std::size_t>(params.width));
    std::vector<Glue> left(static_cast<std::size_t>(params.height));
    for (auto& g : bottom) g = static_cast<Glue>(glue(rng));
    for (auto& g : left) g = static_cast<Glue>(glue(rng));
    r.seed = Seed::non_uniform(std::move(bottom), std::move(left));
  }
  return r;
}

Glue GlueTable::intern(const std::string& name) {
  auto [it, inserted] = ids_.try_emplace(name, static_cast<Glue>(names_.size()));
  if (inserted) names_.push_back(name);
  return it->second;
}

std::string GlueTable::name(Glue g) const {
  if (g < names_.size()) return names_[g];
  return std::to_string(g);
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string value_of(const std::string& token, const std::string& key) {
  if (token.rfind(key + "=", 0) != 0)
    throw FormatError("expected " + key + "=..., got '" + token + "'");
  std::string v = token.substr(key.size() + 1);
  if (v.empty()) throw FormatError("empty value for " + key);
  return v;
}

}  // namespace

TileSetFile parse_tileset(std::string_view text, const Pattern& p) {
  TileSetFile out;
  out.glyphs = p.glyphs();
  out.rtas.width = p.width();
  out.rtas.height = p.height();
  bool have_seed = false;

  auto color_of = [&](char g) {
    auto it = std::find(out.glyphs.begin(), out.glyphs.end(), g);
    if (it != out.glyphs.end()) return static_cast<Color>(it - out.glyphs.begin());
    out.glyphs.push_back(g);
    return static_cast<Color>(out.glyphs.size() - 1);
  };

  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    try {
      if (tok[0] == "tile") {
        if (tok.size() != 6 || tok[1].size() != 1)
          throw FormatError("expected: tile <glyph> N=<g> E=<g> S=<g> W=<g>");
        TileType t;
        t.color = color_of(tok[1][0]);
        t.north = out.glues.intern(value_of(tok[2], "N"));
        t.east = out.glues.intern(value_of(tok[3], "E"));
        t.south = out.glues.intern(value_of(tok[4], "S"));
        t.west = out.glues.intern(value_of(tok[5], "W"));
        out.rtas.tiles.push_back(t);
      } else if (tok[0] == "seed") {
        if (have_seed) throw FormatError("duplicate seed record");
        have_seed = true;
        if (tok.size() == 4 && tok[1] == "uniform") {
          const Glue east = out.glues.intern(value_of(tok[2], "east"));
          const Glue north = out.glues.intern(value_of(tok[3], "north"));
          out.rtas.seed = Seed::uniform(p.width(), p.height(), east, north);
        } else if (tok.size() == 4 && tok[1] == "nonuniform") {
          std::vector<Glue> bottom, left;
          for (const auto& g : split(value_of(tok[2], "bottom"), ','))
            bottom.push_back(out.glues.intern(g));
          for (const auto& g : split(value_of(tok[3], "left"), ','))
            left.push_back(out.glues.intern(g));
          if (bottom.size() != static_cast<std::size_t>(p.width()) ||
              left.size() != static_cast<std::size_t>(p.height()))
            throw FormatError("seed arm lengths do not match the pattern");
          out.rtas.seed = Seed::non_uniform(std::move(bottom), std::move(left));
        } else {
          throw FormatError("expected: seed uniform east=<g> north=<g> | "
                            "seed nonuniform bottom=<g,...> left=<g,...>");
        }
      } else {
        throw FormatError("unknown record '" + tok[0] + "'");
      }
    } catch (const FormatError& e) {
      throw FormatError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!have_seed) {
    const Glue zero = out.glues.intern("0");
    out.rtas.seed = Seed::uniform(p.width(), p.height(), zero, zero);
  }
  std::vector<TileType> sorted = out.rtas.tiles;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw FormatError("duplicate tile type");
  return out;
}

std::string render_tileset(const Rtas& rtas, const std::vector<char>& glyphs,
                           const GlueTable* glues) {
  auto name = [&](Glue g) { return glues ? glues->name(g) : std::to_string(g); };
  std::ostringstream out;
  for (const auto& t : rtas.tiles) {
    out << "tile " << glyphs.at(t.color) << " N=" << name(t.north) << " E=" << name(t.east)
        << " S=" << name(t.south) << " W=" << name(t.west) << '\n';
  }
  if (rtas.seed.kind == Seed::Kind::Uniform) {
    out << "seed uniform east=" << name(rtas.seed.left.front())
        << " north=" << name(rtas.seed.bottom.front()) << '\n';
  } else {
    out << "seed nonuniform bottom=";
    for (std::size_t i = 0; i < rtas.seed.bottom.size(); ++i)
      out << (i ? "," : "") << name(rtas.seed.bottom[i]);
    out << " left=";
    for (std::size_t i = 0; i < rtas.seed.left.size(); ++i)
      out << (i ? "," : "") << name(rtas.seed.left[i]);
    out << '\n';
  }
  return out.str();
}

std::string render_assembly(const Rtas& rtas, const Assembly& a, const Pattern& p) {
  std::string out;
  for (int y = a.height; y >= 1; --y) {
    for (int x = 1; x <= a.width; ++x) {
      const auto t = a.at(x, y);
      if (t < 0) {
        out.push_back('.');
        continue;
      }
      const Color c = rtas.tiles[static_cast<std::size_t>(t)].color;
      out.push_back(c < p.glyphs().size() ? p.glyph(c) : '?');
    }
    if (y > 1) out.push_back('\n');
  }
  return out;
}

}  // namespace pats
