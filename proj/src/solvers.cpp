#include "pats/solvers.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <limits>
#include <map>
#include <set>
#include <unordered_map>

namespace pats {

namespace {

std::uint64_t pair_key(Glue west, Glue south) {
  return (static_cast<std::uint64_t>(west) << 32) | south;
}

std::unordered_map<std::uint64_t, std::int32_t> directed_index(const TileSet& tiles) {
  std::unordered_map<std::uint64_t, std::int32_t> index;
  for (std::size_t i = 0; i < tiles.size(); ++i)
    if (!index.emplace(pair_key(tiles[i].west, tiles[i].south), static_cast<std::int32_t>(i))
             .second)
      throw NotDirectedError();
  return index;
}

// ---- column DP -----------------------------------------------------------------

struct ColumnEntry {
  std::vector<std::int32_t> tiles;  // bottom to top
  std::int32_t parent = -1;
  Glue bottom = 0;
  std::vector<Glue> left;  // first column only
};

DpResult run_dp(const TileSet& tiles, const Pattern& p, const Seed* fixed) {
  const auto index = directed_index(tiles);
  const int w = p.width(), h = p.height();
  if (fixed && (fixed->bottom.size() != static_cast<std::size_t>(w) ||
                fixed->left.size() != static_cast<std::size_t>(h)))
    throw ValidationError("seed dimensions do not match the pattern");

  // A glue no tile takes from the south blocks the whole column, so only
  // these candidates matter.
  std::set<Glue> south_glues;
  for (const auto& t : tiles) south_glues.insert(t.south);

  DpResult result;
  std::vector<std::vector<ColumnEntry>> layers(static_cast<std::size_t>(w));

  // Column 1. With a free seed the west glue of every row is a choice, so
  // the column is enumerated over all tiles with the right south glue.
  {
    auto& layer = layers[0];
    std::vector<Glue> bottoms;
    if (fixed) bottoms.push_back(fixed->below(1));
    else bottoms.assign(south_glues.begin(), south_glues.end());
    for (Glue b : bottoms) {
      ColumnEntry cur;
      cur.bottom = b;
      auto extend = [&](auto&& self, int y, Glue south) -> void {
        if (y > h) {
          layer.push_back(cur);
          return;
        }
        if (fixed) {
          auto it = index.find(pair_key(fixed->west_of(y), south));
          if (it == index.end()) return;
          const auto& t = tiles[static_cast<std::size_t>(it->second)];
          if (t.color != p.at(1, y)) return;
          cur.tiles.push_back(it->second);
          cur.left.push_back(t.west);
          self(self, y + 1, t.north);
          cur.tiles.pop_back();
          cur.left.pop_back();
          return;
        }
        for (std::size_t i = 0; i < tiles.size(); ++i) {
          const auto& t = tiles[i];
          if (t.south != south || t.color != p.at(1, y)) continue;
          cur.tiles.push_back(static_cast<std::int32_t>(i));
          cur.left.push_back(t.west);
          self(self, y + 1, t.north);
          cur.tiles.pop_back();
          cur.left.pop_back();
        }
      };
      extend(extend, 1, b);
    }
    result.states += layer.size();
  }

  for (int x = 2; x <= w && !layers[static_cast<std::size_t>(x - 2)].empty(); ++x) {
    const auto& prev = layers[static_cast<std::size_t>(x - 2)];
    auto& layer = layers[static_cast<std::size_t>(x - 1)];
    std::map<std::vector<std::int32_t>, bool> seen;
    std::vector<Glue> bottoms;
    if (fixed) bottoms.push_back(fixed->below(x));
    else bottoms.assign(south_glues.begin(), south_glues.end());
    for (std::size_t e = 0; e < prev.size(); ++e) {
      for (Glue b : bottoms) {
        ColumnEntry cur;
        cur.parent = static_cast<std::int32_t>(e);
        cur.bottom = b;
        Glue south = b;
        bool ok = true;
        for (int y = 1; y <= h && ok; ++y) {
          const Glue west = tiles[static_cast<std::size_t>(prev[e].tiles[static_cast<std::size_t>(y - 1)])].east;
          auto it = index.find(pair_key(west, south));
          if (it == index.end() || tiles[static_cast<std::size_t>(it->second)].color != p.at(x, y)) {
            ok = false;
            break;
          }
          cur.tiles.push_back(it->second);
          south = tiles[static_cast<std::size_t>(it->second)].north;
        }
        if (ok && seen.emplace(cur.tiles, true).second) layer.push_back(std::move(cur));
      }
    }
    result.states += layer.size();
  }

  const auto& last = layers[static_cast<std::size_t>(w - 1)];
  if (last.empty()) return result;
  result.ok = true;
  std::vector<Glue> bottom(static_cast<std::size_t>(w));
  std::int32_t e = 0;
  for (int x = w; x >= 1; --x) {
    const auto& entry = layers[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(e)];
    bottom[static_cast<std::size_t>(x - 1)] = entry.bottom;
    if (x == 1) {
      result.seed = fixed ? *fixed : Seed::non_uniform(bottom, entry.left);
    }
    e = entry.parent;
  }
  return result;
}

// ---- lazy canonical search -------------------------------------------------------

constexpr Glue kUnset = std::numeric_limits<Glue>::max();

/// Depth-first search over directed tile sets of at most `limit` types,
/// visiting cells column-major. A tile type appears when its (west, south)
/// pair is first met; any glue (seed glues included) is fixed when first read,
/// as an existing glue or the next fresh one.
class LazySearch {
 public:
  LazySearch(const Pattern& p, int limit, std::optional<Glue> uniform_bottom,
             std::size_t node_cap)
      : p_(&p), w_(p.width()), h_(p.height()), limit_(limit), node_cap_(node_cap) {
    bottom_.assign(static_cast<std::size_t>(w_), kUnset);
    left_.assign(static_cast<std::size_t>(h_), kUnset);
    cells_.assign(static_cast<std::size_t>(w_ * h_), -1);
    if (uniform_bottom) {
      uniform_ = true;
      std::fill(left_.begin(), left_.end(), 0);
      std::fill(bottom_.begin(), bottom_.end(), *uniform_bottom);
      next_glue_ = *uniform_bottom + 1;
    }
    masked_ = p.num_colors() <= 64;
    if (masked_) {
      suffix_colors_.assign(static_cast<std::size_t>(w_ * h_ + 1), 0);
      for (int i = w_ * h_ - 1; i >= 0; --i)
        suffix_colors_[static_cast<std::size_t>(i)] =
            suffix_colors_[static_cast<std::size_t>(i + 1)] | (1ull << color_at(i));
    }
  }

  bool run(int from) { return dfs(from); }

  /// Stops every branch at cell `split` and stores the partial state.
  std::vector<LazySearch> frontier(int split) {
    std::vector<LazySearch> out;
    collect_ = &out;
    split_ = split;
    dfs(0);
    collect_ = nullptr;
    for (auto& s : out) {
      s.split_ = -1;
      s.nodes_ = 0;
    }
    return out;
  }

  std::size_t nodes() const { return nodes_; }

  Rtas witness() const {
    Rtas r;
    r.width = w_;
    r.height = h_;
    r.tiles = tiles_;
    // Glues nobody reads are free; glue 0 keeps the output tidy.
    for (auto& t : r.tiles) {
      if (t.north == kUnset) t.north = 0;
      if (t.east == kUnset) t.east = 0;
    }
    auto fill = [](std::vector<Glue> v) {
      for (auto& g : v)
        if (g == kUnset) g = 0;
      return v;
    };
    r.seed = uniform_ ? Seed::uniform(w_, h_, left_[0], bottom_[0])
                      : Seed::non_uniform(fill(bottom_), fill(left_));
    return r;
  }

 private:
  enum class Slot { Left, Bottom, North, East };

  Color color_at(int idx) const { return p_->at(idx / h_ + 1, idx % h_ + 1); }

  Glue& ref(Slot s, int i) {
    switch (s) {
      case Slot::Left: return left_[static_cast<std::size_t>(i)];
      case Slot::Bottom: return bottom_[static_cast<std::size_t>(i)];
      case Slot::North: return tiles_[static_cast<std::size_t>(i)].north;
      default: return tiles_[static_cast<std::size_t>(i)].east;
    }
  }

  template <class F>
  bool resolve(Slot s, int i, F&& cont) {
    const Glue v = ref(s, i);
    if (v != kUnset) return cont(v);
    const Glue fresh = next_glue_;
    for (Glue g = 0; g <= fresh; ++g) {
      ref(s, i) = g;
      if (g == fresh) ++next_glue_;
      if (cont(g)) return true;
      if (g == fresh) --next_glue_;
      ref(s, i) = kUnset;
    }
    return false;
  }

  bool dfs(int idx) {
    if (idx == w_ * h_) return true;
    if (++nodes_ > node_cap_) throw CapExceeded("solver node cap exceeded");
    if (collect_ && idx == split_) {
      collect_->push_back(*this);
      collect_->back().collect_ = nullptr;
      return false;
    }
    if (masked_) {
      const auto missing = suffix_colors_[static_cast<std::size_t>(idx)] & ~covered_;
      if (static_cast<int>(tiles_.size()) + std::popcount(missing) > limit_) return false;
    }
    const int x = idx / h_ + 1, y = idx % h_ + 1;
    auto with_west = [&](Glue west) {
      auto with_south = [&](Glue south) { return place(idx, west, south); };
      if (y == 1) return resolve(Slot::Bottom, x - 1, with_south);
      return resolve(Slot::North, cells_[static_cast<std::size_t>(idx - 1)], with_south);
    };
    if (x == 1) return resolve(Slot::Left, y - 1, with_west);
    return resolve(Slot::East, cells_[static_cast<std::size_t>(idx - h_)], with_west);
  }

  bool place(int idx, Glue west, Glue south) {
    const Color c = color_at(idx);
    for (std::size_t t = 0; t < tiles_.size(); ++t) {
      if (tiles_[t].west != west || tiles_[t].south != south) continue;
      if (tiles_[t].color != c) return false;
      cells_[static_cast<std::size_t>(idx)] = static_cast<std::int32_t>(t);
      if (dfs(idx + 1)) return true;
      cells_[static_cast<std::size_t>(idx)] = -1;
      return false;
    }
    if (static_cast<int>(tiles_.size()) >= limit_) return false;
    const auto saved_cover = covered_;
    tiles_.push_back(TileType{c, kUnset, kUnset, south, west});
    if (masked_) covered_ |= 1ull << c;
    cells_[static_cast<std::size_t>(idx)] = static_cast<std::int32_t>(tiles_.size() - 1);
    if (dfs(idx + 1)) return true;
    cells_[static_cast<std::size_t>(idx)] = -1;
    tiles_.pop_back();
    covered_ = saved_cover;
    return false;
  }

  const Pattern* p_;
  int w_, h_, limit_;
  std::size_t node_cap_;
  bool uniform_ = false;
  bool masked_ = false;
  std::vector<std::uint64_t> suffix_colors_;
  std::uint64_t covered_ = 0;
  TileSet tiles_;
  std::vector<Glue> bottom_, left_;
  std::vector<std::int32_t> cells_;
  Glue next_glue_ = 0;
  std::size_t nodes_ = 0;
  std::vector<LazySearch>* collect_ = nullptr;
  int split_ = -1;
};

/// Tries one size limit; returns the witness of the first success in DFS
/// order.
std::optional<Rtas> try_limit(const Pattern& p, int limit, std::optional<Glue> uniform_bottom,
                              const SolveOptions& opt, std::size_t& nodes) {
  const int split = p.height();
  if (opt.threads <= 1 || p.width() < 2) {
    LazySearch s(p, limit, uniform_bottom, opt.node_cap);
    const bool ok = s.run(0);
    nodes += s.nodes();
    if (ok) return s.witness();
    return std::nullopt;
  }
  LazySearch root(p, limit, uniform_bottom, opt.node_cap);
  auto front = root.frontier(split);
  nodes += root.nodes();
  const auto n = static_cast<std::int64_t>(front.size());
  std::vector<char> found(front.size(), 0);
  std::int64_t best = n;
  std::size_t sub_nodes = 0;
  bool capped = false;
#pragma omp parallel for schedule(dynamic) num_threads(opt.threads) reduction(+ : sub_nodes)
  for (std::int64_t i = 0; i < n; ++i) {
    std::int64_t current;
#pragma omp atomic read
    current = best;
    if (i > current) continue;  // a lower index already succeeded
    auto& s = front[static_cast<std::size_t>(i)];
    bool ok = false;
    try {
      ok = s.run(split);
    } catch (const CapExceeded&) {
#pragma omp atomic write
      capped = true;
    }
    sub_nodes += s.nodes();
    if (ok) {
      found[static_cast<std::size_t>(i)] = 1;
#pragma omp critical(pats_best)
      best = std::min(best, i);
    }
  }
  nodes += sub_nodes;
  // A capped subtree below the winner cannot change the answer.
  if (capped) {
    for (std::int64_t i = 0; i < best; ++i)
      if (!found[static_cast<std::size_t>(i)] && front[static_cast<std::size_t>(i)].nodes() > opt.node_cap)
        throw CapExceeded("solver node cap exceeded");
  }
  if (best < n) return front[static_cast<std::size_t>(best)].witness();
  return std::nullopt;
}

std::int64_t nonuniform_upper_bound(const Pattern& p) {
  const std::int64_t cells = static_cast<std::int64_t>(p.width()) * p.height();
  const auto c = static_cast<std::int64_t>(p.color_set().size());
  std::int64_t bound = p.height();
  for (int i = 0; i < p.height() && bound < cells; ++i) bound *= c;
  return std::min(bound, cells);
}

SolveResult solve_impl(const Pattern& p, const SolveOptions& opt, bool uniform) {
  const auto start = std::chrono::steady_clock::now();
  SolveResult res;
  const int lower = std::max<int>(1, static_cast<int>(p.color_set().size()));
  const auto upper = uniform ? static_cast<std::int64_t>(p.width()) * p.height()
                             : nonuniform_upper_bound(p);
  for (std::int64_t k = lower; k <= upper; ++k) {
    if (opt.budget_cap && k > *opt.budget_cap)
      throw BudgetExhausted("no tile set within budget " + std::to_string(*opt.budget_cap));
    std::optional<Rtas> w;
    if (uniform) {
      for (Glue b : {Glue{0}, Glue{1}}) {
        w = try_limit(p, static_cast<int>(k), b, opt, res.stats.nodes);
        if (w) break;
      }
    } else {
      w = try_limit(p, static_cast<int>(k), std::nullopt, opt, res.stats.nodes);
    }
    if (w) {
      res.min_size = static_cast<int>(w->tiles.size());
      res.witness = std::move(*w);
      res.stats.seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      return res;
    }
  }
  throw Error("search exhausted the size bound without a witness");
}

// ---- brute force oracle ----------------------------------------------------------

/// Row-major branch and bound over edge labelings.
class LabelingOracle {
 public:
  LabelingOracle(const Pattern& p, std::optional<Glue> uniform_bottom, std::size_t node_cap,
                 std::size_t& nodes, int& best, std::optional<Rtas>& best_rtas)
      : p_(p), w_(p.width()), h_(p.height()), cap_(node_cap), nodes_(nodes), best_(best),
        best_rtas_(best_rtas) {
    left_.assign(static_cast<std::size_t>(h_), kUnset);
    bottom_.assign(static_cast<std::size_t>(w_), kUnset);
    east_.assign(static_cast<std::size_t>(w_ * h_), kUnset);
    north_.assign(static_cast<std::size_t>(w_ * h_), kUnset);
    if (uniform_bottom) {
      uniform_ = true;
      std::fill(left_.begin(), left_.end(), 0);
      std::fill(bottom_.begin(), bottom_.end(), *uniform_bottom);
      fresh_ = *uniform_bottom + 1;
    }
    covered_.assign(static_cast<std::size_t>(p.num_colors()), 0);
    remaining_.resize(static_cast<std::size_t>(w_ * h_));
    std::set<Color> later;
    for (int i = w_ * h_ - 1; i >= 0; --i) {
      later.insert(p.at(i % w_ + 1, i / w_ + 1));
      remaining_[static_cast<std::size_t>(i)].assign(later.begin(), later.end());
    }
  }

  void run() { cell(1, 1); }

 private:
  void cell(int x, int y) {
    if (y > h_) {
      record();
      return;
    }
    if (++nodes_ > cap_) throw CapExceeded("brute force node cap exceeded");
    const int nx = x == w_ ? 1 : x + 1;
    const int ny = x == w_ ? y + 1 : y;
    const auto at = static_cast<std::size_t>((y - 1) * w_ + (x - 1));

    auto choose = [&](Glue& slot, auto&& body) {
      if (slot != kUnset) {
        body();
        return;
      }
      const Glue limit = fresh_;
      for (Glue g = 0; g <= limit; ++g) {
        slot = g;
        if (g == limit) ++fresh_;
        body();
        if (g == limit) --fresh_;
      }
      slot = kUnset;
    };

    auto typed = [&] {
      const Glue west = x == 1 ? left_[static_cast<std::size_t>(y - 1)] : east_[at - 1];
      const Glue south =
          y == 1 ? bottom_[static_cast<std::size_t>(x - 1)] : north_[at - static_cast<std::size_t>(w_)];
      const Color c = p_.at(x, y);
      auto it = types_.find(pair_key(west, south));
      if (it != types_.end()) {
        if (it->second.color != c) return;
        east_[at] = it->second.east;
        north_[at] = it->second.north;
        cell(nx, ny);
        east_[at] = north_[at] = kUnset;
        return;
      }
      if (static_cast<int>(types_.size()) + 1 >= best_) return;
      // Every color still to come without a type needs one more.
      int missing = 0;
      for (Color k : remaining_[at]) missing += covered_[k] == 0 && k != c;
      if (static_cast<int>(types_.size()) + 1 + missing >= best_) return;
      auto key = pair_key(west, south);
      const Glue limit_n = fresh_;
      // Nothing after the top row reads a north glue created there.
      const bool top = y == h_;
      const Glue max_n = top ? 0 : limit_n;
      ++covered_[c];
      for (Glue n = 0; n <= max_n; ++n) {
        const bool fresh_n = !top && n == limit_n;
        if (fresh_n) ++fresh_;
        const Glue limit_e = fresh_;
        for (Glue e = 0; e <= limit_e; ++e) {
          if (e == limit_e) ++fresh_;
          types_[key] = TileType{c, n, e, south, west};
          east_[at] = e;
          north_[at] = n;
          cell(nx, ny);
          types_.erase(key);
          if (e == limit_e) --fresh_;
        }
        if (fresh_n) --fresh_;
      }
      --covered_[c];
      east_[at] = north_[at] = kUnset;
    };

    auto with_west = [&] {
      if (y == 1) choose(bottom_[static_cast<std::size_t>(x - 1)], typed);
      else typed();
    };
    if (x == 1) choose(left_[static_cast<std::size_t>(y - 1)], with_west);
    else with_west();
  }

  void record() {
    const int size = static_cast<int>(types_.size());
    if (size >= best_) return;
    Rtas r;
    r.width = w_;
    r.height = h_;
    for (const auto& [k, t] : types_) r.tiles.push_back(t);
    r.seed = uniform_ ? Seed::uniform(w_, h_, left_[0], bottom_[0])
                      : Seed::non_uniform(bottom_, left_);
    best_ = size;
    best_rtas_ = std::move(r);
  }

  const Pattern& p_;
  int w_, h_;
  std::size_t cap_;
  std::size_t& nodes_;
  int& best_;
  std::optional<Rtas>& best_rtas_;
  bool uniform_ = false;
  Glue fresh_ = 0;
  std::vector<Glue> left_, bottom_, east_, north_;
  std::map<std::uint64_t, TileType> types_;
  std::vector<int> covered_;
  std::vector<std::vector<Color>> remaining_;  // colors at or after each cell
};

}  // namespace

DpResult dp_verify(const TileSet& tiles, const Pattern& p) { return run_dp(tiles, p, nullptr); }

DpResult dp_verify(const TileSet& tiles, const Pattern& p, const Seed& seed) {
  return run_dp(tiles, p, &seed);
}

SolveResult solve_nonuniform(const Pattern& p, const SolveOptions& options) {
  return solve_impl(p, options, false);
}

SolveResult solve_uniform(const Pattern& p, const SolveOptions& options) {
  return solve_impl(p, options, true);
}

namespace {

/// Z-array of the reversed word: z[i] is the longest common prefix of the
/// reversal and its suffix at i, i.e. how far the suffix of `word` ending i
/// cells before the end matches the suffix of `word`.
std::vector<std::uint32_t> reversed_z(std::span<const Color> word) {
  const std::size_t n = word.size();
  auto r = [&](std::size_t j) { return word[n - 1 - j]; };
  std::vector<std::uint32_t> z(n, 0);
  for (std::size_t i = 1, l = 0, rr = 0; i < n; ++i) {
    std::size_t zi = i < rr ? std::min<std::size_t>(rr - i, z[i - l]) : 0;
    while (i + zi < n && r(zi) == r(i + zi)) ++zi;
    z[i] = static_cast<std::uint32_t>(zi);
    if (i + zi > rr) l = i, rr = i + zi;
  }
  return z;
}

}  // namespace

int longest_repeated_suffix(std::span<const Color> word) {
  const auto z = reversed_z(word);
  return z.empty() ? 0 : static_cast<int>(*std::max_element(z.begin(), z.end()));
}

SolveResult solve_uniform_h1(const Pattern& p) {
  if (p.height() != 1) throw Error("solve_uniform_h1 needs a pattern of height 1");
  const auto start = std::chrono::steady_clock::now();
  const auto& word = p.cells();
  const auto n = static_cast<std::int64_t>(word.size());
  const auto z = reversed_z(word);
  const std::int64_t len =
      z.empty() ? 0 : static_cast<std::int64_t>(*std::max_element(z.begin(), z.end()));

  // Period i: the shift to the latest earlier occurrence of the repeated
  // suffix; cells before s are hard-coded, the rest cycle through i types.
  std::int64_t period = n, s = 0;
  if (len > 0) {
    for (std::int64_t i = 1; i < n; ++i)
      if (static_cast<std::int64_t>(z[static_cast<std::size_t>(i)]) == len) {
        period = i;
        break;
      }
    s = n - period - len;
  }

  SolveResult res;
  res.min_size = static_cast<int>(n - len);
  Rtas& rt = res.witness;
  rt.width = p.width();
  rt.height = 1;
  rt.seed = Seed::uniform(rt.width, 1, 0, 0);
  const std::int64_t types = s + period;
  rt.tiles.reserve(static_cast<std::size_t>(types));
  for (std::int64_t j = 0; j < types; ++j) {
    const Glue east = static_cast<Glue>(j + 1 < types ? j + 1 : s);
    rt.tiles.push_back(TileType{word[static_cast<std::size_t>(j)], 0, east, 0, static_cast<Glue>(j)});
  }
  res.stats.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

int brute_force_min(const Pattern& p, PatsVariant variant, std::size_t node_cap) {
  std::size_t nodes = 0;
  int best = p.width() * p.height() + 1;
  std::optional<Rtas> witness;
  if (variant == PatsVariant::NonUniform) {
    LabelingOracle(p, std::nullopt, node_cap, nodes, best, witness).run();
  } else {
    for (Glue b : {Glue{0}, Glue{1}}) LabelingOracle(p, b, node_cap, nodes, best, witness).run();
  }
  if (!witness || !uniquely_assembles(*witness, p))
    throw Error("brute force optimum does not assemble the pattern");
  return best;
}

int min_size(const Pattern& p, MinSizeMethod method) {
  switch (method) {
    case MinSizeMethod::Solver: return solve_nonuniform(p).min_size;
    case MinSizeMethod::BruteForce: return brute_force_min(p, PatsVariant::NonUniform);
    case MinSizeMethod::UniformSolver: return solve_uniform(p).min_size;
    case MinSizeMethod::UniformBruteForce: return brute_force_min(p, PatsVariant::Uniform);
    case MinSizeMethod::UniformH1: return solve_uniform_h1(p).min_size;
  }
  return 0;
}

bool is_confluent(const Rtas& rtas, std::size_t cap) {
  const auto terminal = brute_force_terminal_assemblies(rtas, cap);
  return terminal.size() == 1 && *terminal.begin() == simulate(rtas);
}

std::vector<char> batch_confluence_serial(std::span<const Rtas> systems, std::size_t cap) {
  std::vector<char> out(systems.size());
  for (std::size_t i = 0; i < systems.size(); ++i) out[i] = is_confluent(systems[i], cap);
  return out;
}

std::vector<char> batch_confluence_parallel(std::span<const Rtas> systems, std::size_t cap,
                                            int threads) {
  if (threads <= 0) threads = omp_get_max_threads();
  std::vector<char> out(systems.size());
  const auto n = static_cast<std::int64_t>(systems.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::int64_t i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] = is_confluent(systems[static_cast<std::size_t>(i)], cap);
  return out;
}

std::vector<int> batch_min_sizes_serial(std::span<const Pattern> patterns, MinSizeMethod method) {
  std::vector<int> out(patterns.size());
  for (std::size_t i = 0; i < patterns.size(); ++i) out[i] = min_size(patterns[i], method);
  return out;
}

std::vector<int> batch_min_sizes_parallel(std::span<const Pattern> patterns, MinSizeMethod method,
                                          int threads) {
  if (threads <= 0) threads = omp_get_max_threads();
  std::vector<int> out(patterns.size());
  const auto n = static_cast<std::int64_t>(patterns.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::int64_t i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] = min_size(patterns[static_cast<std::size_t>(i)], method);
  return out;
}

}  // namespace pats
