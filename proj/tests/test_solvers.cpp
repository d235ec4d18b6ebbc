#include <doctest.h>

#include <random>
#include <set>

#include "pats/error.hpp"
#include "pats/rtas.hpp"
#include "pats/solvers.hpp"

using namespace pats;

namespace {

Pattern random_pattern(std::mt19937_64& rng, int w, int h, int c) {
  std::vector<Color> cells(static_cast<std::size_t>(w * h));
  for (auto& x : cells) x = static_cast<Color>(rng() % static_cast<unsigned>(c));
  std::vector<char> glyphs;
  for (int i = 0; i < c; ++i) glyphs.push_back(static_cast<char>('a' + i));
  return Pattern(w, h, std::move(cells), std::move(glyphs));
}

void check_witness(const SolveResult& r, const Pattern& p) {
  CHECK(static_cast<int>(r.witness.tiles.size()) == r.min_size);
  CHECK(is_directed(r.witness.tiles));
  CHECK_NOTHROW(r.witness.validate());
  CHECK(uniquely_assembles(r.witness, p));
  CHECK(dp_verify(r.witness.tiles, p, r.witness.seed).ok);
}

/// Canonical tile sets of `k` types: colors free, glues numbered by first use
/// over the slot sequence (N, E, S, W per tile).
template <class F>
void for_each_canonical_set(int k, int colors, F&& visit) {
  const int slots = 4 * k;
  std::vector<Glue> g(static_cast<std::size_t>(slots), 0);
  std::vector<Color> col(static_cast<std::size_t>(k), 0);
  auto glues = [&](auto&& self, int i, Glue used) -> void {
    if (i == slots) {
      TileSet ts;
      for (int t = 0; t < k; ++t) {
        const auto b = static_cast<std::size_t>(4 * t);
        ts.push_back(TileType{col[static_cast<std::size_t>(t)], g[b], g[b + 1], g[b + 2], g[b + 3]});
      }
      visit(ts);
      return;
    }
    for (Glue v = 0; v <= used; ++v) {
      g[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, v == used ? used + 1 : used);
    }
  };
  auto colors_rec = [&](auto&& self, int t) -> void {
    if (t == k) {
      glues(glues, 0, 0);
      return;
    }
    for (int c = 0; c < colors; ++c) {
      col[static_cast<std::size_t>(t)] = static_cast<Color>(c);
      self(self, t + 1);
    }
  };
  colors_rec(colors_rec, 0);
}

}  // namespace

TEST_CASE("dp_verify on a monochrome system") {
  const auto p = Pattern::from_rows({"aa", "aa"});
  const TileSet tiles{TileType{0, 0, 0, 0, 0}};
  CHECK(dp_verify(tiles, p).ok);
  CHECK(dp_verify(tiles, p, Seed::uniform(2, 2)).ok);
  CHECK_FALSE(dp_verify(tiles, Pattern::from_rows({"ab", "aa"})).ok);
}

TEST_CASE("dp_verify on a 2x2 checkerboard with two types") {
  const auto p = Pattern::from_rows({"ba", "ab"});
  // Color 0 is the top-left glyph, so the bottom-left cell has color 1.
  const TileSet tiles{TileType{1, 1, 1, 0, 0}, TileType{0, 0, 0, 1, 1}};
  const auto free = dp_verify(tiles, p);
  REQUIRE(free.ok);
  REQUIRE(free.seed);
  Rtas r{tiles, *free.seed, 2, 2};
  CHECK(uniquely_assembles(r, p));
  CHECK(dp_verify(tiles, p, Seed::non_uniform({0, 1}, {0, 1})).ok);
  CHECK_FALSE(dp_verify(tiles, p, Seed::uniform(2, 2)).ok);
  CHECK_THROWS_AS(dp_verify({TileType{0, 0, 0, 0, 0}, TileType{1, 0, 0, 0, 0}}, p),
                  NotDirectedError);
}

TEST_CASE("fixed-seed dp_verify agrees with simulation") {
  std::mt19937_64 rng(77);
  int positives = 0;
  for (int i = 0; i < 1000; ++i) {
    RandomRtasParams params;
    params.width = 1 + static_cast<int>(rng() % 4);
    params.height = 1 + static_cast<int>(rng() % 4);
    params.tiles = 1 + static_cast<int>(rng() % 6);
    params.glues = 1 + static_cast<int>(rng() % 3);
    params.uniform_seed = i % 3 == 0;
    const auto r = random_directed_rtas(rng, params);
    const auto a = simulate(r);
    Pattern p = random_pattern(rng, r.width, r.height, 2);
    if (a.is_full() && i % 2 == 0) {
      std::vector<Color> cells;
      for (int y = 1; y <= r.height; ++y)
        for (int x = 1; x <= r.width; ++x) cells.push_back(r.tiles[static_cast<std::size_t>(a.at(x, y))].color);
      p = Pattern(r.width, r.height, cells, {'a', 'b'});
    }
    const bool expected = uniquely_assembles(r, p);
    positives += expected;
    CHECK(dp_verify(r.tiles, p, r.seed).ok == expected);
  }
  CHECK(positives > 50);
}

TEST_CASE("free-seed dp_verify agrees with trying every seed") {
  std::mt19937_64 rng(78);
  for (int i = 0; i < 300; ++i) {
    RandomRtasParams params;
    params.width = 1 + static_cast<int>(rng() % 3);
    params.height = 1 + static_cast<int>(rng() % 3);
    params.tiles = 2 + static_cast<int>(rng() % 4);
    params.glues = 3;
    const auto r = random_directed_rtas(rng, params);
    const auto p = random_pattern(rng, r.width, r.height, 2);
    // Glues 0..2 plus one that no tile reads.
    const int arms = r.width + r.height;
    bool any = false;
    std::vector<Glue> digits(static_cast<std::size_t>(arms), 0);
    while (!any) {
      std::vector<Glue> bottom(digits.begin(), digits.begin() + r.width);
      std::vector<Glue> left(digits.begin() + r.width, digits.end());
      any = uniquely_assembles(Rtas{r.tiles, Seed::non_uniform(bottom, left), r.width, r.height}, p);
      int d = 0;
      while (d < arms && ++digits[static_cast<std::size_t>(d)] == 4) digits[static_cast<std::size_t>(d++)] = 0;
      if (d == arms) break;
    }
    const auto res = dp_verify(r.tiles, p);
    CHECK(res.ok == any);
    if (res.ok) CHECK(uniquely_assembles(Rtas{r.tiles, *res.seed, r.width, r.height}, p));
  }
}

TEST_CASE("solve_nonuniform small examples") {
  const auto abc = Pattern::from_rows({"abc"});
  const auto r = solve_nonuniform(abc);
  CHECK(r.min_size == 3);
  check_witness(r, abc);
  const auto mono = Pattern::from_rows({"aa", "aa"});
  const auto m = solve_nonuniform(mono);
  CHECK(m.min_size == 1);
  check_witness(m, mono);
  CHECK(brute_force_min(mono, PatsVariant::NonUniform) == 1);
  CHECK(brute_force_min(Pattern::from_rows({"aaa", "aaa", "aaa"}), PatsVariant::NonUniform) == 1);
}

TEST_CASE("budget cap") {
  const auto p = Pattern::from_rows({"abc"});
  CHECK_THROWS_AS(solve_nonuniform(p, SolveOptions{2}), BudgetExhausted);
  CHECK(solve_nonuniform(p, SolveOptions{3}).min_size == 3);
  CHECK_THROWS_AS(solve_nonuniform(Pattern::from_rows({"abab", "baab"}), SolveOptions{std::nullopt, 1, 5}),
                  CapExceeded);
  CHECK_THROWS_AS(brute_force_min(Pattern::from_rows({"abab", "baab"}), PatsVariant::NonUniform, 5),
                  CapExceeded);
}

TEST_CASE("solver matches brute force on every 2x3 and 3x2 two-color pattern") {
  for (auto [w, h] : {std::pair{2, 3}, std::pair{3, 2}}) {
    for (const auto& p : enumerate_patterns(w, h, 2)) {
      const auto r = solve_nonuniform(p);
      CHECK(r.min_size == brute_force_min(p, PatsVariant::NonUniform));
      check_witness(r, p);
      const auto u = solve_uniform(p);
      CHECK(u.min_size == brute_force_min(p, PatsVariant::Uniform));
      CHECK(u.min_size >= r.min_size);
      CHECK(u.witness.seed.kind == Seed::Kind::Uniform);
      check_witness(u, p);
    }
  }
}

TEST_CASE("solver matches brute force on random patterns up to width 5") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 200; ++i) {
    const int w = 1 + static_cast<int>(rng() % 5);
    const int h = 1 + static_cast<int>(rng() % 2);
    const int c = i % 4 == 0 ? 3 : 2;
    const auto p = random_pattern(rng, w, h, c);
    const auto r = solve_nonuniform(p);
    CHECK(r.min_size == brute_force_min(p, PatsVariant::NonUniform));
    check_witness(r, p);
  }
}

TEST_CASE("no canonical set below the minimum passes dp_verify") {
  std::vector<Pattern> patterns;
  for (const auto& p : enumerate_patterns(2, 2, 2)) patterns.push_back(p);
  for (const auto& p : enumerate_patterns(3, 1, 2)) patterns.push_back(p);
  patterns.push_back(Pattern::from_rows({"abab", "baba"}));
  int checked = 0;
  for (const auto& p : patterns) {
    const int m = solve_nonuniform(p).min_size;
    if (m > 3) continue;
    ++checked;
    bool below = false;
    for_each_canonical_set(m - 1, p.num_colors(), [&](const TileSet& ts) {
      if (!below && is_directed(ts) && dp_verify(ts, p).ok) below = true;
    });
    CHECK_FALSE(below);
  }
  CHECK(checked > 10);
}

TEST_CASE("parallel search returns the serial answer") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    const auto p = random_pattern(rng, 3 + static_cast<int>(rng() % 3), 2, 2);
    const auto serial = solve_nonuniform(p);
    for (int threads : {2, 3}) {
      SolveOptions opt;
      opt.threads = threads;
      const auto par = solve_nonuniform(p, opt);
      CHECK(par.min_size == serial.min_size);
      CHECK(par.witness.tiles == serial.witness.tiles);
      CHECK(par.witness.seed == serial.witness.seed);
      const auto upar = solve_uniform(p, opt);
      CHECK(upar.witness.tiles == solve_uniform(p).witness.tiles);
    }
  }
}

TEST_CASE("batch kernels agree") {
  const auto patterns = enumerate_patterns(3, 2, 2);
  for (auto m : {MinSizeMethod::Solver, MinSizeMethod::BruteForce, MinSizeMethod::UniformSolver}) {
    const auto serial = batch_min_sizes_serial(patterns, m);
    CHECK(serial == batch_min_sizes_parallel(patterns, m, 2));
  }
}

TEST_CASE("longest repeated suffix") {
  auto lrs = [](const std::string& w) {
    std::vector<Color> v(w.begin(), w.end());
    return longest_repeated_suffix(v);
  };
  CHECK(lrs("") == 0);
  CHECK(lrs("a") == 0);
  CHECK(lrs("aaaa") == 3);
  CHECK(lrs("abc") == 0);
  CHECK(lrs("abcabc") == 3);
  CHECK(lrs("ababab") == 4);
  CHECK(lrs("abcab") == 2);
}

TEST_CASE("uniform height-1 anchors") {
  for (auto [w, m] : std::vector<std::pair<std::string, int>>{
           {"aaaa", 1}, {"abc", 3}, {"abcabc", 3}, {"ababab", 2}, {"a", 1}, {"abaab", 3}}) {
    const auto p = Pattern::from_rows({w});
    const auto r = solve_uniform_h1(p);
    CHECK(r.min_size == m);
    CHECK(r.witness.seed.kind == Seed::Kind::Uniform);
    check_witness(r, p);
  }
  CHECK_THROWS_AS(solve_uniform_h1(Pattern::from_rows({"a", "a"})), Error);
}

TEST_CASE("uniform height-1 formula matches both exact searches") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& p : enumerate_patterns(n, 1, 3)) {
      if (p.canonical_colors() != p) continue;
      const auto r = solve_uniform_h1(p);
      CHECK(r.min_size == brute_force_min(p, PatsVariant::Uniform));
      CHECK(r.min_size == solve_uniform(p).min_size);
      check_witness(r, p);
    }
  }
}

TEST_CASE("uniform height-1 witnesses on long words") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 20; ++i) {
    // Periodic tails make the cycle part of the witness non-trivial.
    const auto head = random_pattern(rng, 1 + static_cast<int>(rng() % 20), 1, 3).cells();
    const auto period = random_pattern(rng, 1 + static_cast<int>(rng() % 6), 1, 3).cells();
    std::vector<Color> word = head;
    while (word.size() < 500) word.insert(word.end(), period.begin(), period.end());
    const Pattern p(static_cast<int>(word.size()), 1, word, {'a', 'b', 'c'});
    const auto r = solve_uniform_h1(p);
    CHECK(r.min_size <= static_cast<int>(head.size() + period.size()));
    check_witness(r, p);
  }
}
