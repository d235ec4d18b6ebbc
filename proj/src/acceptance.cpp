#include "pats/acceptance.hpp"

#include <chrono>
#include <map>
#include <random>
#include <sstream>

#include "pats/fst.hpp"
#include "pats/reductions.hpp"
#include "pats/rtas.hpp"
#include "pats/solvers.hpp"

namespace pats {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// Patterns deduplicated up to color renaming; `slot[i]` indexes `unique`.
struct Deduped {
  std::vector<Pattern> unique;
  std::vector<std::size_t> slot;
};

Deduped dedupe_colors(const std::vector<Pattern>& patterns) {
  Deduped d;
  std::map<std::vector<Color>, std::size_t> seen;
  for (const auto& p : patterns) {
    auto c = p.canonical_colors();
    auto [it, inserted] = seen.emplace(c.cells(), d.unique.size());
    if (inserted) d.unique.push_back(std::move(c));
    d.slot.push_back(it->second);
  }
  return d;
}

CriterionResult confluence(Scale scale, std::uint64_t seed, int threads) {
  CriterionResult r{1, "confluence of random directed systems", false, "", 0.0};
  const auto t0 = Clock::now();
  const int count = scale == Scale::Small ? 1000 : 200;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> side(1, 4), tiles(1, 5), glues(1, 4), coin(0, 1);
  std::vector<Rtas> systems;
  for (int i = 0; i < count; ++i) {
    RandomRtasParams params;
    params.width = side(rng);
    params.height = side(rng);
    params.tiles = tiles(rng);
    params.glues = glues(rng);
    params.colors = 2;
    params.uniform_seed = coin(rng) == 1;
    systems.push_back(random_directed_rtas(rng, params));
  }
  const auto ok = batch_confluence_parallel(systems, 16, threads);
  std::size_t good = 0;
  for (char c : ok) good += c ? 1 : 0;
  r.seconds = since(t0);
  r.pass = good == systems.size() && r.seconds < 10.0;
  r.detail = "systems=" + std::to_string(systems.size()) + " confluent=" + std::to_string(good);
  return r;
}

struct Sweep {
  std::vector<Pattern> patterns;
  Deduped deduped;
  std::vector<int> solver, brute, uniform_brute;
  double seconds_solver = 0.0, seconds_brute = 0.0, seconds_uniform = 0.0;
};

Sweep sweep_patterns(Scale scale, int threads) {
  Sweep s;
  for (int w = 1; w <= (scale == Scale::Small ? 4 : 3); ++w) {
    auto all = enumerate_patterns(w, 2, 2);
    s.patterns.insert(s.patterns.end(), all.begin(), all.end());
  }
  s.deduped = dedupe_colors(s.patterns);
  auto t0 = Clock::now();
  s.solver = batch_min_sizes_parallel(s.deduped.unique, MinSizeMethod::Solver, threads);
  s.seconds_solver = since(t0);
  t0 = Clock::now();
  s.brute = batch_min_sizes_parallel(s.deduped.unique, MinSizeMethod::BruteForce, threads);
  s.seconds_brute = since(t0);
  t0 = Clock::now();
  s.uniform_brute =
      batch_min_sizes_parallel(s.deduped.unique, MinSizeMethod::UniformBruteForce, threads);
  s.seconds_uniform = since(t0);
  return s;
}

CriterionResult fixed_height_equivalence(const Sweep& s) {
  CriterionResult r{2, "solve_nonuniform equals brute_force_min", false, "", 0.0};
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < s.patterns.size(); ++i) {
    const auto u = s.deduped.slot[i];
    if (s.solver[u] != s.brute[u]) ++mismatches;
  }
  r.seconds = s.seconds_solver + s.seconds_brute;
  r.pass = mismatches == 0 && r.seconds < 300.0;
  std::ostringstream d;
  d << "patterns=" << s.patterns.size() << " distinct_up_to_colors=" << s.deduped.unique.size()
    << " mismatches=" << mismatches;
  r.detail = d.str();
  return r;
}

CriterionResult monotonicity(const Sweep& s) {
  CriterionResult r{7, "uniform minimum at least non-uniform minimum", false, "", 0.0};
  std::size_t violations = 0, strict = 0;
  for (std::size_t i = 0; i < s.patterns.size(); ++i) {
    const auto u = s.deduped.slot[i];
    if (s.uniform_brute[u] < s.brute[u]) ++violations;
    if (s.uniform_brute[u] > s.brute[u]) ++strict;
  }
  r.seconds = s.seconds_uniform;
  r.pass = violations == 0;
  r.detail = "patterns=" + std::to_string(s.patterns.size()) +
             " violations=" + std::to_string(violations) + " strictly_larger=" + std::to_string(strict);
  return r;
}

Pattern word_pattern(const std::string& w) { return Pattern::from_rows({w}); }

CriterionResult uniform_h1(Scale scale, int threads) {
  CriterionResult r{3, "solve_uniform_h1 equals brute_force_min(Uniform)", false, "", 0.0};
  const auto t0 = Clock::now();
  const int max_n = scale == Scale::Small ? 8 : 5;
  std::vector<Pattern> words;
  for (int n = 1; n <= max_n; ++n) {
    auto all = enumerate_patterns(n, 1, 3);
    words.insert(words.end(), all.begin(), all.end());
  }
  const auto d = dedupe_colors(words);
  const auto fast = batch_min_sizes_serial(d.unique, MinSizeMethod::UniformH1);
  const auto slow = batch_min_sizes_parallel(d.unique, MinSizeMethod::UniformBruteForce, threads);
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < words.size(); ++i)
    if (fast[d.slot[i]] != slow[d.slot[i]]) ++mismatches;

  const std::vector<std::pair<std::string, int>> anchors{
      {"aaaa", 1}, {"abc", 3}, {"abcabc", 3}, {"ababab", 2}};
  bool anchors_ok = true;
  for (const auto& [w, m] : anchors) {
    const auto res = solve_uniform_h1(word_pattern(w));
    anchors_ok = anchors_ok && res.min_size == m && uniquely_assembles(res.witness, word_pattern(w));
  }

  // Random words over 3 letters; the timing uses the solver alone.
  auto timed = [](std::size_t n) {
    std::mt19937_64 rng(n);
    std::uniform_int_distribution<int> letter(0, 2);
    std::vector<Color> cells(n);
    for (auto& c : cells) c = static_cast<Color>(letter(rng));
    Pattern p(static_cast<int>(n), 1, std::move(cells), {'a', 'b', 'c'});
    double best = 1e9;
    int m = 0;
    for (int rep = 0; rep < 3; ++rep) {
      const auto t = Clock::now();
      m = solve_uniform_h1(p).min_size;
      best = std::min(best, since(t));
    }
    return std::make_pair(best, m);
  };
  const std::size_t big = scale == Scale::Small ? 1'000'000 : 100'000;
  const auto [t_small, m_small] = timed(big / 10);
  const auto [t_big, m_big] = timed(big);
  const double ratio = t_big / std::max(t_small, 1e-4);

  r.seconds = since(t0);
  r.pass = mismatches == 0 && anchors_ok && ratio <= 15.0 && t_big < 2.0;
  std::ostringstream out;
  out << "words=" << words.size() << " mismatches=" << mismatches
      << " anchors=" << (anchors_ok ? "ok" : "bad") << " n=" << big << " time=" << t_big
      << "s ratio=" << ratio;
  r.detail = out.str();
  (void)m_small;
  (void)m_big;
  return r;
}

ThreePartitionInstance toy_instance() {
  ThreePartitionInstance inst;
  inst.a = {1, 1, 2, 1, 1, 2};
  inst.n = 2;
  inst.p = 4;
  inst.relaxed = true;
  return inst;
}

Partition toy_partition() { return {{1, 3, 5}, {0, 2, 4}}; }

CriterionResult completeness() {
  CriterionResult r{4, "toy instance reduces end to end", false, "", 0.0};
  const auto t0 = Clock::now();
  std::ostringstream d;
  bool ok = true;
  try {
    const auto inst = toy_instance();
    const auto plain = reduce_3partition_to_fst(inst, toy_partition());
    const auto plain_fst = build_intended_fst(plain.skeleton, toy_partition());
    const bool plain_ok = plain.instance.k == 27 &&
                          transduce(plain_fst, plain.instance.input).output == plain.instance.output &&
                          verify_promises(plain_fst, plain.instance).ok();
    d << "K=" << plain.instance.k << " plain_promises=" << (plain_ok ? "ok" : "bad");
    ok = ok && plain_ok;

    const auto mod = reduce_3partition_to_modified_fst(inst, toy_partition());
    const auto mod_fst = build_intended_fst(mod.skeleton, toy_partition());
    const int k = mod.instance.k;
    const auto s_prime = static_cast<int>(mod.instance.output.size());
    const bool mod_ok = transduce(mod_fst, mod.instance.input).output == mod.instance.output &&
                        verify_promises(mod_fst, mod.instance).ok();
    const auto pats = reduce_modified_fst_to_3pats(mod.instance);
    const bool shape_ok = pats.pattern.width() == 1 + s_prime + k * k &&
                          pats.pattern.height() == 2 && pats.pattern.color_set().size() == 3;
    const auto witness =
        witness_tileset_from_fst(mod_fst, mod.instance, pats, PatsConstruction::Uniform3);
    const bool witness_ok = is_directed(witness.rtas.tiles) &&
                            static_cast<int>(witness.rtas.tiles.size()) == s_prime + 2 * k + 2 &&
                            uniquely_assembles(witness.rtas, pats.pattern);
    d << " modified_K=" << k << " modified_promises=" << (mod_ok ? "ok" : "bad")
      << " width=" << pats.pattern.width() << " tiles=" << witness.rtas.tiles.size()
      << " witness=" << (witness_ok ? "ok" : "bad");
    ok = ok && mod_ok && shape_ok && witness_ok;
  } catch (const std::exception& e) {
    ok = false;
    d << " error=" << e.what();
  }
  r.seconds = since(t0);
  r.pass = ok && r.seconds < 60.0;
  r.detail = d.str();
  return r;
}

CriterionResult soundness() {
  CriterionResult r{5, "infeasible micro instances are rejected", false, "", 0.0};
  const std::vector<std::tuple<std::vector<int>, int, int>> cases{
      {{3, 3, 2}, 2, 4},          {{4, 4, 4}, 2, 6},       {{5, 5, 2}, 2, 6},
      {{4, 4, 2}, 2, 5},          {{3, 3, 3, 1}, 2, 5},    {{2, 2, 2}, 2, 3},
      {{7, 1, 1, 1, 1, 1}, 2, 6},
  };
  const auto t0 = Clock::now();
  std::size_t rejected = 0;
  double worst = 0.0;
  for (const auto& [a, n, p] : cases) {
    ThreePartitionInstance inst{a, n, p, true};
    const auto t = Clock::now();
    const auto red = reduce_3partition_to_fst(inst);
    const auto res = solve_encoding_by_search(red.instance, red.skeleton);
    const double secs = since(t);
    worst = std::max(worst, secs);
    if (!res.feasible() && secs < 10.0) ++rejected;
  }
  r.seconds = since(t0);
  r.pass = rejected == cases.size() && cases.size() >= 5;
  std::ostringstream d;
  d << "instances=" << cases.size() << " infeasible=" << rejected << " worst=" << worst << "s";
  r.detail = d.str();
  return r;
}

CriterionResult budgets() {
  CriterionResult r{6, "budgets match the construction formulas", false, "", 0.0};
  const auto t0 = Clock::now();
  bool ok = true;
  std::ostringstream d;
  const std::vector<std::pair<ThreePartitionInstance, Partition>> cases{
      {toy_instance(), toy_partition()},
      {ThreePartitionInstance{{1, 1, 1}, 1, 3, true}, Partition{{0, 1, 2}}},
      {ThreePartitionInstance{{2, 1, 1, 1, 2, 1}, 2, 4, true}, Partition{{0, 1, 2}, {3, 4, 5}}},
  };
  for (const auto& [inst, part] : cases) {
    const auto plain = reduce_3partition_to_fst(inst, part);
    const int k = plain.instance.k;
    const auto s = static_cast<int>(plain.instance.input.size());
    const auto b4 = reduce_fst_to_pats_nonuniform(plain.instance).budget;
    const auto b5 = reduce_fst_to_pats_uniform(plain.instance).budget;
    const auto mod = reduce_3partition_to_modified_fst(inst, part);
    const int km = mod.instance.k;
    const auto sp = static_cast<int>(mod.instance.output.size());
    const auto b6 = reduce_modified_fst_to_3pats(mod.instance).budget;
    const bool this_ok = b4 == 2 * k + 2 && b5 == s + 2 * k + 4 && b6 == sp + 2 * km + 2;
    ok = ok && this_ok;
    d << (d.tellp() > 0 ? " " : "") << "K=" << k << ":" << (this_ok ? "ok" : "bad");
  }
  r.seconds = since(t0);
  r.pass = ok;
  r.detail = d.str();
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(Scale scale, std::uint64_t rng_seed, int threads) {
  std::vector<CriterionResult> out;
  out.push_back(confluence(scale, rng_seed, threads));
  const auto sweep = sweep_patterns(scale, threads);
  out.push_back(fixed_height_equivalence(sweep));
  out.push_back(uniform_h1(scale, threads));
  out.push_back(completeness());
  out.push_back(soundness());
  out.push_back(budgets());
  out.push_back(monotonicity(sweep));
  return out;
}

}  // namespace pats
