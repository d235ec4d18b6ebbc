#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pats/error.hpp"
#include "pats/pattern.hpp"
#include "pats/rtas.hpp"

namespace pats {

class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

struct DpResult {
  bool ok = false;
  /// Realizing seed (the given one in fixed mode).
  std::optional<Seed> seed;
  /// Feasible column sequences summed over all columns.
  std::size_t states = 0;

  explicit operator bool() const { return ok; }
};

/// Column-by-column check that a directed tile set deterministically
/// assembles `p` for some non-uniform seed. Each column keeps the set of
/// feasible bottom-to-top tile sequences; column i+1 extends every feasible
/// sequence of column i with every candidate seed glue and simulates
/// upwards. Throws NotDirectedError.
DpResult dp_verify(const TileSet& tiles, const Pattern& p);

/// Same check for one given seed.
DpResult dp_verify(const TileSet& tiles, const Pattern& p, const Seed& seed);

struct SolveStats {
  std::size_t nodes = 0;
  double seconds = 0.0;
};

struct SolveResult {
  int min_size = 0;
  Rtas witness;
  SolveStats stats;
};

struct SolveOptions {
  std::optional<int> budget_cap;
  /// >1 splits the search after the first column and runs the subtrees with
  /// OpenMP; the answer and witness equal the serial ones.
  int threads = 1;
  std::size_t node_cap = 2'000'000'000;
};

/// Minimum directed tile set over non-uniform seeds, by iterative deepening
/// on the size. Tile types and glues are created in canonical first-use order
/// as the column DP meets new (west, south) pairs, so a branch dies exactly
/// when its partial DP fails. Throws BudgetExhausted past `budget_cap`.
SolveResult solve_nonuniform(const Pattern& p, const SolveOptions& options = {});

/// Same search restricted to uniform seeds. Exponential in general.
SolveResult solve_uniform(const Pattern& p, const SolveOptions& options = {});

/// Length of the longest suffix of `word` that also occurs starting at an
/// earlier position (occurrences may overlap). Linear time.
int longest_repeated_suffix(std::span<const Color> word);

/// Exact uniform height-1 minimum n - |y| with the periodic witness.
SolveResult solve_uniform_h1(const Pattern& p);

/// Independent oracle: branch and bound over row-major glue labelings of the
/// whole rectangle (glues numbered by first use), counting distinct tile
/// types under the directedness constraint; the optimum is re-checked with
/// uniquely_assembles. Throws CapExceeded after `node_cap` nodes.
int brute_force_min(const Pattern& p, PatsVariant variant, std::size_t node_cap = 50'000'000);

// ---- batch kernels -------------------------------------------------------------

enum class MinSizeMethod { Solver, BruteForce, UniformSolver, UniformBruteForce, UniformH1 };

int min_size(const Pattern& p, MinSizeMethod method);

/// Reference loop.
std::vector<int> batch_min_sizes_serial(std::span<const Pattern> patterns, MinSizeMethod method);

/// OpenMP loop over patterns; identical output to the serial version.
std::vector<int> batch_min_sizes_parallel(std::span<const Pattern> patterns, MinSizeMethod method,
                                          int threads = 0);

/// Simulation agrees with exhaustive nondeterministic growth: one terminal
/// assembly, equal to simulate(). Throws CapExceeded past `cap` terminals.
bool is_confluent(const Rtas& rtas, std::size_t cap = 16);

std::vector<char> batch_confluence_serial(std::span<const Rtas> systems, std::size_t cap = 16);
std::vector<char> batch_confluence_parallel(std::span<const Rtas> systems, std::size_t cap = 16,
                                            int threads = 0);

}  // namespace pats
