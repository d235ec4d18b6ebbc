#include <CLI11.hpp>
#include <omp.h>

#include <chrono>
#include <iostream>
#include <random>

#include "pats/solvers.hpp"

using namespace pats;

namespace {

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs OpenMP kernels"};
  int threads = omp_get_max_threads();
  int width = 4;
  app.add_option("--threads", threads);
  app.add_option("--width", width, "Pattern width for the min-size sweep (height 2)");
  CLI11_PARSE(app, argc, argv);

  const auto patterns = enumerate_patterns(width, 2, 2);
  std::vector<int> a, b;
  const double s1 = seconds([&] { a = batch_min_sizes_serial(patterns, MinSizeMethod::Solver); });
  const double p1 =
      seconds([&] { b = batch_min_sizes_parallel(patterns, MinSizeMethod::Solver, threads); });
  std::cout << "kernel=min_sizes patterns=" << patterns.size() << " serial=" << s1
            << "s parallel=" << p1 << "s threads=" << threads << " equal=" << (a == b) << '\n';

  std::mt19937_64 rng(1);
  std::vector<Rtas> systems;
  for (int i = 0; i < 5000; ++i) systems.push_back(random_directed_rtas(rng, {4, 4, 5, 4, 2, false}));
  std::vector<char> c, d;
  const double s2 = seconds([&] { c = batch_confluence_serial(systems); });
  const double p2 = seconds([&] { d = batch_confluence_parallel(systems, 16, threads); });
  std::cout << "kernel=confluence systems=" << systems.size() << " serial=" << s2
            << "s parallel=" << p2 << "s threads=" << threads << " equal=" << (c == d) << '\n';

  SolveOptions opt;
  opt.threads = threads;
  const auto hard = Pattern::from_rows({"aababbba", "abbbabaa", "baabaabb"});
  SolveResult r1, r2;
  const double s3 = seconds([&] { r1 = solve_nonuniform(hard); });
  const double p3 = seconds([&] { r2 = solve_nonuniform(hard, opt); });
  std::cout << "kernel=branch_search min_size=" << r1.min_size << " serial=" << s3
            << "s parallel=" << p3 << "s equal=" << (r1.witness.tiles == r2.witness.tiles) << '\n';
  return 0;
}
