#include <CLI11.hpp>

#include <iomanip>
#include <iostream>

#include "pats/acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Acceptance suite"};
  std::string scale = "small";
  std::uint64_t seed = 1;
  int threads = 0;
  app.add_option("--scale", scale)->check(CLI::IsMember({"micro", "small"}));
  app.add_option("--seed-rng", seed);
  app.add_option("--threads", threads);
  CLI11_PARSE(app, argc, argv);

  const auto results =
      pats::run_acceptance(scale == "micro" ? pats::Scale::Micro : pats::Scale::Small, seed, threads);
  int failed = 0;
  for (const auto& r : results) {
    failed += r.pass ? 0 : 1;
    std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name << " ("
              << r.detail << ", " << std::fixed << std::setprecision(3) << r.seconds << "s)\n";
  }
  return failed == 0 ? 0 : 1;
}
