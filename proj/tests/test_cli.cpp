#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "pats/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run pats_run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = pats::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("pats_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

bool has_line(const std::string& out, const std::string& line) {
  std::istringstream s(out);
  for (std::string l; std::getline(s, l);)
    if (l == line) return true;
  return false;
}

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(pats_run({}).code == 2);
  CHECK(pats_run({"frobnicate"}).code == 2);
  CHECK(pats_run({"verify", "--tiles", "x"}).code == 2);
  CHECK(pats_run({"solve", "--pattern", "-", "--bogus"}, "ab").code == 2);
  CHECK(pats_run({"solve", "--pattern", "/nonexistent/file"}).code == 2);
  CHECK(pats_run({"solve", "--pattern", "-"}, "ab\nabc").code == 2);
  CHECK(pats_run({"--help"}).code == 0);
}

TEST_CASE("solve then verify closes the loop") {
  const auto dir = scratch("solve");
  write(dir / "p.txt", "abba\nbaab\n");
  const auto tiles = (dir / "w.tiles").string();
  const auto solved =
      pats_run({"solve", "--pattern", (dir / "p.txt").string(), "--emit-tiles", tiles});
  CHECK(solved.code == 0);
  CHECK(solved.out.rfind("min_size=", 0) == 0);
  const auto ok = pats_run({"verify", "--tiles", tiles, "--pattern", (dir / "p.txt").string()});
  CHECK(ok.code == 0);
  CHECK(has_line(ok.out, "uniquely_assembles=1"));

  // Recolor one tile: the pattern can no longer come out.
  auto text = slurp(tiles);
  const auto pos = text.find("tile a");
  REQUIRE(pos != std::string::npos);
  text[pos + 5] = 'b';
  write(tiles, text);
  const auto bad = pats_run({"verify", "--tiles", tiles, "--pattern", (dir / "p.txt").string()});
  CHECK(bad.code == 1);
  CHECK(has_line(bad.out, "uniquely_assembles=0"));

  const auto simulated = pats_run({"simulate", "--tiles", tiles, "--pattern", (dir / "p.txt").string()});
  CHECK(simulated.code == 0);
  CHECK(has_line(simulated.out, "matches_pattern=0"));
}

TEST_CASE("solve honors the cap and uniform seeds") {
  CHECK(pats_run({"solve", "--pattern", "-", "--cap", "2"}, "abc").code == 1);
  const auto u = pats_run({"solve", "--pattern", "-", "--uniform", "--threads", "2"}, "ab\nba");
  CHECK(u.code == 0);
  CHECK(has_line(u.out, "variant=uniform"));
}

TEST_CASE("simulate with brute force lists terminal assemblies") {
  const auto dir = scratch("sim");
  write(dir / "p.txt", "aa\n");
  write(dir / "t.tiles", "tile a N=0 E=0 S=0 W=0\ntile b N=0 E=0 S=0 W=0\n");
  const auto r = pats_run({"simulate", "--tiles", (dir / "t.tiles").string(), "--pattern",
                           (dir / "p.txt").string(), "--brute-force"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "terminal_assemblies=4"));
  const auto directed = pats_run({"simulate", "--tiles", (dir / "t.tiles").string(), "--pattern",
                                  (dir / "p.txt").string()});
  CHECK(directed.code == 1);
  CHECK(pats_run({"verify", "--tiles", (dir / "t.tiles").string(), "--pattern",
                  (dir / "p.txt").string()})
            .code == 1);
}

TEST_CASE("minsize-uniform-h1") {
  const auto r = pats_run({"minsize-uniform-h1", "--pattern", "-"}, "ababab\n");
  CHECK(r.code == 0);
  CHECK(r.out == "min_size=2\n");
}

TEST_CASE("reduction verbs chain through files") {
  const auto dir = scratch("reduce");
  write(dir / "toy.3p", "n=2 p=4 a=1,1,2,1,1,2 relaxed=1 parts=2,4,6;1,3,5\n");
  const auto fst = pats_run({"reduce", "3part-to-fst", "--modified", "--in", (dir / "toy.3p").string(),
                             "--out", (dir / "inst.fst").string(), "--fst-out",
                             (dir / "t.fst").string()});
  CHECK(fst.code == 0);
  CHECK(has_line(fst.out, "K=28"));
  CHECK(has_line(fst.out, "feasible=1"));
  const auto pats = pats_run({"reduce", "fst-to-pats", "--variant", "uniform3", "--in",
                              (dir / "inst.fst").string(), "--out", (dir / "out").string(),
                              "--witness", (dir / "t.fst").string()});
  CHECK(pats.code == 0);
  CHECK(has_line(pats.out, "colors=3"));
  CHECK(has_line(pats.out, "witness_assembles=1"));
  const auto verified = pats_run({"verify", "--tiles", (dir / "out" / "witness.tiles").string(),
                                  "--pattern", (dir / "out" / "pattern.txt").string()});
  CHECK(verified.code == 0);
  CHECK(slurp(dir / "out" / "budget.txt").rfind("budget=", 0) == 0);
  CHECK(pats_run({"reduce", "fst-to-pats", "--variant", "sideways", "--in",
                  (dir / "inst.fst").string(), "--out", (dir / "x").string()})
            .code == 2);
}

TEST_CASE("gen-witness for every construction, and stdout is deterministic") {
  const auto dir = scratch("gen");
  write(dir / "toy.3p", "n=2 p=4 a=1,1,2,1,1,2 relaxed=1\n");
  for (std::string variant : {"nonuniform", "uniform", "uniform3"}) {
    const auto out = (dir / variant).string();
    const auto a = pats_run({"gen-witness", "--in", (dir / "toy.3p").string(), "--out", out,
                             "--variant", variant});
    CHECK(a.code == 0);
    const auto b = pats_run({"gen-witness", "--in", (dir / "toy.3p").string(), "--out", out,
                             "--variant", variant});
    CHECK(a.out == b.out);
    const auto v = pats_run({"verify", "--tiles", out + "/witness.tiles", "--pattern",
                             out + "/pattern.txt"});
    CHECK(v.code == 0);
  }
  write(dir / "bad.3p", "n=2 p=4 a=3,3,2 relaxed=1\n");
  CHECK(pats_run({"gen-witness", "--in", (dir / "bad.3p").string(), "--out",
                  (dir / "bad").string()})
            .code == 1);
}

TEST_CASE("selftest micro") {
  const auto r = pats_run({"selftest", "--scale", "micro", "--seed-rng", "3"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "selftest=PASS"));
}
