#include "pats/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pats/acceptance.hpp"
#include "pats/error.hpp"
#include "pats/fst.hpp"
#include "pats/reductions.hpp"
#include "pats/rtas.hpp"
#include "pats/solvers.hpp"

namespace pats::cli {

namespace {

class IoError : public Error {
 public:
  using Error::Error;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string read_text(const std::string& path, Io& io) {
  std::ostringstream buf;
  if (path == "-") {
    buf << io.in.rdbuf();
    return buf.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot read " + path);
  buf << f.rdbuf();
  return buf.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path.string());
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

void print_rows(std::ostream& out, const std::string& key, const std::string& grid) {
  std::istringstream rows(grid);
  for (std::string line; std::getline(rows, line);) out << key << '=' << line << '\n';
}

const char* variant_name(EncodingVariant v) {
  switch (v) {
    case EncodingVariant::Plain: return "plain";
    case EncodingVariant::Promise: return "promise";
    default: return "modified";
  }
}

// ---- verbs --------------------------------------------------------------------

struct SimulateArgs {
  std::string tiles, pattern, order = "column";
  bool brute = false;
  std::size_t cap = 1000;
};

int do_simulate(const SimulateArgs& a, Io& io) {
  const auto p = parse_pattern(read_text(a.pattern, io));
  const auto file = parse_tileset(read_text(a.tiles, io), p);
  const auto& rtas = file.rtas;
  const bool directed = is_directed(rtas.tiles);
  io.out << "tiles=" << rtas.tiles.size() << "\ndirected=" << directed << '\n';
  if (a.brute) {
    const auto terminal = brute_force_terminal_assemblies(rtas, a.cap);
    io.out << "terminal_assemblies=" << terminal.size() << '\n';
    std::size_t i = 0;
    for (const auto& t : terminal) {
      io.out << "assembly=" << i++ << " full=" << t.is_full()
             << " matches_pattern=" << assembly_has_pattern(rtas, t, p) << '\n';
      print_rows(io.out, "row", render_assembly(rtas, t, p));
    }
    return kOk;
  }
  if (!directed) {
    io.err << "error: tile set is not directed; use --brute-force\n";
    return kFalse;
  }
  const auto order = a.order == "row" ? FillOrder::RowMajor : FillOrder::ColumnMajor;
  const auto asm_ = simulate(rtas, order);
  io.out << "placed=" << asm_.size() << "\nfull=" << asm_.is_full()
         << "\nmatches_pattern=" << assembly_has_pattern(rtas, asm_, p) << '\n';
  print_rows(io.out, "row", render_assembly(rtas, asm_, p));
  return kOk;
}

int do_verify(const std::string& tiles, const std::string& pattern, std::size_t cap, Io& io) {
  const auto p = parse_pattern(read_text(pattern, io));
  const auto file = parse_tileset(read_text(tiles, io), p);
  const auto& rtas = file.rtas;
  const bool directed = is_directed(rtas.tiles);
  const bool unique = uniquely_assembles(rtas, p, cap);
  io.out << "tiles=" << rtas.tiles.size() << "\ndirected=" << directed << '\n';
  if (directed) io.out << "dp_verify=" << dp_verify(rtas.tiles, p, rtas.seed).ok << '\n';
  io.out << "uniquely_assembles=" << unique << '\n';
  return unique ? kOk : kFalse;
}

struct SolveArgs {
  std::string pattern, emit;
  bool uniform = false;
  std::optional<int> cap;
  int threads = 1;
};

int do_solve(const SolveArgs& a, Io& io) {
  const auto p = parse_pattern(read_text(a.pattern, io));
  SolveOptions opt;
  opt.budget_cap = a.cap;
  opt.threads = a.threads;
  SolveResult res;
  try {
    res = a.uniform ? solve_uniform(p, opt) : solve_nonuniform(p, opt);
  } catch (const BudgetExhausted&) {
    io.out << "min_size=none\ncap=" << *a.cap << '\n';
    return kFalse;
  }
  io.out << "min_size=" << res.min_size << "\nvariant=" << (a.uniform ? "uniform" : "nonuniform")
         << '\n';
  if (!a.emit.empty()) write_text(a.emit, render_tileset(res.witness, p.glyphs()));
  return kOk;
}

int do_uniform_h1(const std::string& pattern, const std::string& emit, Io& io) {
  const auto p = parse_pattern(read_text(pattern, io));
  const auto res = solve_uniform_h1(p);
  io.out << "min_size=" << res.min_size << '\n';
  if (!emit.empty()) write_text(emit, render_tileset(res.witness, p.glyphs()));
  return kOk;
}

FstReduction reduce_file(const ThreePartitionFile& f, bool modified) {
  return modified ? reduce_3partition_to_modified_fst(f.instance, f.parts)
                  : reduce_3partition_to_fst(f.instance, f.parts);
}

void print_reduction(const FstReduction& r, Io& io) {
  io.out << "K=" << r.instance.k << "\nS_length=" << r.instance.input.size()
         << "\nS_prime_length=" << r.instance.output.size()
         << "\nvariant=" << variant_name(r.instance.variant)
         << "\nfeasible=" << r.intended.has_value() << '\n';
}

int do_3part_to_fst(const std::string& in, const std::string& out, const std::string& fst_out,
                    bool modified, Io& io) {
  const auto file = parse_three_partition(read_text(in, io));
  const auto red = reduce_file(file, modified);
  write_text(out, render_instance(red.instance));
  if (!fst_out.empty() && red.intended) write_text(fst_out, render_fst(*red.intended));
  print_reduction(red, io);
  return kOk;
}

PatsConstruction construction_of(const std::string& variant) {
  if (variant == "nonuniform") return PatsConstruction::NonUniform;
  if (variant == "uniform") return PatsConstruction::Uniform;
  return PatsConstruction::Uniform3;
}

PatsInstance build_pats(const FstEncodingInstance& inst, PatsConstruction c) {
  switch (c) {
    case PatsConstruction::NonUniform: return reduce_fst_to_pats_nonuniform(inst);
    case PatsConstruction::Uniform: return reduce_fst_to_pats_uniform(inst);
    default: return reduce_modified_fst_to_3pats(inst);
  }
}

/// Writes pattern.txt, budget.txt and (with an FST) witness.tiles into `dir`.
void emit_pats(const std::filesystem::path& dir, const FstEncodingInstance& inst,
               const std::string& variant, const Fst* fst, Io& io) {
  const auto c = construction_of(variant);
  const auto pats = build_pats(inst, c);
  std::filesystem::create_directories(dir);
  write_text(dir / "pattern.txt", render_pattern(pats.pattern));
  std::ostringstream budget;
  budget << "budget=" << pats.budget << "\nvariant="
         << (pats.variant == PatsVariant::Uniform ? "uniform" : "nonuniform") << '\n';
  write_text(dir / "budget.txt", budget.str());
  io.out << "width=" << pats.pattern.width() << "\nheight=" << pats.pattern.height()
         << "\ncolors=" << pats.pattern.color_set().size() << "\nbudget=" << pats.budget << '\n';
  if (fst) {
    const auto w = witness_tileset_from_fst(*fst, inst, pats, c);
    write_text(dir / "witness.tiles", render_tileset(w.rtas, pats.pattern.glyphs(), &w.glues));
    io.out << "witness_tiles=" << w.rtas.tiles.size()
           << "\nwitness_assembles=" << uniquely_assembles(w.rtas, pats.pattern) << '\n';
  }
}

int do_fst_to_pats(const std::string& in, const std::string& out, const std::string& variant,
                   const std::string& witness, Io& io) {
  const auto inst = parse_instance(read_text(in, io));
  std::optional<Fst> fst;
  if (!witness.empty()) fst = parse_fst(read_text(witness, io));
  emit_pats(out, inst, variant, fst ? &*fst : nullptr, io);
  return kOk;
}

int do_gen_witness(const std::string& in, const std::string& out, const std::string& variant,
                   Io& io) {
  const auto file = parse_three_partition(read_text(in, io));
  const auto red = reduce_file(file, variant == "uniform3");
  print_reduction(red, io);
  if (!red.intended) {
    io.err << "instance has no packing; no witness\n";
    return kFalse;
  }
  const std::filesystem::path dir(out);
  std::filesystem::create_directories(dir);
  write_text(dir / "instance.fst", render_instance(red.instance));
  write_text(dir / "intended.fst", render_fst(*red.intended));
  emit_pats(dir, red.instance, variant, &*red.intended, io);
  return kOk;
}

int do_selftest(const std::string& scale, std::uint64_t seed, int threads, Io& io) {
  const auto results =
      run_acceptance(scale == "small" ? Scale::Small : Scale::Micro, seed, threads);
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    io.out << "criterion=" << r.id << " status=" << (r.pass ? "PASS" : "FAIL") << ' '
           << r.detail << " seconds=" << r.seconds << '\n';
  }
  io.out << "selftest=" << (all ? "PASS" : "FAIL") << '\n';
  return all ? kOk : kFalse;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Io io{in, out, err};
  CLI::App app{"Pattern self-assembly tile set synthesis toolkit", "pats"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate_cmd = app.add_subcommand("simulate", "Grow the terminal assembly of a tile set");
  simulate_cmd->add_option("--tiles", sim.tiles, "Tile set file")->required();
  simulate_cmd->add_option("--pattern", sim.pattern, "Pattern file")->required();
  simulate_cmd->add_flag("--brute-force", sim.brute, "Enumerate all terminal assemblies");
  simulate_cmd->add_option("--cap", sim.cap, "Terminal assembly cap for --brute-force");
  simulate_cmd->add_option("--order", sim.order, "Fill order")
      ->check(CLI::IsMember({"column", "row"}));

  std::string v_tiles, v_pattern;
  std::size_t v_cap = 1000;
  auto* verify_cmd = app.add_subcommand("verify", "Check unique assembly of a pattern");
  verify_cmd->add_option("--tiles", v_tiles, "Tile set file")->required();
  verify_cmd->add_option("--pattern", v_pattern, "Pattern file")->required();
  verify_cmd->add_option("--cap", v_cap, "Terminal assembly cap for undirected sets");

  SolveArgs sol;
  auto* solve_cmd = app.add_subcommand("solve", "Minimum tile set for a pattern");
  solve_cmd->add_option("--pattern", sol.pattern, "Pattern file")->required();
  solve_cmd->add_flag("--uniform", sol.uniform, "Restrict to uniform seeds");
  solve_cmd->add_option("--cap", sol.cap, "Largest tile set size to try");
  solve_cmd->add_option("--emit-tiles", sol.emit, "Write the witness tile set here");
  solve_cmd->add_option("--threads", sol.threads, "Search threads")->check(CLI::PositiveNumber);

  std::string h1_pattern, h1_emit;
  auto* h1_cmd = app.add_subcommand("minsize-uniform-h1", "Exact uniform minimum for one row");
  h1_cmd->add_option("--pattern", h1_pattern, "Pattern file")->required();
  h1_cmd->add_option("--emit-tiles", h1_emit, "Write the witness tile set here");

  auto* reduce_cmd = app.add_subcommand("reduce", "Generate reduction instances");
  reduce_cmd->require_subcommand(1);
  std::string r_in, r_out, r_fst_out;
  bool r_modified = false;
  auto* to_fst = reduce_cmd->add_subcommand("3part-to-fst", "3-partition to FST encoding");
  to_fst->add_option("--in", r_in, "3-partition file")->required();
  to_fst->add_option("--out", r_out, "FST encoding instance file")->required();
  to_fst->add_option("--fst-out", r_fst_out, "Write the intended FST here when one exists");
  to_fst->add_flag("--modified", r_modified, "Emit the modified promise variant");
  std::string p_in, p_out, p_variant, p_witness;
  auto* to_pats = reduce_cmd->add_subcommand("fst-to-pats", "FST encoding to PATS");
  to_pats->add_option("--in", p_in, "FST encoding instance file")->required();
  to_pats->add_option("--out", p_out, "Output directory")->required();
  to_pats->add_option("--variant", p_variant, "Construction")
      ->required()
      ->check(CLI::IsMember({"nonuniform", "uniform", "uniform3"}));
  to_pats->add_option("--witness", p_witness, "FST file used to build a witness tile set");

  std::string g_in, g_out, g_variant = "uniform3";
  auto* gen_cmd = app.add_subcommand("gen-witness", "3-partition to PATS pattern and witness");
  gen_cmd->add_option("--in", g_in, "3-partition file")->required();
  gen_cmd->add_option("--out", g_out, "Output directory")->required();
  gen_cmd->add_option("--variant", g_variant, "Construction")
      ->check(CLI::IsMember({"nonuniform", "uniform", "uniform3"}));

  std::string scale = "micro";
  std::uint64_t rng_seed = 1;
  int st_threads = 0;
  auto* self_cmd = app.add_subcommand("selftest", "Run the acceptance suite");
  self_cmd->add_option("--scale", scale, "Suite size")->check(CLI::IsMember({"micro", "small"}));
  self_cmd->add_option("--seed-rng", rng_seed, "Seed for randomized checks");
  self_cmd->add_option("--threads", st_threads, "OpenMP threads (0 = default)");

  std::vector<std::string> argv_store{"pats"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*simulate_cmd) return do_simulate(sim, io);
    if (*verify_cmd) return do_verify(v_tiles, v_pattern, v_cap, io);
    if (*solve_cmd) return do_solve(sol, io);
    if (*h1_cmd) return do_uniform_h1(h1_pattern, h1_emit, io);
    if (*to_fst) return do_3part_to_fst(r_in, r_out, r_fst_out, r_modified, io);
    if (*to_pats) return do_fst_to_pats(p_in, p_out, p_variant, p_witness, io);
    if (*gen_cmd) return do_gen_witness(g_in, g_out, g_variant, io);
    if (*self_cmd) return do_selftest(scale, rng_seed, st_threads, io);
  } catch (const NotDirectedError& e) {
    err << "error: " << e.what() << '\n';
    return kFalse;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kFalse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace pats::cli
