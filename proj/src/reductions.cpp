#include "pats/reductions.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "pats/error.hpp"

namespace pats {

namespace {

std::string zeros(int n) { return std::string(static_cast<std::size_t>(n), '0'); }

/// State layout shared by both FST reductions. All indices are 0-based.
struct Layout {
  int k = 0;
  int offset = 0;  ///< 1 for the modified reduction (s_1 is the new state)
  std::vector<State> singletons;
  RodLayout rods;
};

Layout plain_layout(const ThreePartitionInstance& inst, int offset) {
  Layout l;
  const int n = inst.n, p = inst.p;
  const int specified = 2 * p * n;
  l.offset = offset;
  l.k = 3 * p * n + n + 1 + offset;
  State next = static_cast<State>(offset);
  for (int a : inst.a) {
    l.rods.fixed_start.push_back(next);
    l.rods.length.push_back(a);
    next += static_cast<State>(2 * a);
  }
  for (int t = 0; t <= n; ++t)
    l.singletons.push_back(static_cast<State>(offset + specified + t * (p + 1)));
  for (int t = 0; t < n; ++t)
    l.rods.box_start.push_back(static_cast<State>(offset + specified + t * (p + 1) + 1));
  l.rods.box_size = p;
  return l;
}

Layout modified_layout(const ThreePartitionInstance& inst) {
  Layout l = plain_layout(inst, 1);
  if (l.k % 3 == 0) {
    l.singletons.push_back(static_cast<State>(l.k));
    l.k += 1;
  }
  return l;
}

FstSkeleton skeleton_of(const Layout& l, bool modified) {
  Fst t(l.k, 0, "01", modified ? "012" : "01");
  for (int q = 0; q + 1 < l.k; ++q) t.set(static_cast<State>(q), '0', static_cast<State>(q + 1), '0');
  t.set(static_cast<State>(l.k - 1), '0', 0, '1');
  if (modified) t.set(0, '1', 0, '2');
  for (State s : l.singletons) t.set(s, '1', s, '1');
  for (std::size_t i = 0; i < l.rods.length.size(); ++i)
    for (int j = 0; j < l.rods.length[i]; ++j) {
      const State lo = l.rods.fixed_start[i] + 2 * static_cast<State>(j);
      t.set(lo, '1', lo + 1, '1');
    }
  return FstSkeleton{std::move(t), l.rods};
}

/// Segment bodies walk from s_1 to s_K; closers bring the run back to s_1.
class SegmentWriter {
 public:
  SegmentWriter(int k, bool modified) : k_(k), modified_(modified) {}

  void body(const std::string& s, SegmentKind kind) {
    segments_.push_back({s, s, kind});
    close();
  }
  void close() {
    if (modified_) segments_.push_back({"01", "12", SegmentKind::ZeroOne});
    else segments_.push_back({"0", "1", SegmentKind::ZeroOne});
  }
  void frame() {
    segments_.push_back({"1" + zeros(k_ - 1) + "01", "2" + zeros(k_ - 1) + "12",
                         SegmentKind::ModifiedPrefix});
  }
  void initial() {
    if (modified_) {
      segments_.push_back({zeros(k_ - 1) + "01" + zeros(k_ - 1), zeros(k_ - 1) + "12" + zeros(k_ - 1),
                           SegmentKind::Initial});
    } else {
      segments_.push_back({zeros(k_ - 1) + "0" + zeros(k_ - 1), zeros(k_ - 1) + "1" + zeros(k_ - 1),
                           SegmentKind::Initial});
    }
    close();
  }

  std::string singleton(State q) const { return zeros(q) + "1" + zeros(k_ - 1 - static_cast<int>(q)); }
  std::string triple_first(State q) const {
    return zeros(q) + "1" + zeros(k_ - 2 - static_cast<int>(q));
  }
  std::string triple_second(State q) const {
    return zeros(q + 1) + "11" + zeros(k_ - 1 - static_cast<int>(q));
  }
  std::string interval_check(State q) const {
    return zeros(q) + "1101" + zeros(k_ - 3 - static_cast<int>(q));
  }

  std::vector<Segment> take() { return std::move(segments_); }

 private:
  int k_;
  bool modified_;
  std::vector<Segment> segments_;
};

std::vector<Segment> segments_of(const Layout& l, bool modified) {
  SegmentWriter w(l.k, modified);
  if (modified) w.frame();
  w.initial();
  for (State s : l.singletons) w.body(w.singleton(s), SegmentKind::FixedSingleton);
  for (std::size_t i = 0; i < l.rods.length.size(); ++i) {
    const State f = l.rods.fixed_start[i];
    const int a = l.rods.length[i];
    for (int t = 0; t < a; ++t) {
      const State lo = f + 2 * static_cast<State>(t);
      w.body(w.triple_first(lo), SegmentKind::HalfFixedTriple);
      w.body(w.triple_second(lo), SegmentKind::HalfFixedTriple);
    }
    for (int t = 0; t + 1 < a; ++t)
      w.body(w.interval_check(f + 2 * static_cast<State>(t)), SegmentKind::HalfFixedInterval);
  }
  if (modified) w.frame();
  return w.take();
}

FstReduction reduce(const ThreePartitionInstance& inst, const std::optional<Partition>& reference,
                    bool modified) {
  inst.validate();
  const Layout layout = modified ? modified_layout(inst) : plain_layout(inst, 0);

  FstReduction out;
  out.skeleton = skeleton_of(layout, modified);
  out.segments = segments_of(layout, modified);
  out.instance.k = layout.k;
  for (const auto& s : out.segments) {
    out.instance.input += s.input;
    out.instance.output += s.output;
  }
  out.instance.variant = EncodingVariant::Plain;

  if (reference) {
    out.reference = *reference;
  } else {
    const auto found = solve_encoding_by_search(out.instance, out.skeleton);
    if (found.feasible()) out.reference = found.placement;
  }
  if (out.reference) {
    out.intended = build_intended_fst(out.skeleton, *out.reference);
    out.instance.order = first_traversal_ids(transduce(*out.intended, out.instance.input).trace);
    out.instance.variant = modified ? EncodingVariant::ModifiedPromise : EncodingVariant::Promise;
  }
  return out;
}

}  // namespace

FstReduction reduce_3partition_to_fst(const ThreePartitionInstance& inst,
                                      const std::optional<Partition>& reference) {
  return reduce(inst, reference, false);
}

FstReduction reduce_3partition_to_modified_fst(const ThreePartitionInstance& inst,
                                               const std::optional<Partition>& reference) {
  return reduce(inst, reference, true);
}

Fst build_intended_fst(const FstSkeleton& skeleton, const Partition& partition) {
  return complete_skeleton(skeleton, partition);
}

// ---- PATS patterns ---------------------------------------------------------------

namespace glyphs {

namespace {
const std::string& palette() {
  static const std::string p = [] {
    std::string s;
    for (char c = '0'; c <= '9'; ++c) s.push_back(c);
    for (char c = 'A'; c <= 'Z'; ++c) s.push_back(c);
    const std::string reserved = {kCyan, kGray, kOrange, kPink, kRed, kWhite, kBlack};
    for (char c = 'a'; c <= 'z'; ++c)
      if (reserved.find(c) == std::string::npos) s.push_back(c);
    for (char c = '!'; c <= '~'; ++c)
      if (!std::isalnum(static_cast<unsigned char>(c))) s.push_back(c);
    return s;
  }();
  return p;
}
}  // namespace

char transition(int id) {
  if (id < 1 || id > palette_size())
    throw FormatError("transition color " + std::to_string(id) + " exceeds the glyph palette");
  return palette()[static_cast<std::size_t>(id - 1)];
}

int palette_size() { return static_cast<int>(palette().size()); }

}  // namespace glyphs

namespace {

const std::vector<int>& require_order(const FstEncodingInstance& inst) {
  if (!inst.order) throw VariantError("instance has no transition order");
  if (inst.order->size() != inst.input.size()) throw VariantError("order length differs from |S|");
  return *inst.order;
}

char letter_glyph(char b) { return b == '0' ? glyphs::kPink : glyphs::kRed; }

char phi(char symbol) {
  switch (symbol) {
    case '0': return glyphs::kCyan;
    case '1': return glyphs::kGray;
    default: return glyphs::kOrange;
  }
}

}  // namespace

PatsInstance reduce_fst_to_pats_nonuniform(const FstEncodingInstance& inst) {
  const auto& order = require_order(inst);
  std::string top, bottom;
  for (std::size_t x = 0; x < inst.input.size(); ++x) {
    bottom.push_back(letter_glyph(inst.input[x]));
    top.push_back(glyphs::transition(order[x]));
  }
  return PatsInstance{Pattern::from_rows({top, bottom}), 2 * inst.k + 2, PatsVariant::NonUniform};
}

PatsInstance reduce_fst_to_pats_uniform(const FstEncodingInstance& inst) {
  const auto& order = require_order(inst);
  const std::size_t n = inst.input.size();
  std::string top, bottom;
  for (std::size_t x = 0; x < n; ++x) top.push_back(letter_glyph(inst.input[x]));
  top.push_back(glyphs::kWhite);
  for (std::size_t x = 0; x < n; ++x) top.push_back(glyphs::transition(order[x]));
  bottom = std::string(n, glyphs::kOrange) + glyphs::kBlack + std::string(n, glyphs::kOrange);
  return PatsInstance{Pattern::from_rows({top, bottom}),
                      static_cast<int>(n) + 2 * inst.k + 4, PatsVariant::Uniform};
}

std::string constructor_block_word(int k, int i) {
  using glyphs::kCyan;
  using glyphs::kGray;
  if (i == k - 1) return std::string(static_cast<std::size_t>(k - 4), kCyan) + kGray;
  const int r = (3 * i) % k;
  if (r >= 1 && r <= k - 3)
    return std::string(static_cast<std::size_t>(r - 1), kCyan) + kGray +
           std::string(static_cast<std::size_t>(k - 3 - r), kCyan);
  return std::string(static_cast<std::size_t>(k - 3), kCyan);
}

PatsInstance reduce_modified_fst_to_3pats(const FstEncodingInstance& inst) {
  if (inst.variant != EncodingVariant::ModifiedPromise)
    throw VariantError("the 3-color construction needs a modified promise instance");
  const int k = inst.k;
  if (k < 4 || k % 3 == 0) throw VariantError("the 3-color construction needs K >= 4, K != 0 mod 3");
  std::string top(1, glyphs::kCyan), bottom(1, glyphs::kOrange);
  for (char c : inst.output) top.push_back(phi(c));
  bottom += std::string(inst.output.size(), glyphs::kOrange);
  const std::string block_bottom = std::string(static_cast<std::size_t>(k - 1), glyphs::kCyan) + glyphs::kGray;
  for (int i = 0; i < k; ++i) {
    top += constructor_block_word(k, i);
    top += std::string(3, i == k - 1 ? glyphs::kOrange : glyphs::kGray);
    bottom += block_bottom;
  }
  return PatsInstance{Pattern::from_rows({top, bottom}),
                      static_cast<int>(inst.output.size()) + 2 * k + 2, PatsVariant::Uniform};
}

// ---- witnesses ------------------------------------------------------------------

namespace {

class WitnessBuilder {
 public:
  explicit WitnessBuilder(const Pattern& p) : pattern_(p) {}

  Glue glue(const std::string& name) { return w_.glues.intern(name); }

  Color color(char g) const {
    const auto& gl = pattern_.glyphs();
    const auto it = std::find(gl.begin(), gl.end(), g);
    if (it == gl.end()) throw ValidationError(std::string("glyph '") + g + "' absent from the pattern");
    return static_cast<Color>(it - gl.begin());
  }

  void add(char g, const std::string& n, const std::string& e, const std::string& s,
           const std::string& w) {
    w_.rtas.tiles.push_back(TileType{color(g), glue(n), glue(e), glue(s), glue(w)});
  }

  Witness finish(Seed seed) {
    w_.rtas.seed = std::move(seed);
    w_.rtas.width = pattern_.width();
    w_.rtas.height = pattern_.height();
    return std::move(w_);
  }

 private:
  const Pattern& pattern_;
  Witness w_;
};

std::string state_glue(State q) { return "q" + std::to_string(q + 1); }

/// Color id of each transition, keyed by its first traversal.
std::map<std::pair<State, char>, int> transition_colors(const Fst& t, const FstEncodingInstance& inst) {
  const auto& order = require_order(inst);
  const auto run = transduce(t, inst.input);
  std::map<std::pair<State, char>, int> ids;
  for (std::size_t x = 0; x < run.trace.size(); ++x)
    ids.try_emplace({run.trace[x].from, run.trace[x].input}, order[x]);
  return ids;
}

Witness witness_nonuniform(const Fst& t, const FstEncodingInstance& inst, const Pattern& p) {
  WitnessBuilder b(p);
  b.add(glyphs::kPink, "0", "b", "0", "b");
  b.add(glyphs::kRed, "1", "b", "1", "b");
  for (const auto& [key, id] : transition_colors(t, inst)) {
    const auto& tr = *t.at(key.first, key.second);
    b.add(glyphs::transition(id), "0", state_glue(tr.target), std::string(1, key.second),
          state_glue(key.first));
  }
  std::vector<Glue> bottom;
  for (char c : inst.input) bottom.push_back(b.glue(std::string(1, c)));
  return b.finish(Seed::non_uniform(std::move(bottom), {b.glue("b"), b.glue(state_glue(t.start()))}));
}

Witness witness_uniform(const Fst& t, const FstEncodingInstance& inst, const Pattern& p) {
  WitnessBuilder b(p);
  const std::size_t n = inst.input.size();
  auto chain = [](std::size_t x) { return "e" + std::to_string(x); };
  auto letter = [](char c) { return std::string("L") + c; };
  for (std::size_t x = 1; x <= n; ++x)
    b.add(glyphs::kOrange, letter(inst.input[x - 1]), chain(x), "0", x == 1 ? "0" : chain(x - 1));
  b.add(glyphs::kBlack, "sep", "0", "0", chain(n));
  b.add(glyphs::kPink, "0", "0", letter('0'), "0");
  b.add(glyphs::kRed, "0", "0", letter('1'), "0");
  b.add(glyphs::kWhite, "0", state_glue(t.start()), "sep", "0");
  for (const auto& [key, id] : transition_colors(t, inst)) {
    const auto& tr = *t.at(key.first, key.second);
    b.add(glyphs::transition(id), "0", state_glue(tr.target), letter(key.second),
          state_glue(key.first));
  }
  const Glue zero = b.glue("0");
  return b.finish(Seed::uniform(p.width(), p.height(), zero, zero));
}

Witness witness_three_color(const Fst& t, const FstEncodingInstance& inst, const Pattern& p) {
  const int k = inst.k;
  if (t.num_states() != k) throw ValidationError("witness FST must have exactly K states");
  WitnessBuilder b(p);
  const std::size_t n = inst.input.size();
  auto chain = [](std::size_t x) { return "e" + std::to_string(x); };
  auto sg = [](State q) { return "s" + std::to_string(q + 1); };

  b.add(glyphs::kCyan, "0", sg(0), "1", "0");
  b.add(glyphs::kOrange, "1", chain(1), "0", "0");
  for (std::size_t x = 2; x <= n + 1; ++x)
    b.add(glyphs::kOrange, std::string(1, inst.input[x - 2]), x == n + 1 ? sg(0) : chain(x), "0",
          chain(x - 1));
  for (State q = 0; q < static_cast<State>(k); ++q) {
    for (char in : std::string("01")) {
      const auto& tr = t.at(q, in);
      if (!tr) throw ValidationError("witness FST must be complete");
      // 0-transitions out of s_{K-2}, s_{K-1}, s_K expose 1 to the block's
      // top row; everything else exposes 0.
      const bool exposes_one = in == '0' && static_cast<int>(q) >= k - 3;
      b.add(phi(tr->output), exposes_one ? "1" : "0", sg(tr->target), std::string(1, in), sg(q));
    }
  }
  const Glue zero = b.glue("0");
  return b.finish(Seed::uniform(p.width(), p.height(), zero, zero));
}

}  // namespace

Witness witness_tileset_from_fst(const Fst& t, const FstEncodingInstance& inst,
                                 const PatsInstance& pats, PatsConstruction construction) {
  switch (construction) {
    case PatsConstruction::NonUniform: return witness_nonuniform(t, inst, pats.pattern);
    case PatsConstruction::Uniform: return witness_uniform(t, inst, pats.pattern);
    case PatsConstruction::Uniform3: return witness_three_color(t, inst, pats.pattern);
  }
  throw VariantError("unknown construction");
}

}  // namespace pats
