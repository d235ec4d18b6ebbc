#include <doctest.h>

#include <set>

#include "pats/error.hpp"
#include "pats/reductions.hpp"

using namespace pats;

namespace {

ThreePartitionInstance toy() { return {{1, 1, 2, 1, 1, 2}, 2, 4, true}; }
const Partition kToyParts{{1, 3, 5}, {0, 2, 4}};

std::string zeros(int n) { return std::string(static_cast<std::size_t>(n), '0'); }

bool starts_with(const std::string& s, const std::string& pre) {
  return s.size() >= pre.size() && s.compare(0, pre.size(), pre) == 0;
}
bool ends_with(const std::string& s, const std::string& suf) {
  return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

/// Every two-box partition of the toy instance whose parts both sum to p.
std::vector<Partition> toy_partitions() {
  std::vector<Partition> out;
  const auto a = toy().a;
  for (unsigned mask = 0; mask < 64; ++mask) {
    Partition parts(2);
    int sum = 0;
    for (int i = 0; i < 6; ++i) {
      parts[(mask >> i) & 1].push_back(i);
      if ((mask >> i) & 1) sum += a[static_cast<std::size_t>(i)];
    }
    if (sum == 4) out.push_back(parts);
  }
  return out;
}

std::size_t count_colors(const std::string& row) { return std::set<char>(row.begin(), row.end()).size(); }

}  // namespace

TEST_CASE("K follows 3pn + n + 1") {
  CHECK(reduce_3partition_to_fst(toy(), kToyParts).instance.k == 27);
  CHECK(reduce_3partition_to_fst({{2, 3, 2}, 1, 7, true}).instance.k == 23);
}

TEST_CASE("segments line up and the first segment has the fixed shape") {
  for (const auto& inst : {toy(), ThreePartitionInstance{{2, 3, 2}, 1, 7, true}}) {
    const auto red = reduce_3partition_to_fst(inst);
    const int k = red.instance.k;
    CHECK(red.instance.input.size() == red.instance.output.size());
    for (const auto& s : red.segments) CHECK(s.input.size() == s.output.size());
    CHECK(starts_with(red.instance.input, zeros(k - 1) + "0" + zeros(k - 1)));
    CHECK(starts_with(red.instance.output, zeros(k - 1) + "1" + zeros(k - 1)));
    CHECK(red.segments.front().kind == SegmentKind::Initial);
  }
}

TEST_CASE("toy partition gives a promise-satisfying FST") {
  const auto red = reduce_3partition_to_fst(toy(), kToyParts);
  REQUIRE(red.intended);
  const auto t = build_intended_fst(red.skeleton, kToyParts);
  CHECK(t == *red.intended);
  CHECK(t.is_complete());
  CHECK(transduce(t, red.instance.input).output == red.instance.output);
  CHECK(red.instance.variant == EncodingVariant::Promise);
  const auto report = verify_promises(t, red.instance);
  CHECK(report.ok());
}

TEST_CASE("every valid toy partition passes the promises") {
  const auto parts = toy_partitions();
  CHECK(parts.size() == 14);
  for (const auto& part : parts) {
    const auto red = reduce_3partition_to_fst(toy(), part);
    CHECK(verify_promises(*red.intended, red.instance).ok());
    const auto mod = reduce_3partition_to_modified_fst(toy(), part);
    CHECK(verify_promises(*mod.intended, mod.instance).ok());
  }
}

TEST_CASE("orders leak the partition") {
  // Two different packings give different transition orders, so an order
  // cannot be produced without choosing one.
  const auto a = reduce_3partition_to_fst(toy(), kToyParts);
  const auto b = reduce_3partition_to_fst(toy(), Partition{{0, 2, 4}, {1, 3, 5}});
  CHECK(a.instance.input == b.instance.input);
  CHECK(a.instance.order != b.instance.order);
  CHECK_FALSE(verify_promises(*a.intended, b.instance).ok());
}

TEST_CASE("invalid partitions raise PackingError") {
  const auto red = reduce_3partition_to_fst(toy(), kToyParts);
  CHECK_THROWS_AS(build_intended_fst(red.skeleton, Partition{{0, 2}, {1, 3, 4, 5}}), PackingError);
  CHECK_THROWS_AS(build_intended_fst(red.skeleton, Partition{{1, 3, 5}}), PackingError);
  CHECK_THROWS_AS(build_intended_fst(red.skeleton, Partition{{1, 3, 5}, {0, 2, 2}}), PackingError);
}

TEST_CASE("without a reference the reduction searches for a packing") {
  const auto red = reduce_3partition_to_fst(toy());
  REQUIRE(red.reference);
  REQUIRE(red.intended);
  CHECK(verify_promises(*red.intended, red.instance).ok());
  const auto search = solve_encoding_by_search(red.instance, red.skeleton);
  REQUIRE(search.feasible());
  CHECK(verify_promises(*search.fst, red.instance).ok());
}

TEST_CASE("modified reduction frames and K") {
  const auto red = reduce_3partition_to_modified_fst(toy(), kToyParts);
  const int k = red.instance.k;
  CHECK(k == 28);
  CHECK(k % 3 != 0);
  const std::string in_frame = "1" + zeros(k) + "1";
  const std::string out_frame = "2" + zeros(k - 1) + "12";
  CHECK(starts_with(red.instance.input, in_frame));
  CHECK(ends_with(red.instance.input, in_frame));
  CHECK(starts_with(red.instance.output, out_frame));
  CHECK(ends_with(red.instance.output, out_frame));
  CHECK(transduce(*red.intended, red.instance.input).output == red.instance.output);
  CHECK(verify_promises(*red.intended, red.instance).ok());
  CHECK(red.instance.variant == EncodingVariant::ModifiedPromise);
}

TEST_CASE("modified reduction pads K away from 0 mod 3") {
  // 3pn + n + 2 = 12 for n = 1, p = 3.
  const auto red = reduce_3partition_to_modified_fst({{1, 1, 1}, 1, 3, true});
  CHECK(red.instance.k == 13);
  REQUIRE(red.intended);
  CHECK(verify_promises(*red.intended, red.instance).ok());
}

TEST_CASE("non-uniform pattern of a one-state instance") {
  FstEncodingInstance inst{"01", "01", 1, std::vector<int>{1, 2}, EncodingVariant::Promise};
  const auto pats = reduce_fst_to_pats_nonuniform(inst);
  CHECK(render_pattern(pats.pattern) == "01\npr");
  CHECK(pats.budget == 4);
  CHECK(pats.variant == PatsVariant::NonUniform);
}

TEST_CASE("non-uniform pattern shape on the toy instance") {
  const auto red = reduce_3partition_to_fst(toy(), kToyParts);
  const auto pats = reduce_fst_to_pats_nonuniform(red.instance);
  const int k = red.instance.k;
  CHECK(pats.pattern.width() == static_cast<int>(red.instance.input.size()));
  CHECK(pats.pattern.color_set().size() == static_cast<std::size_t>(2 * k + 2));
  CHECK(pats.budget == 2 * k + 2);
  const auto rows = render_pattern(pats.pattern);
  const auto top = rows.substr(0, rows.find('\n'));
  const auto& order = *red.instance.order;
  CHECK(count_colors(top) == std::set<int>(order.begin(), order.end()).size());
}

TEST_CASE("uniform pattern shape on the toy instance") {
  const auto red = reduce_3partition_to_fst(toy(), kToyParts);
  const auto pats = reduce_fst_to_pats_uniform(red.instance);
  const auto n = red.instance.input.size();
  const int k = red.instance.k;
  CHECK(pats.pattern.width() == static_cast<int>(2 * n + 1));
  CHECK(pats.budget == static_cast<int>(n) + 2 * k + 4);
  CHECK(pats.pattern.color_set().size() == static_cast<std::size_t>(2 * k + 5));
  const auto rows = render_pattern(pats.pattern);
  CHECK(rows.substr(rows.find('\n') + 1) == std::string(n, 'o') + "b" + std::string(n, 'o'));
}

TEST_CASE("three-color pattern shape") {
  const auto red = reduce_3partition_to_modified_fst(toy(), kToyParts);
  const auto pats = reduce_modified_fst_to_3pats(red.instance);
  const int k = red.instance.k;
  const auto sp = static_cast<int>(red.instance.output.size());
  CHECK(pats.pattern.width() == 1 + sp + k * k);
  CHECK(pats.pattern.color_set().size() == 3);
  CHECK(pats.budget == sp + 2 * k + 2);
  std::set<std::string> gray_words;
  int with_gray = 0;
  for (int i = 0; i < k; ++i) {
    const auto w = constructor_block_word(k, i);
    CHECK(static_cast<int>(w.size()) == k - 3);
    if (w.find('g') != std::string::npos) {
      ++with_gray;
      gray_words.insert(w);
    }
  }
  CHECK(static_cast<int>(gray_words.size()) == with_gray);
  CHECK(constructor_block_word(k, k - 1) == std::string(static_cast<std::size_t>(k - 4), 'c') + "g");
}

TEST_CASE("three-color construction rejects other instances") {
  const auto plain = reduce_3partition_to_fst(toy(), kToyParts);
  CHECK_THROWS_AS(reduce_modified_fst_to_3pats(plain.instance), VariantError);
  FstEncodingInstance no_order{"01", "01", 1, std::nullopt, EncodingVariant::Plain};
  CHECK_THROWS_AS(reduce_fst_to_pats_nonuniform(no_order), VariantError);
  CHECK_THROWS_AS(reduce_fst_to_pats_uniform(no_order), VariantError);
}

TEST_CASE("witness tile sets assemble their patterns within budget") {
  const std::vector<std::pair<ThreePartitionInstance, Partition>> cases{
      {toy(), kToyParts},
      {{{1, 1, 1}, 1, 3, true}, {{0, 1, 2}}},
      {{{2, 1, 1, 1, 2, 1}, 2, 4, true}, {{0, 1, 2}, {3, 4, 5}}},
  };
  for (const auto& [inst, part] : cases) {
    const auto red = reduce_3partition_to_fst(inst, part);
    for (auto c : {PatsConstruction::NonUniform, PatsConstruction::Uniform}) {
      const auto pats = c == PatsConstruction::NonUniform ? reduce_fst_to_pats_nonuniform(red.instance)
                                                          : reduce_fst_to_pats_uniform(red.instance);
      const auto w = witness_tileset_from_fst(*red.intended, red.instance, pats, c);
      CHECK(is_directed(w.rtas.tiles));
      CHECK_NOTHROW(w.rtas.validate());
      CHECK(static_cast<int>(w.rtas.tiles.size()) == pats.budget);
      CHECK(uniquely_assembles(w.rtas, pats.pattern));
    }
    const auto mod = reduce_3partition_to_modified_fst(inst, part);
    const auto pats = reduce_modified_fst_to_3pats(mod.instance);
    const auto w = witness_tileset_from_fst(*mod.intended, mod.instance, pats, PatsConstruction::Uniform3);
    CHECK(is_directed(w.rtas.tiles));
    CHECK(static_cast<int>(w.rtas.tiles.size()) == pats.budget);
    CHECK(uniquely_assembles(w.rtas, pats.pattern));
  }
}

TEST_CASE("a wrong FST does not produce a witness") {
  const auto red = reduce_3partition_to_modified_fst(toy(), kToyParts);
  const auto pats = reduce_modified_fst_to_3pats(red.instance);
  auto t = *red.intended;
  // Point the first free 1-transition at the wrong rod state.
  const State free = red.skeleton.rods->box_start[0];
  const auto tr = *t.at(free, '1');
  t.set(free, '1', tr.target + 2, tr.output);
  const auto w = witness_tileset_from_fst(t, red.instance, pats, PatsConstruction::Uniform3);
  CHECK_FALSE(uniquely_assembles(w.rtas, pats.pattern));
}

TEST_CASE("generators are deterministic") {
  const auto a = reduce_3partition_to_modified_fst(toy());
  const auto b = reduce_3partition_to_modified_fst(toy());
  CHECK(render_instance(a.instance) == render_instance(b.instance));
  CHECK(render_pattern(reduce_modified_fst_to_3pats(a.instance).pattern) ==
        render_pattern(reduce_modified_fst_to_3pats(b.instance).pattern));
}

TEST_CASE("transition palette") {
  CHECK(glyphs::palette_size() == 87);
  std::set<char> seen;
  for (int i = 1; i <= glyphs::palette_size(); ++i) seen.insert(glyphs::transition(i));
  CHECK(seen.size() == 87);
  for (char reserved : {'c', 'g', 'o', 'p', 'r', 'w', 'b'}) CHECK(seen.count(reserved) == 0);
  CHECK_THROWS_AS(glyphs::transition(88), FormatError);
}
