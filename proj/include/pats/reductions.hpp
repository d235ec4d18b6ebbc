#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pats/fst.hpp"
#include "pats/pattern.hpp"
#include "pats/rtas.hpp"

namespace pats {

enum class SegmentKind {
  Initial,
  FixedSingleton,
  HalfFixedTriple,
  HalfFixedInterval,
  ModifiedPrefix,
  ZeroOne,
};

/// Paired input/output substrings X -> Y.
struct Segment {
  std::string input;
  std::string output;
  SegmentKind kind = SegmentKind::Initial;
};

/// Output of the 3-partition -> FST encoding reductions.
struct FstReduction {
  FstEncodingInstance instance;
  FstSkeleton skeleton;
  std::vector<Segment> segments;
  /// Partition the transition order was taken from. Absent when no rod
  /// packing exists, in which case the instance is Plain.
  std::optional<Partition> reference;
  std::optional<Fst> intended;
};

/// States s_1..s_2pn hold the specified halves, n+1 fixed singletons sit at
/// s_2pn+1, s_2pn+p+2, ..., s_K and the boxes of p free states lie between
/// them; K = 3pn + n + 1.
///
/// When `reference` is absent a rod packing is searched for; the instance
/// carries the transition order of the intended transduction under the
/// reference (or found) packing. Throws ValidationError on a bad instance
/// and PackingError on a bad reference.
FstReduction reduce_3partition_to_fst(const ThreePartitionInstance& inst,
                                      const std::optional<Partition>& reference = std::nullopt);

/// Same layout shifted by one state: s_1 carries a (1,2)-loop and receives
/// the (0,1)-transition from s_K, a padding singleton is appended when the
/// state count would be a multiple of 3, every 0 -> 1 closer becomes
/// 01 -> 12, and 10^K1 -> 20^{K-1}12 frames both strings.
FstReduction reduce_3partition_to_modified_fst(
    const ThreePartitionInstance& inst, const std::optional<Partition>& reference = std::nullopt);

/// Packs each part's rods left to right into its box. Throws PackingError
/// when a part does not sum to the box size.
Fst build_intended_fst(const FstSkeleton& skeleton, const Partition& partition);

// ---- FST instances -> height-2 PATS --------------------------------------------

struct PatsInstance {
  Pattern pattern;
  int budget = 0;
  PatsVariant variant = PatsVariant::NonUniform;
};

/// Which of the three pattern constructions produced an instance.
enum class PatsConstruction { NonUniform, Uniform, Uniform3 };

namespace glyphs {
inline constexpr char kCyan = 'c';
inline constexpr char kGray = 'g';
inline constexpr char kOrange = 'o';
inline constexpr char kPink = 'p';
inline constexpr char kRed = 'r';
inline constexpr char kWhite = 'w';
inline constexpr char kBlack = 'b';

/// Glyph of transition color `id` (1-based). Throws FormatError past the
/// palette.
char transition(int id);
int palette_size();
}  // namespace glyphs

/// Bottom row encodes S in pink/red, top row the transition order; budget
/// 2K + 2, non-uniform seed. Throws VariantError without an order.
PatsInstance reduce_fst_to_pats_nonuniform(const FstEncodingInstance& inst);

/// Input half | separator | transduction half, width 2|S| + 1, budget
/// |S| + 2K + 4, uniform seed. Throws VariantError without an order.
PatsInstance reduce_fst_to_pats_uniform(const FstEncodingInstance& inst);

/// Three-color pattern of width 1 + |S'| + K^2 with budget |S'| + 2K + 2.
/// Throws VariantError unless the instance is a modified promise instance.
PatsInstance reduce_modified_fst_to_3pats(const FstEncodingInstance& inst);

/// Top-row word of FST-constructor block `i` (0-based, K blocks) without its
/// trailing three cells.
std::string constructor_block_word(int k, int i);

struct Witness {
  Rtas rtas;
  GlueTable glues;
};

/// Intended solution tile set built from a solution FST.
Witness witness_tileset_from_fst(const Fst& t, const FstEncodingInstance& inst,
                                 const PatsInstance& pats, PatsConstruction construction);

}  // namespace pats
