#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pats/error.hpp"

namespace pats {

using State = std::uint32_t;

struct Transition {
  State target = 0;
  char output = '0';

  friend bool operator==(const Transition&, const Transition&) = default;
};

/// Deterministic transducer over single-character symbols. Transitions may be
/// left undefined, which makes the value usable as a partial skeleton.
class Fst {
 public:
  Fst() = default;
  Fst(int num_states, State start, std::string inputs = "01",
      std::string outputs = "01");

  int num_states() const { return num_states_; }
  State start() const { return start_; }
  const std::string& inputs() const { return inputs_; }
  const std::string& outputs() const { return outputs_; }

  const std::optional<Transition>& at(State q, char in) const;
  void set(State q, char in, State target, char out);
  void clear(State q, char in);

  /// δ is total on Q x Σ.
  bool is_complete() const;
  std::size_t num_defined() const;

  friend bool operator==(const Fst&, const Fst&) = default;

 private:
  std::size_t slot(State q, char in) const;

  int num_states_ = 0;
  State start_ = 0;
  std::string inputs_;
  std::string outputs_;
  std::vector<std::optional<Transition>> delta_;
};

struct TraceStep {
  State from = 0;
  char input = '0';
  State to = 0;
  char output = '0';

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct Transduction {
  std::string output;
  std::vector<TraceStep> trace;
};

/// Throws AlphabetError on a foreign symbol and Error on an undefined
/// transition.
Transduction transduce(const Fst& t, std::string_view input);

/// Numbers the distinct (state, input) transitions of a trace 1, 2, ... by
/// first traversal and returns the per-step ids.
std::vector<int> first_traversal_ids(const std::vector<TraceStep>& trace);

/// Renumbers an arbitrary id sequence by first occurrence.
std::vector<int> canonical_order(const std::vector<int>& order);

enum class EncodingVariant { Plain, Promise, ModifiedPromise };

struct FstEncodingInstance {
  std::string input;   ///< S
  std::string output;  ///< S'
  int k = 1;
  std::optional<std::vector<int>> order;
  EncodingVariant variant = EncodingVariant::Plain;

  /// Throws ValidationError.
  void validate() const;

  friend bool operator==(const FstEncodingInstance&, const FstEncodingInstance&) = default;
};

struct PromiseOptions {
  /// false gives the harder variant without the two in-degree promises.
  bool check_in_degree = true;
  bool check_order = true;
};

struct PromiseReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  explicit operator bool() const { return ok(); }
};

/// Checks that `t` transduces S to S' with at most K states and satisfies the
/// promises of the instance's variant. Violations are reported, not thrown.
PromiseReport verify_promises(const Fst& t, const FstEncodingInstance& inst,
                              const PromiseOptions& options = {});

// ---- 3-partition -----------------------------------------------------------

struct ThreePartitionInstance {
  std::vector<int> a;
  int n = 1;
  int p = 1;
  /// Admits illustrative instances: drops p/4 < a_i < p/2 and |A| = 3n.
  bool relaxed = false;

  void validate() const;
};

/// Element indices (0-based) per part, in packing order.
using Partition = std::vector<std::vector<int>>;

// ---- skeletons and the assignment search ----------------------------------

/// Where the rods of a reduction skeleton live. Rod i has specified states
/// fixed_start[i] .. fixed_start[i] + 2*length[i] - 1 and must occupy
/// length[i] consecutive states inside one box.
struct RodLayout {
  std::vector<State> fixed_start;
  std::vector<int> length;
  std::vector<State> box_start;
  int box_size = 0;
};

struct FstSkeleton {
  Fst partial;
  std::optional<RodLayout> rods;
};

/// Fills the free 1-transitions of a rod skeleton for a placement where
/// part b is packed left to right into box b. Throws PackingError when the
/// placement does not fit the boxes.
Fst complete_skeleton(const FstSkeleton& skeleton, const Partition& placement);

class SearchBudgetExceeded : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

struct EncodingSearchResult {
  std::optional<Fst> fst;            ///< nullopt means Infeasible
  std::optional<Partition> placement;  ///< set for rod searches
  std::size_t nodes = 0;

  bool feasible() const { return fst.has_value(); }
};

/// Completes `skeleton` into an FST transducing S to S' that passes
/// verify_promises (order included when the instance carries one).
///
/// With a rod layout, rods are placed depth-first, longest candidates first,
/// into the boxes left to right with remaining-capacity pruning. Without one,
/// undefined transitions are assigned lazily while transducing S, which is
/// exhaustive over all completions. Throws SearchBudgetExceeded after
/// `node_cap` search nodes.
EncodingSearchResult solve_encoding_by_search(const FstEncodingInstance& inst,
                                              const FstSkeleton& skeleton,
                                              std::size_t node_cap = 10'000'000);

// ---- files -------------------------------------------------------------------

/// `fst states=<K> start=<s>` then `trans <q> <in> -> <q'> <out>` lines.
Fst parse_fst(std::string_view text);
std::string render_fst(const Fst& t);

/// `S=`, `S'=`, `K=`, optional `order=`, `variant=` lines.
FstEncodingInstance parse_instance(std::string_view text);
std::string render_instance(const FstEncodingInstance& inst);

/// `n=<int> p=<int> a=<list>` tokens, optional `relaxed=1` and
/// `parts=<1-based indices>;<...>`.
struct ThreePartitionFile {
  ThreePartitionInstance instance;
  std::optional<Partition> parts;
};
ThreePartitionFile parse_three_partition(std::string_view text);
std::string render_three_partition(const ThreePartitionFile& file);

}  // namespace pats
