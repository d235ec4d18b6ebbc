#include "pats/fst.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "pats/error.hpp"

namespace pats {

Fst::Fst(int num_states, State start, std::string inputs, std::string outputs)
    : num_states_(num_states), start_(start), inputs_(std::move(inputs)),
      outputs_(std::move(outputs)),
      delta_(static_cast<std::size_t>(num_states) * inputs_.size()) {
  if (num_states_ < 1) throw ValidationError("an FST needs at least one state");
  if (start_ >= static_cast<State>(num_states_)) throw ValidationError("start state out of range");
}

std::size_t Fst::slot(State q, char in) const {
  const auto pos = inputs_.find(in);
  if (pos == std::string::npos)
    throw AlphabetError(std::string("symbol '") + in + "' not in the input alphabet");
  if (q >= static_cast<State>(num_states_)) throw ValidationError("state out of range");
  return static_cast<std::size_t>(q) * inputs_.size() + pos;
}

const std::optional<Transition>& Fst::at(State q, char in) const { return delta_[slot(q, in)]; }

void Fst::set(State q, char in, State target, char out) {
  if (target >= static_cast<State>(num_states_)) throw ValidationError("target state out of range");
  if (outputs_.find(out) == std::string::npos)
    throw AlphabetError(std::string("symbol '") + out + "' not in the output alphabet");
  delta_[slot(q, in)] = Transition{target, out};
}

void Fst::clear(State q, char in) { delta_[slot(q, in)].reset(); }

bool Fst::is_complete() const {
  return std::all_of(delta_.begin(), delta_.end(), [](const auto& t) { return t.has_value(); });
}

std::size_t Fst::num_defined() const {
  return static_cast<std::size_t>(
      std::count_if(delta_.begin(), delta_.end(), [](const auto& t) { return t.has_value(); }));
}

Transduction transduce(const Fst& t, std::string_view input) {
  Transduction out;
  out.output.reserve(input.size());
  out.trace.reserve(input.size());
  State q = t.start();
  for (char b : input) {
    const auto& tr = t.at(q, b);
    if (!tr) throw Error("undefined transition from state " + std::to_string(q) + " on '" + b + "'");
    out.trace.push_back({q, b, tr->target, tr->output});
    out.output.push_back(tr->output);
    q = tr->target;
  }
  return out;
}

std::vector<int> first_traversal_ids(const std::vector<TraceStep>& trace) {
  std::map<std::pair<State, char>, int> ids;
  std::vector<int> out;
  out.reserve(trace.size());
  for (const auto& step : trace) {
    auto [it, inserted] = ids.try_emplace({step.from, step.input}, static_cast<int>(ids.size()) + 1);
    out.push_back(it->second);
  }
  return out;
}

std::vector<int> canonical_order(const std::vector<int>& order) {
  std::map<int, int> ids;
  std::vector<int> out;
  out.reserve(order.size());
  for (int v : order) {
    auto [it, inserted] = ids.try_emplace(v, static_cast<int>(ids.size()) + 1);
    out.push_back(it->second);
  }
  return out;
}

namespace {

std::string repeat(char c, int n) { return std::string(static_cast<std::size_t>(std::max(n, 0)), c); }

std::string modified_input_frame(int k) { return "1" + repeat('0', k) + "1"; }
std::string modified_output_frame(int k) { return "2" + repeat('0', k - 1) + "12"; }

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}
bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

void FstEncodingInstance::validate() const {
  if (k < 1) throw ValidationError("K must be positive");
  if (input.size() != output.size()) throw ValidationError("|S| != |S'|");
  if (order.has_value() != (variant != EncodingVariant::Plain))
    throw ValidationError("transition order must be present exactly for promise variants");
  if (order) {
    if (order->size() != input.size()) throw ValidationError("order length differs from |S|");
    for (int t : *order)
      if (t < 1 || t > 2 * k) throw ValidationError("order entry outside 1..2K");
  }
  if (variant == EncodingVariant::ModifiedPromise) {
    if (k % 3 == 0) throw ValidationError("modified promise instances need K != 0 (mod 3)");
    const auto in_frame = modified_input_frame(k);
    const auto out_frame = modified_output_frame(k);
    if (!starts_with(input, in_frame) || !ends_with(input, in_frame))
      throw ValidationError("S must begin and end with 10^K1");
    if (!starts_with(output, out_frame) || !ends_with(output, out_frame))
      throw ValidationError("S' must begin and end with 20^{K-1}12");
  }
}

PromiseReport verify_promises(const Fst& t, const FstEncodingInstance& inst,
                              const PromiseOptions& options) {
  PromiseReport report;
  auto fail = [&](std::string msg) { report.violations.push_back(std::move(msg)); };

  if (t.num_states() > inst.k)
    fail("FST has " + std::to_string(t.num_states()) + " states, more than K = " +
         std::to_string(inst.k));

  Transduction run;
  try {
    run = transduce(t, inst.input);
  } catch (const Error& e) {
    fail(std::string("transduction failed: ") + e.what());
    return report;
  }
  if (run.output != inst.output) fail("FST does not transduce S to S'");
  if (inst.variant == EncodingVariant::Plain) return report;

  const bool modified = inst.variant == EncodingVariant::ModifiedPromise;

  if (options.check_in_degree) {
    for (char b : std::string("01")) {
      std::vector<int> indegree(static_cast<std::size_t>(t.num_states()), 0);
      bool complete = true;
      for (State q = 0; q < static_cast<State>(t.num_states()); ++q) {
        const auto& tr = t.at(q, b);
        if (!tr) {
          complete = false;
          continue;
        }
        ++indegree[tr->target];
      }
      if (!complete) fail(std::string("some ") + b + "-transitions are undefined");
      for (State q = 0; q < static_cast<State>(t.num_states()); ++q)
        if (indegree[q] != 1)
          fail("state " + std::to_string(q) + " has " + std::to_string(indegree[q]) +
               " incoming " + b + "-transitions");
    }
  }

  std::map<std::pair<char, char>, std::set<std::pair<State, char>>> used;
  for (const auto& step : run.trace) used[{step.input, step.output}].insert({step.from, step.input});
  auto count = [&](char in, char out) {
    auto it = used.find({in, out});
    return it == used.end() ? 0 : static_cast<int>(it->second.size());
  };
  std::map<std::pair<char, char>, int> expected;
  if (modified) {
    expected = {{{'0', '0'}, inst.k - 1}, {{'1', '1'}, inst.k - 1},
                {{'0', '1'}, 1}, {{'1', '2'}, 1}};
  } else {
    expected = {{{'0', '0'}, inst.k - 1}, {{'1', '1'}, inst.k}, {{'0', '1'}, 1}};
  }
  for (const auto& [kind, want] : expected) {
    const int got = count(kind.first, kind.second);
    if (got != want)
      fail(std::string("expected ") + std::to_string(want) + " distinct (" + kind.first + "," +
           kind.second + ")-transitions in use, found " + std::to_string(got));
  }
  for (const auto& [kind, set] : used)
    if (!expected.count(kind))
      fail(std::string("unexpected (") + kind.first + "," + kind.second + ")-transitions in use");

  if (modified) {
    for (std::size_t i = 0; i < run.trace.size(); ++i) {
      const auto& s = run.trace[i];
      if (s.input == '0' && s.output == '1') {
        if (i + 1 >= run.trace.size() || run.trace[i + 1].input != '1' ||
            run.trace[i + 1].output != '2') {
          fail("(0,1)-traversal at position " + std::to_string(i + 1) +
               " is not followed by a (1,2)-traversal");
          break;
        }
      }
    }
    // (1,1)-transitions must close a cycle of length 1 or 3.
    auto one_one = [&](State q) -> std::optional<State> {
      const auto& tr = t.at(q, '1');
      if (tr && tr->output == '1') return tr->target;
      return std::nullopt;
    };
    for (State q = 0; q < static_cast<State>(t.num_states()); ++q) {
      auto a = one_one(q);
      if (!a) continue;
      if (*a == q) continue;
      auto b = one_one(*a);
      auto c = b ? one_one(*b) : std::nullopt;
      if (!(b && c && *c == q && *b != q))
        fail("(1,1)-transition from state " + std::to_string(q) +
             " is not on a 1-cycle or 3-cycle");
    }
    try {
      inst.validate();
    } catch (const ValidationError& e) {
      fail(e.what());
    }
  }

  if (options.check_order && inst.order) {
    const auto ids = first_traversal_ids(run.trace);
    if (ids != canonical_order(*inst.order)) fail("transition order does not match the trace");
    const int distinct = ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end());
    if (distinct > 2 * inst.k) fail("more than 2K distinct transitions traversed");
  }
  return report;
}

void ThreePartitionInstance::validate() const {
  if (n < 1 || p < 1) throw ValidationError("n and p must be positive");
  if (a.empty()) throw ValidationError("A is empty");
  long long sum = 0;
  for (int v : a) {
    if (v < 1) throw ValidationError("elements of A must be positive");
    sum += v;
  }
  if (sum != static_cast<long long>(p) * n) throw ValidationError("sum of A differs from p*n");
  if (relaxed) return;
  if (a.size() != static_cast<std::size_t>(3 * n)) throw ValidationError("|A| must be 3n");
  for (int v : a)
    if (!(4 * v > p && 2 * v < p)) throw ValidationError("elements must satisfy p/4 < a < p/2");
}

// ---- skeleton completion and search ---------------------------------------

Fst complete_skeleton(const FstSkeleton& skeleton, const Partition& placement) {
  if (!skeleton.rods) throw PackingError("skeleton has no rod layout");
  const RodLayout& rods = *skeleton.rods;
  if (placement.size() != rods.box_start.size())
    throw PackingError("placement must list one part per box");
  std::vector<bool> seen(rods.length.size(), false);
  Fst t = skeleton.partial;
  for (std::size_t b = 0; b < placement.size(); ++b) {
    int fill = 0;
    for (int rod : placement[b]) {
      if (rod < 0 || static_cast<std::size_t>(rod) >= rods.length.size() || seen[static_cast<std::size_t>(rod)])
        throw PackingError("placement uses an unknown or repeated element");
      seen[static_cast<std::size_t>(rod)] = true;
      const int len = rods.length[static_cast<std::size_t>(rod)];
      const State fixed = rods.fixed_start[static_cast<std::size_t>(rod)];
      const State free = rods.box_start[b] + static_cast<State>(fill);
      fill += len;
      if (fill > rods.box_size) break;
      for (int i = 0; i < len; ++i) {
        const State lo = fixed + 2 * static_cast<State>(i);
        t.set(lo + 1, '1', free + static_cast<State>(i), '1');
        t.set(free + static_cast<State>(i), '1', lo, '1');
      }
    }
    if (fill != rods.box_size)
      throw PackingError("part " + std::to_string(b + 1) + " sums to " + std::to_string(fill) +
                         ", box size is " + std::to_string(rods.box_size));
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw PackingError("placement leaves elements unassigned");
  return t;
}

namespace {

class RodSearch {
 public:
  RodSearch(const FstEncodingInstance& inst, const FstSkeleton& skeleton, std::size_t cap)
      : inst_(inst), skeleton_(skeleton), rods_(*skeleton.rods), cap_(cap),
        used_(rods_.length.size(), false), placement_(rods_.box_start.size()) {
    order_.resize(rods_.length.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return rods_.length[static_cast<std::size_t>(a)] > rods_.length[static_cast<std::size_t>(b)];
    });
  }

  EncodingSearchResult run() {
    EncodingSearchResult result;
    if (fill(0, 0)) {
      result.fst = found_;
      result.placement = placement_;
    }
    result.nodes = nodes_;
    return result;
  }

 private:
  bool fill(std::size_t box, int filled) {
    if (++nodes_ > cap_) throw SearchBudgetExceeded("rod search node budget exceeded");
    if (box == placement_.size()) return accept();
    if (filled == rods_.box_size) return fill(box + 1, 0);
    const int room = rods_.box_size - filled;
    for (int rod : order_) {
      const auto r = static_cast<std::size_t>(rod);
      if (used_[r] || rods_.length[r] > room) continue;
      used_[r] = true;
      placement_[box].push_back(rod);
      if (fill(box, filled + rods_.length[r])) return true;
      placement_[box].pop_back();
      used_[r] = false;
    }
    return false;
  }

  bool accept() {
    if (std::find(used_.begin(), used_.end(), false) != used_.end()) return false;
    Fst candidate = complete_skeleton(skeleton_, placement_);
    if (!candidate.is_complete()) return false;
    if (!verify_promises(candidate, inst_)) return false;
    found_ = std::move(candidate);
    return true;
  }

  const FstEncodingInstance& inst_;
  const FstSkeleton& skeleton_;
  const RodLayout& rods_;
  std::size_t cap_;
  std::size_t nodes_ = 0;
  std::vector<bool> used_;
  std::vector<int> order_;
  Partition placement_;
  Fst found_;
};

/// Assigns undefined transitions while transducing S, then enumerates the
/// completions of whatever S never touched.
class LazySearch {
 public:
  LazySearch(const FstEncodingInstance& inst, const Fst& partial, std::size_t cap)
      : inst_(inst), t_(partial), cap_(cap),
        promise_(inst.variant != EncodingVariant::Plain) {
    for (char b : t_.inputs()) {
      auto& in = incoming_[b];
      in.assign(static_cast<std::size_t>(t_.num_states()), 0);
      for (State q = 0; q < static_cast<State>(t_.num_states()); ++q)
        if (const auto& tr = t_.at(q, b)) ++in[tr->target];
    }
  }

  EncodingSearchResult run() {
    EncodingSearchResult result;
    if (t_.num_states() <= inst_.k && walk(0, t_.start())) result.fst = found_;
    result.nodes = nodes_;
    return result;
  }

 private:
  void tick() {
    if (++nodes_ > cap_) throw SearchBudgetExceeded("FST search node budget exceeded");
  }

  bool walk(std::size_t pos, State q) {
    tick();
    if (pos == inst_.input.size()) return complete(0);
    const char b = inst_.input[pos];
    const char want = inst_.output[pos];
    if (const auto& tr = t_.at(q, b)) {
      if (tr->output != want) return false;
      return walk(pos + 1, tr->target);
    }
    if (t_.outputs().find(want) == std::string::npos) return false;
    auto& in = incoming_[b];
    for (State target = 0; target < static_cast<State>(t_.num_states()); ++target) {
      if (promise_ && in[target] > 0) continue;
      t_.set(q, b, target, want);
      ++in[target];
      if (walk(pos + 1, target)) return true;
      --in[target];
      t_.clear(q, b);
    }
    return false;
  }

  bool complete(std::size_t slot) {
    tick();
    const std::size_t slots = static_cast<std::size_t>(t_.num_states()) * t_.inputs().size();
    while (slot < slots) {
      const State q = static_cast<State>(slot / t_.inputs().size());
      const char b = t_.inputs()[slot % t_.inputs().size()];
      if (!t_.at(q, b)) break;
      ++slot;
    }
    if (slot == slots) {
      if (!verify_promises(t_, inst_)) return false;
      found_ = t_;
      return true;
    }
    const State q = static_cast<State>(slot / t_.inputs().size());
    const char b = t_.inputs()[slot % t_.inputs().size()];
    auto& in = incoming_[b];
    // Outputs of transitions S never uses only matter to the modified
    // variant's cycle promise.
    const std::string outs = inst_.variant == EncodingVariant::ModifiedPromise
                                 ? t_.outputs()
                                 : std::string(1, t_.outputs().front());
    for (State target = 0; target < static_cast<State>(t_.num_states()); ++target) {
      if (promise_ && in[target] > 0) continue;
      for (char out : outs) {
        t_.set(q, b, target, out);
        ++in[target];
        if (complete(slot + 1)) return true;
        --in[target];
        t_.clear(q, b);
      }
    }
    return false;
  }

  const FstEncodingInstance& inst_;
  Fst t_;
  std::size_t cap_;
  bool promise_;
  std::size_t nodes_ = 0;
  std::map<char, std::vector<int>> incoming_;
  Fst found_;
};

}  // namespace

EncodingSearchResult solve_encoding_by_search(const FstEncodingInstance& inst,
                                              const FstSkeleton& skeleton,
                                              std::size_t node_cap) {
  if (skeleton.rods) return RodSearch(inst, skeleton, node_cap).run();
  return LazySearch(inst, skeleton.partial, node_cap).run();
}

// ---- files -------------------------------------------------------------------

namespace {

std::vector<std::string> lines_of(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    std::size_t b = 0;
    while (b < line.size() && std::isspace(static_cast<unsigned char>(line[b]))) ++b;
    line.erase(0, b);
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

int to_int(const std::string& s, const char* what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw FormatError(std::string("bad integer for ") + what + ": '" + s + "'");
  }
  if (used != s.size()) throw FormatError(std::string("bad integer for ") + what + ": '" + s + "'");
  return v;
}

std::vector<int> int_list(const std::string& s, const char* what) {
  std::vector<int> out;
  std::istringstream in(s);
  for (std::string item; std::getline(in, item, ',');) out.push_back(to_int(item, what));
  if (out.empty()) throw FormatError(std::string("empty list for ") + what);
  return out;
}

std::string join(const std::vector<int>& v, char sep = ',') {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out.push_back(sep);
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

Fst parse_fst(std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.empty()) throw FormatError("empty FST file");
  std::istringstream head(lines[0]);
  std::string word, states_tok, start_tok;
  head >> word >> states_tok >> start_tok;
  if (word != "fst" || states_tok.rfind("states=", 0) != 0 || start_tok.rfind("start=", 0) != 0)
    throw FormatError("FST header must read: fst states=<K> start=<s>");
  const int states = to_int(states_tok.substr(7), "states");
  const int start = to_int(start_tok.substr(6), "start");
  if (states < 1 || start < 0 || start >= states) throw FormatError("bad FST header values");

  struct Row {
    State from;
    char in;
    State to;
    char out;
  };
  std::vector<Row> rows;
  std::string outputs = "01";
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream ls(lines[i]);
    std::string kw, from, in, arrow, to, out, extra;
    ls >> kw >> from >> in >> arrow >> to >> out;
    if (kw != "trans" || arrow != "->" || in.size() != 1 || out.size() != 1 || (ls >> extra))
      throw FormatError("line " + std::to_string(i + 1) +
                        ": expected trans <state> <in> -> <state> <out>");
    const int f = to_int(from, "state"), g = to_int(to, "state");
    if (f < 0 || f >= states || g < 0 || g >= states)
      throw FormatError("line " + std::to_string(i + 1) + ": state out of range");
    if (in[0] != '0' && in[0] != '1')
      throw FormatError("line " + std::to_string(i + 1) + ": input symbol must be 0 or 1");
    if (out[0] < '0' || out[0] > '2')
      throw FormatError("line " + std::to_string(i + 1) + ": output symbol must be 0, 1 or 2");
    if (out[0] == '2') outputs = "012";
    rows.push_back({static_cast<State>(f), in[0], static_cast<State>(g), out[0]});
  }
  Fst t(states, static_cast<State>(start), "01", outputs);
  for (const auto& r : rows) {
    if (t.at(r.from, r.in)) throw FormatError("duplicate transition");
    t.set(r.from, r.in, r.to, r.out);
  }
  return t;
}

std::string render_fst(const Fst& t) {
  std::ostringstream out;
  out << "fst states=" << t.num_states() << " start=" << t.start() << '\n';
  for (State q = 0; q < static_cast<State>(t.num_states()); ++q)
    for (char b : t.inputs())
      if (const auto& tr = t.at(q, b))
        out << "trans " << q << ' ' << b << " -> " << tr->target << ' ' << tr->output << '\n';
  return out.str();
}

FstEncodingInstance parse_instance(std::string_view text) {
  FstEncodingInstance inst;
  bool have_s = false, have_sp = false, have_k = false, have_variant = false;
  for (const auto& line : lines_of(text)) {
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw FormatError("expected key=value, got '" + line + "'");
    const std::string key = line.substr(0, eq), value = line.substr(eq + 1);
    if (key == "S") {
      inst.input = value;
      have_s = true;
    } else if (key == "S'") {
      inst.output = value;
      have_sp = true;
    } else if (key == "K") {
      inst.k = to_int(value, "K");
      have_k = true;
    } else if (key == "order") {
      inst.order = int_list(value, "order");
    } else if (key == "variant") {
      have_variant = true;
      if (value == "plain") inst.variant = EncodingVariant::Plain;
      else if (value == "promise") inst.variant = EncodingVariant::Promise;
      else if (value == "modified") inst.variant = EncodingVariant::ModifiedPromise;
      else throw FormatError("unknown variant '" + value + "'");
    } else {
      throw FormatError("unknown key '" + key + "'");
    }
  }
  if (!have_s || !have_sp || !have_k) throw FormatError("instance needs S=, S'= and K=");
  if (!have_variant) inst.variant = inst.order ? EncodingVariant::Promise : EncodingVariant::Plain;
  for (char c : inst.input)
    if (c != '0' && c != '1') throw FormatError("S must be over {0,1}");
  for (char c : inst.output)
    if (c < '0' || c > '2') throw FormatError("S' must be over {0,1,2}");
  try {
    inst.validate();
  } catch (const ValidationError& e) {
    throw FormatError(e.what());
  }
  return inst;
}

std::string render_instance(const FstEncodingInstance& inst) {
  std::ostringstream out;
  out << "S=" << inst.input << '\n' << "S'=" << inst.output << '\n' << "K=" << inst.k << '\n';
  if (inst.order) out << "order=" << join(*inst.order) << '\n';
  out << "variant="
      << (inst.variant == EncodingVariant::Plain     ? "plain"
          : inst.variant == EncodingVariant::Promise ? "promise"
                                                     : "modified")
      << '\n';
  return out.str();
}

ThreePartitionFile parse_three_partition(std::string_view text) {
  ThreePartitionFile file;
  bool have_n = false, have_p = false, have_a = false;
  std::istringstream in{std::string(text)};
  for (std::string tok; in >> tok;) {
    if (tok[0] == '#') {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw FormatError("expected key=value, got '" + tok + "'");
    const std::string key = tok.substr(0, eq), value = tok.substr(eq + 1);
    if (key == "n") {
      file.instance.n = to_int(value, "n");
      have_n = true;
    } else if (key == "p") {
      file.instance.p = to_int(value, "p");
      have_p = true;
    } else if (key == "a") {
      file.instance.a = int_list(value, "a");
      have_a = true;
    } else if (key == "relaxed") {
      file.instance.relaxed = to_int(value, "relaxed") != 0;
    } else if (key == "parts") {
      Partition parts;
      std::istringstream ps(value);
      for (std::string part; std::getline(ps, part, ';');) {
        std::vector<int> idx = int_list(part, "parts");
        for (int& i : idx) i -= 1;
        parts.push_back(std::move(idx));
      }
      file.parts = std::move(parts);
    } else {
      throw FormatError("unknown key '" + key + "'");
    }
  }
  if (!have_n || !have_p || !have_a) throw FormatError("3-partition file needs n=, p= and a=");
  return file;
}

std::string render_three_partition(const ThreePartitionFile& file) {
  std::ostringstream out;
  out << "n=" << file.instance.n << " p=" << file.instance.p << " a=" << join(file.instance.a);
  if (file.instance.relaxed) out << " relaxed=1";
  if (file.parts) {
    out << " parts=";
    for (std::size_t b = 0; b < file.parts->size(); ++b) {
      if (b) out << ';';
      std::vector<int> one_based = (*file.parts)[b];
      for (int& i : one_based) i += 1;
      out << join(one_based);
    }
  }
  out << '\n';
  return out.str();
}

}  // namespace pats
