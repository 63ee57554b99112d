#include "ob/sacks.hpp"

#include <algorithm>

#include "ob/errors.hpp"

namespace ob {

// --- conditions -------------------------------------------------------------

PerfectTree::PerfectTree() : branches_(ClopenSet::whole()) {}

PerfectTree PerfectTree::full() { return PerfectTree(); }

PerfectTree PerfectTree::from_stems(std::vector<BinNode> stems) {
  return from_branch_set(ClopenSet::from_stems(std::move(stems)));
}

PerfectTree PerfectTree::from_branch_set(ClopenSet branches) {
  if (branches.empty())
    throw Error(Errc::InvalidInput, "a condition needs at least one stem");
  PerfectTree p;
  p.branches_ = std::move(branches);
  return p;
}

bool PerfectTree::is_full() const {
  return branches_.stems().size() == 1 && branches_.stems()[0].empty();
}

namespace {

// Walks down from a node of p to the first splitting node at or above it.
BinNode first_split_from(const PerfectTree& p, BinNode at) {
  while (true) {
    bool in_cone = false;
    for (const BinNode& stem : p.stems())
      if (is_prefix(stem, at)) {
        in_cone = true;
        break;
      }
    if (in_cone) return at;  // the full tree above a stem splits everywhere
    BinNode left = at.child(0);
    BinNode right = at.child(1);
    bool has_left = p.contains(left);
    bool has_right = p.contains(right);
    if (has_left && has_right) return at;
    at = has_left ? left : right;
  }
}

}  // namespace

BinNodeSet split_set(const PerfectTree& p, std::size_t n) {
  BinNodeSet current = {first_split_from(p, BinNode{})};
  for (std::size_t i = 0; i < n; ++i) {
    BinNodeSet next;
    for (const BinNode& s : current) {
      next.insert(first_split_from(p, s.child(0)));
      next.insert(first_split_from(p, s.child(1)));
    }
    current = std::move(next);
  }
  return current;
}

bool extends(const PerfectTree& p, const PerfectTree& q) {
  return subtract(p.branch_set(), q.branch_set()).empty();
}

bool extends_through(const PerfectTree& p, const PerfectTree& q,
                     std::size_t n) {
  return extends(p, q) && split_set(p, n) == split_set(q, n);
}

PerfectTree restrict_to(const PerfectTree& p, const BinNode& node) {
  if (!p.contains(node))
    throw Error(Errc::NotInCondition,
                "node " + node.str() + " outside the condition");
  return PerfectTree::from_branch_set(
      intersect(p.branch_set(), ClopenSet::interval(node)));
}

PerfectTree tree_union(const PerfectTree& a, const PerfectTree& b) {
  return PerfectTree::from_branch_set(unite(a.branch_set(), b.branch_set()));
}

PerfectTree ProductCondition::at(std::size_t i) const {
  auto it = entries_.find(i);
  return it == entries_.end() ? PerfectTree::full() : it->second;
}

ProductCondition ProductCondition::with(std::size_t i,
                                        PerfectTree tree) const {
  ProductCondition out = *this;
  if (tree.is_full())
    out.entries_.erase(i);
  else
    out.entries_.insert_or_assign(i, std::move(tree));
  return out;
}

std::set<std::size_t> ProductCondition::support() const {
  std::set<std::size_t> out;
  for (const auto& [i, tree] : entries_) out.insert(i);
  return out;
}

std::vector<SplitTuple> vec_splits(const ProductCondition& p, std::size_t n) {
  std::vector<std::vector<BinNode>> choices;
  for (std::size_t i = 0; i <= n; ++i) {
    BinNodeSet level = split_set(p.at(i), n - i);
    choices.emplace_back(level.begin(), level.end());
  }
  std::vector<SplitTuple> out;
  std::vector<std::size_t> index(choices.size(), 0);
  while (true) {
    SplitTuple v;
    v.parts.reserve(choices.size());
    for (std::size_t i = 0; i < choices.size(); ++i)
      v.parts.push_back(choices[i][index[i]]);
    out.push_back(std::move(v));
    std::size_t i = choices.size();
    while (i > 0) {
      --i;
      if (++index[i] < choices[i].size()) break;
      index[i] = 0;
      if (i == 0) return out;
    }
  }
}

ProductCondition restrict_vec(const ProductCondition& p, const SplitTuple& v) {
  ProductCondition out = p;
  for (std::size_t i = 0; i < v.parts.size(); ++i) {
    if (!p.at(i).contains(v.parts[i]))
      throw Error(Errc::InvalidVecSplit,
                  "part " + v.parts[i].str() + " outside coordinate " +
                      std::to_string(i));
    out = out.with(i, restrict_to(p.at(i), v.parts[i]));
  }
  return out;
}

namespace {

// Amalgamation with an explicit source for the splitting levels; the public
// op reads them from its own base, the stage engine from the stage base.
ProductCondition amalgamate_over(const ProductCondition& base,
                                 const ProductCondition& refined,
                                 const SplitTuple& v,
                                 const ProductCondition& split_source) {
  if (!prod_extends(refined, restrict_vec(base, v)))
    throw Error(Errc::PreconditionViolated,
                "amalgamation input does not refine the restricted base");
  std::size_t length = v.parts.size();
  ProductCondition out = refined;
  for (std::size_t i = 0; i < length; ++i) {
    PerfectTree joined = refined.at(i);
    for (const BinNode& s :
         split_set(split_source.at(i), length - 1 - i)) {
      if (s == v.parts[i]) continue;
      joined = tree_union(joined, restrict_to(base.at(i), s));
    }
    out = out.with(i, joined);
  }
  return out;
}

}  // namespace

ProductCondition amalgamate(const ProductCondition& base,
                            const ProductCondition& refined,
                            const SplitTuple& v) {
  return amalgamate_over(base, refined, v, base);
}

bool prod_extends(const ProductCondition& p, const ProductCondition& q) {
  std::set<std::size_t> coords = p.support();
  for (std::size_t i : q.support()) coords.insert(i);
  for (std::size_t i : coords)
    if (!extends(p.at(i), q.at(i))) return false;
  return true;
}

bool prod_extends_through(const ProductCondition& p, const ProductCondition& q,
                          std::size_t n) {
  return prod_extends(p, q) && vec_splits(p, n) == vec_splits(q, n);
}

// --- oracles ----------------------------------------------------------------

GroundSetOracle::GroundSetOracle(LazyNodeSet set, std::size_t probe_depth)
    : set_(std::move(set)), probe_depth_(probe_depth) {}

RevealResult GroundSetOracle::decide(const ProductCondition& q,
                                     const RevealRequest& request) {
  RevealResult result;
  result.condition = q;
  for (const Node& candidate : set_.enumerate_upto(probe_depth_)) {
    if (result.revealed.size() == request.count) break;
    if (request.forbidden.count(candidate)) continue;
    bool clashes = false;
    for (const Node& fixed : request.incomparable_to)
      if (comparable(candidate, fixed)) {
        clashes = true;
        break;
      }
    if (!clashes) result.revealed.insert(candidate);
  }
  if (result.revealed.size() < request.count)
    throw Error(Errc::OracleExhausted,
                "ground set ran out at " +
                    std::to_string(result.revealed.size()) + " of " +
                    std::to_string(request.count) + " requested elements");
  return result;
}

namespace {

RevealResult checked_decide(NameOracle& oracle, const ProductCondition& q,
                            const RevealRequest& request) {
  RevealResult result = oracle.decide(q, request);
  if (!prod_extends(result.condition, q))
    throw Error(Errc::OracleContractViolated,
                "oracle weakened the condition");
  if (result.revealed.size() != request.count)
    throw Error(Errc::OracleContractViolated,
                "oracle revealed " + std::to_string(result.revealed.size()) +
                    " elements, requested " + std::to_string(request.count));
  if (!is_antichain(result.revealed))
    throw Error(Errc::OracleContractViolated, "revealed set is not an antichain");
  for (const Node& r : result.revealed) {
    if (request.forbidden.count(r))
      throw Error(Errc::OracleContractViolated,
                  "revealed forbidden element " + r.str());
    for (const Node& fixed : request.incomparable_to)
      if (comparable(r, fixed))
        throw Error(Errc::OracleContractViolated,
                    "revealed " + r.str() + " comparable with " + fixed.str());
  }
  return result;
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

// --- stage engine -----------------------------------------------------------

PairReduceResult pair_reduce(const ProductCondition& start,
                             std::span<const SplitTuple> rounds,
                             const NodeSet& candidates, NameOracle& oracle,
                             const NodeSet& incumbents,
                             const NodeSet& forbidden,
                             const StageOptions& options,
                             const ProductCondition* split_source,
                             std::vector<PairingRound>* trace) {
  if (!is_power_of_two(candidates.size()))
    throw Error(Errc::NotPowerOfTwo, "candidate block of size " +
                                         std::to_string(candidates.size()));
  if (!is_antichain(candidates))
    throw Error(Errc::PreconditionViolated, "candidate block is not an antichain");
  for (const Node& c : candidates)
    for (const Node& fixed : incumbents)
      if (comparable(c, fixed))
        throw Error(Errc::PreconditionViolated,
                    "candidate " + c.str() + " comparable with incumbent " +
                        fixed.str());

  std::vector<Node> current(candidates.begin(), candidates.end());
  ProductCondition condition = start;
  std::size_t round_index = 0;
  while (current.size() > 1) {
    if (round_index >= rounds.size())
      throw Error(Errc::PreconditionViolated,
                  "not enough pairing rounds for the candidate block");
    const SplitTuple& v = rounds[round_index];
    ProductCondition refined = restrict_vec(condition, v);
    PairingRound round_trace;
    round_trace.at = v;
    std::vector<Node> winners;
    winners.reserve(current.size() / 2);
    for (std::size_t pair = 0; pair + 1 < current.size(); pair += 2) {
      const Node& first = current[pair];
      const Node& second = current[pair + 1];
      RevealRequest request;
      request.count = options.probe_count;
      request.forbidden = forbidden;
      request.incomparable_to = incumbents;
      request.incomparable_to.insert(first);
      bool kept_first = true;
      try {
        refined = checked_decide(oracle, refined, request).condition;
      } catch (const Error& err) {
        if (err.code() != Errc::OracleExhausted) throw;
        kept_first = false;
        request.incomparable_to.erase(first);
        request.incomparable_to.insert(second);
        try {
          refined = checked_decide(oracle, refined, request).condition;
        } catch (const Error& inner) {
          if (inner.code() != Errc::OracleExhausted) throw;
          throw Error(Errc::OracleContractViolated,
                      "oracle keeps nothing incomparable to either of " +
                          first.str() + ", " + second.str());
        }
      }
      winners.push_back(kept_first ? first : second);
      round_trace.decisions.push_back(kept_first
                                          ? PairDecision{first, second}
                                          : PairDecision{second, first});
    }
    condition = amalgamate_over(condition, refined, v,
                                split_source ? *split_source : condition);
    if (trace) trace->push_back(std::move(round_trace));
    current = std::move(winners);
    ++round_index;
  }
  return {condition, current.front()};
}

StageState initial_state(ProductCondition start, std::vector<NodeSet> avoid) {
  StageState state;
  state.stage = 0;
  state.condition = std::move(start);
  state.survivor_blocks = {NodeSet{}};
  state.avoid_list = std::move(avoid);
  return state;
}

StageState stage_step(const StageState& state, NameOracle& oracle,
                      const StageOptions& options, StageRecord* record) {
  std::size_t next = state.stage + 1;
  std::size_t log2_count = next * (next + 1) / 2;
  if (log2_count > 20 ||
      (std::size_t{1} << log2_count) - 1 > options.max_log2_block)
    throw Error(Errc::BudgetExceeded,
                "stage " + std::to_string(next) + " needs blocks of size 2^" +
                    std::to_string((std::size_t{1} << std::min<std::size_t>(
                                        log2_count, 20)) -
                                   1));

  std::vector<SplitTuple> vecs = vec_splits(state.condition, next);
  std::size_t k = vecs.size() - 1;

  NodeSet forbidden;
  for (std::size_t i = 0; i <= next && i < state.avoid_list.size(); ++i)
    forbidden.insert(state.avoid_list[i].begin(), state.avoid_list[i].end());
  NodeSet committed;
  for (const NodeSet& block : state.survivor_blocks)
    committed.insert(block.begin(), block.end());

  if (record) {
    *record = StageRecord{};
    record->stage = next;
    record->vecs = vecs;
  }

  ProductCondition condition = state.condition;
  NodeSet survivors;
  for (std::size_t row = 0; row <= k; ++row) {
    NodeSet incumbents = committed;
    incumbents.insert(survivors.begin(), survivors.end());

    ProductCondition restricted = restrict_vec(condition, vecs[row]);
    RevealRequest request;
    request.count = std::size_t{1} << k;
    request.forbidden = forbidden;
    request.incomparable_to = incumbents;
    RevealResult revealed;
    try {
      revealed = checked_decide(oracle, restricted, request);
    } catch (const Error& err) {
      if (err.code() != Errc::OracleExhausted) throw;
      throw Error(Errc::OracleContractViolated,
                  std::string("oracle cannot supply a candidate block: ") +
                      err.what());
    }
    condition =
        amalgamate_over(condition, revealed.condition, vecs[row],
                        state.condition);

    std::vector<SplitTuple> other_rounds;
    other_rounds.reserve(k);
    for (std::size_t j = 0; j <= k; ++j)
      if (j != row) other_rounds.push_back(vecs[j]);

    RowRecord row_record;
    PairReduceResult reduced = pair_reduce(
        condition, other_rounds, revealed.revealed, oracle, incumbents,
        forbidden, options, &state.condition,
        record ? &row_record.rounds : nullptr);
    condition = reduced.condition;
    survivors.insert(reduced.survivor);

    if (record) {
      row_record.vec = vecs[row];
      row_record.block = revealed.revealed;
      row_record.survivor = reduced.survivor;
      record->rows.push_back(std::move(row_record));
    }
  }

  StageState out;
  out.stage = next;
  out.condition = condition;
  out.survivor_blocks = state.survivor_blocks;
  out.survivor_blocks.push_back(survivors);
  out.avoid_list = state.avoid_list;

  if (record) {
    record->survivor_block = survivors;
    record->extends_check =
        prod_extends_through(out.condition, state.condition, state.stage);
    RevealRequest probe;
    probe.count = options.probe_count;
    probe.forbidden = forbidden;
    probe.incomparable_to = committed;
    probe.incomparable_to.insert(survivors.begin(), survivors.end());
    try {
      checked_decide(oracle, out.condition, probe);
      record->post_reveal_ok = true;
    } catch (const Error& err) {
      if (err.code() != Errc::OracleExhausted) throw;
      record->post_reveal_ok = false;
    }
  }
  return out;
}

// --- truncated fusion ---------------------------------------------------

BinNodeSet truncated_tree(const PerfectTree& p, std::size_t depth) {
  BinNodeSet out;
  std::vector<BinNode> frontier = {BinNode{}};
  while (!frontier.empty()) {
    std::vector<BinNode> next;
    for (const BinNode& node : frontier) {
      if (node.length() >= depth || !p.contains(node)) continue;
      out.insert(node);
      next.push_back(node.child(0));
      next.push_back(node.child(1));
    }
    frontier = std::move(next);
  }
  return out;
}

FusedProduct fuse(std::span<const ProductCondition> seq, std::size_t depth) {
  if (seq.empty())
    throw Error(Errc::InvalidInput, "fusion of an empty sequence");
  for (std::size_t m = 0; m + 1 < seq.size(); ++m)
    if (!prod_extends_through(seq[m + 1], seq[m], m))
      throw FusionError(m, "chain breaks at level " + std::to_string(m));

  std::set<std::size_t> coords;
  for (std::size_t i = 0; i < seq.size(); ++i) coords.insert(i);
  for (const ProductCondition& p : seq)
    for (std::size_t i : p.support()) coords.insert(i);

  FusedProduct fused;
  fused.depth = depth;
  for (std::size_t i : coords) {
    BinNodeSet tree = truncated_tree(seq.front().at(i), depth);
    for (std::size_t m = 1; m < seq.size(); ++m) {
      BinNodeSet other = truncated_tree(seq[m].at(i), depth);
      BinNodeSet kept;
      for (const BinNode& node : tree)
        if (other.count(node)) kept.insert(node);
      tree = std::move(kept);
    }
    fused.coords.emplace(i, std::move(tree));
  }
  return fused;
}

BinNodeSet splits_in_truncation(const BinNodeSet& tree, std::size_t index) {
  BinNodeSet splits;
  for (const BinNode& node : tree)
    if (tree.count(node.child(0)) && tree.count(node.child(1)))
      splits.insert(node);
  BinNodeSet out;
  for (const BinNode& s : splits) {
    std::size_t below = 0;
    for (const BinNode& other : splits)
      if (other != s && is_prefix(other, s)) ++below;
    if (below == index) out.insert(s);
  }
  return out;
}

bool perfect_within_depth(const BinNodeSet& tree, std::size_t depth) {
  for (const BinNode& node : tree) {
    if (!node.empty() && !tree.count(parent(node))) return false;
    bool witnessed = false;
    for (const BinNode& above : tree) {
      if (!is_prefix(node, above)) continue;
      if (above.length() + 1 == depth ||
          (tree.count(above.child(0)) && tree.count(above.child(1)))) {
        witnessed = true;
        break;
      }
    }
    if (!witnessed) return false;
  }
  return true;
}

}  // namespace ob
