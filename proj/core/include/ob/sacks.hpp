#pragma once

// Sacks condition algebra and the stage construction engine.
//
// A condition is a perfect binary tree in stem-antichain normal form: the
// tree of all nodes comparable with one of finitely many stems, carrying the
// full binary tree above each stem. This form is closed under restriction,
// finite union and the amalgamation formula, and two conditions denote the
// same tree exactly when their stem sets coincide, so extension and the
// split-preserving orders are decidable.
//
// Finite-support products stand in for the countable-support product: any
// single condition's splitting data up to level n touches only coordinates
// up to n.
//
// The stage engine runs one step of the survivor-block construction: it
// enumerates the vector splitting points of the current condition, asks a
// name oracle to reveal candidate antichain blocks avoiding the forbidden
// sets, eliminates candidates in pairing rounds across the other vector
// splits (amalgamating after every round), and collects the survivors. A
// truncated coordinatewise fusion of the resulting chain is provided as the
// finite shadow of the limit condition.

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "ob/clopen.hpp"
#include "ob/lazy.hpp"
#include "ob/node.hpp"

namespace ob {

class PerfectTree {
 public:
  PerfectTree();  // the full tree
  static PerfectTree full();
  static PerfectTree from_stems(std::vector<BinNode> stems);
  static PerfectTree from_branch_set(ClopenSet branches);

  const std::vector<BinNode>& stems() const { return branches_.stems(); }
  const ClopenSet& branch_set() const { return branches_; }
  bool contains(const BinNode& node) const { return branches_.meets(node); }
  bool is_full() const;

  bool operator==(const PerfectTree& other) const = default;

 private:
  ClopenSet branches_;
};

// The n-th splitting level, 0-based: nodes of the tree whose both children
// are in the tree and which have exactly n such nodes strictly below.
// Always has 2^n elements.
BinNodeSet split_set(const PerfectTree& p, std::size_t n);

// p is a stronger condition than q (containment of denoted trees).
bool extends(const PerfectTree& p, const PerfectTree& q);

// extends, and the n-th splitting levels coincide.
bool extends_through(const PerfectTree& p, const PerfectTree& q,
                     std::size_t n);

// The part of p comparable with the node. Throws NotInCondition.
PerfectTree restrict_to(const PerfectTree& p, const BinNode& node);

PerfectTree tree_union(const PerfectTree& a, const PerfectTree& b);

class ProductCondition {
 public:
  ProductCondition() = default;  // full at every coordinate

  PerfectTree at(std::size_t i) const;
  ProductCondition with(std::size_t i, PerfectTree tree) const;
  const std::map<std::size_t, PerfectTree>& entries() const {
    return entries_;
  }
  std::set<std::size_t> support() const;

  bool operator==(const ProductCondition& other) const = default;

 private:
  std::map<std::size_t, PerfectTree> entries_;  // never stores a full tree
};

// A vector splitting point of level L-1: parts[i] lies in the
// (L-1-i)-th splitting level of coordinate i, for i < L.
struct SplitTuple {
  std::vector<BinNode> parts;

  bool operator==(const SplitTuple& other) const = default;
};

// All vector splitting points of level n, in canonical order.
// There are 2^(n(n+1)/2) of them.
std::vector<SplitTuple> vec_splits(const ProductCondition& p, std::size_t n);

// Coordinatewise restriction along the tuple; identity beyond its length.
// Throws InvalidVecSplit when a part is not a node of its coordinate.
ProductCondition restrict_vec(const ProductCondition& p, const SplitTuple& v);

// The amalgamation step: on each coordinate i < |v|, the refined tree joined
// with base's subtrees at the other splitting points of the level matching
// v; the refined condition unchanged beyond. Requires
// refined <= restrict_vec(base, v). The result extends base and restricts
// back to the refined condition along v.
ProductCondition amalgamate(const ProductCondition& base,
                            const ProductCondition& refined,
                            const SplitTuple& v);

bool prod_extends(const ProductCondition& p, const ProductCondition& q);
bool prod_extends_through(const ProductCondition& p, const ProductCondition& q,
                          std::size_t n);

// ---------------------------------------------------------------------------
// Name oracles

struct RevealRequest {
  std::size_t count = 1;
  NodeSet forbidden;        // revealed elements must avoid these
  NodeSet incomparable_to;  // and be incomparable with each of these
};

struct RevealResult {
  ProductCondition condition;  // an extension of the queried condition
  NodeSet revealed;            // an antichain honoring the request
};

// Abstracts a name for an infinite antichain: given a condition, produces an
// extension together with finitely many freshly revealed elements. Revealed
// sets are antichains honoring the request's constraints, and revelations
// persist under further extension.
class NameOracle {
 public:
  virtual ~NameOracle() = default;
  virtual RevealResult decide(const ProductCondition& q,
                              const RevealRequest& request) = 0;
};

// A ground-model set viewed as a name: never strengthens the condition and
// reveals the first enumerated elements satisfying the request. Throws
// Exhausted when the truncation cannot satisfy the request.
class GroundSetOracle final : public NameOracle {
 public:
  GroundSetOracle(LazyNodeSet set, std::size_t probe_depth);
  RevealResult decide(const ProductCondition& q,
                      const RevealRequest& request) override;

 private:
  LazyNodeSet set_;
  std::size_t probe_depth_;
};

// ---------------------------------------------------------------------------
// Stage engine

struct StageOptions {
  // How many fresh reveals stand in for "infinitely many" when a pairing
  // round chooses which pair element to keep.
  std::size_t probe_count = 4;
  // Stage refused when a candidate block would exceed 2^max_log2_block.
  std::size_t max_log2_block = 10;
};

struct PairDecision {
  Node kept;
  Node dropped;
};

struct PairingRound {
  SplitTuple at;
  std::vector<PairDecision> decisions;
};

struct RowRecord {
  SplitTuple vec;
  NodeSet block;  // the candidate antichain revealed for this row
  std::vector<PairingRound> rounds;
  Node survivor;
};

struct StageRecord {
  std::size_t stage = 0;
  std::vector<SplitTuple> vecs;
  std::vector<RowRecord> rows;
  NodeSet survivor_block;
  bool extends_check = false;   // new condition extends the old through
                                // the completed level
  bool post_reveal_ok = false;  // oracle still reveals under the new
                                // condition, avoiding everything committed
};

struct PairReduceResult {
  ProductCondition condition;
  Node survivor;
};

// Eliminates a power-of-two candidate antichain down to one survivor: each
// round pairs the remaining candidates, restricts to the round's vector
// split, asks the oracle to certify (by revealing fresh elements) which pair
// element keeps the revealed set incomparable to it, and amalgamates the
// choice back. split_source, when given, supplies the splitting levels used
// by the amalgamation (the stage engine passes the stage's base condition).
PairReduceResult pair_reduce(const ProductCondition& start,
                             std::span<const SplitTuple> rounds,
                             const NodeSet& candidates, NameOracle& oracle,
                             const NodeSet& incumbents, const NodeSet& forbidden,
                             const StageOptions& options = {},
                             const ProductCondition* split_source = nullptr,
                             std::vector<PairingRound>* trace = nullptr);

struct StageState {
  std::size_t stage = 0;
  ProductCondition condition;
  std::vector<NodeSet> survivor_blocks;  // one block per completed stage
  std::vector<NodeSet> avoid_list;       // indices beyond the list are empty
};

StageState initial_state(ProductCondition start, std::vector<NodeSet> avoid);

// Runs one full stage: per vector split of the next level, reveal a
// candidate block disjoint from the avoid sets through the new stage index
// and incomparable with every committed survivor, then pair-reduce it to one
// survivor. The new condition extends the old through the completed level.
StageState stage_step(const StageState& state, NameOracle& oracle,
                      const StageOptions& options = {},
                      StageRecord* record = nullptr);

// ---------------------------------------------------------------------------
// Truncated fusion

struct FusedProduct {
  std::map<std::size_t, BinNodeSet> coords;
  std::size_t depth = 0;
};

// Coordinatewise intersection of the chain's denoted trees, truncated below
// the depth. Verifies the fusion precondition (each condition extends its
// predecessor through the predecessor's index) and throws NotAFusionSequence
// naming the first level where it fails.
FusedProduct fuse(std::span<const ProductCondition> seq, std::size_t depth);

BinNodeSet truncated_tree(const PerfectTree& p, std::size_t depth);

// Splitting nodes of a truncated tree with exactly `index` splitting nodes
// strictly below; exact for splits that are decided inside the truncation.
BinNodeSet splits_in_truncation(const BinNodeSet& tree, std::size_t index);

// Every represented node extends to a represented split or to the last
// represented level.
bool perfect_within_depth(const BinNodeSet& tree, std::size_t depth);

}  // namespace ob
