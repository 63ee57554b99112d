#pragma once

// Off-branch and almost-disjoint family machinery: pullbacks along the
// identity and the unary-block code, decomposition blocks, refinement of a
// decomposition over a member, the translation between node sets and
// (branch, height) column pairs, and finite-evidence reports.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ob/blockcode.hpp"
#include "ob/branch.hpp"
#include "ob/lazy.hpp"
#include "ob/node.hpp"

namespace ob {

// Family transforms keep only members that still look infinite at the probe
// depth; everything else is dropped and reported, never silently.
struct FamilyOutcome {
  Family family;
  std::vector<std::string> dropped;
};

// Members become their restrictions to the binary tree.
FamilyOutcome pullback_identity(const Family& family, std::size_t depth);

// Members of a binary family become their preimages under the block code.
FamilyOutcome pullback_pi(const Family& family, std::size_t depth);

// Block n of the decomposition induced by the member list f and the node
// enumeration g, truncated below the depth:
//   block(n) = ({g(n)} ∪ f(n)) ∖ ∪_{k<n} ({g(k)} ∪ f(k)).
// Blocks are pairwise disjoint and their union over all n covers every node.
// g must provide at least n+1 entries. Throws IndexOutOfRange for
// n >= f.size().
NodeSet decomposition_block(const std::vector<LazyNodeSet>& f,
                            std::span<const Node> g, std::size_t n,
                            std::size_t depth);

// Same with the canonical enumeration.
NodeSet decomposition_block(const std::vector<LazyNodeSet>& f, std::size_t n,
                            std::size_t depth);

// Every block, in order, until the canonical enumeration has exhausted
// grid_nodes(depth, width); members beyond the list are treated as empty so
// the blocks partition the grid.
std::vector<NodeSet> decomposition_cover(const std::vector<LazyNodeSet>& f,
                                         std::size_t depth, std::size_t width);

// Members of the decomposition intersected with a, keeping those whose
// truncated intersection still looks infinite.
FamilyOutcome restrict_family(const Family& decomposition, const LazyNodeSet& a,
                              std::size_t depth);

using ColumnPair = std::pair<std::size_t, std::size_t>;
using PairSet = std::set<ColumnPair>;

// {(n, i) : i < depth, branches[n] passes through a node of the set at
// height i}. Every branch must pass through ⟨n⟩ at its first level.
PairSet to_branch_columns(const LazyNodeSet& set,
                          std::span<const PeriodicBranch> branches,
                          std::size_t depth);

// The nodes named by the pairs; distinct pairs may collapse only at height 0.
NodeSet from_branch_columns(const PairSet& pairs,
                            std::span<const PeriodicBranch> branches);

// Largest number of pairs sharing one column; <= 1 certifies the
// at-most-once column constraint.
std::size_t column_multiplicity(const PairSet& pairs);

std::vector<PeriodicBranch> default_branches(std::size_t count);

enum class Verdict { ConsistentWithAd, ChainFound, Inconclusive };

const char* verdict_name(Verdict v);

struct OverlapReport {
  std::size_t overlap_count = 0;
  std::optional<std::size_t> last_hit_level;
  std::size_t depth_checked = 0;
  Verdict verdict = Verdict::ConsistentWithAd;
  std::size_t chain_length = 0;  // meaningful for off-branch reports
};

// Finite evidence that a and b are almost disjoint: the truncated overlap
// and whether it keeps growing in the top third of probed levels.
OverlapReport ad_report(const LazyNodeSet& a, const LazyNodeSet& b,
                        std::size_t depth);

// Finite evidence that a is off-branch: a is off-branch exactly when it has
// no infinite chain, so a long chain in the truncation is evidence against.
OverlapReport off_branch_report(const LazyNodeSet& a, std::size_t depth,
                                std::size_t chain_threshold = 4);

}  // namespace ob
