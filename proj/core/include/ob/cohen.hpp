#pragma once

// Cohen forcing over the finitely-branching tree ordered by end-extension:
// a condition is a node, and a stronger condition is a longer one. For a
// finite off-branch target A, the dense open set D_A holds the conditions
// none of whose extensions right-shift into A; meeting D_A for every target
// pins the hair of the resulting generic stem away from each A except below
// the witness.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ob/node.hpp"

namespace ob {

struct DenseTarget {
  std::string label;
  NodeSet nodes;  // exact truncation of the intended set
};

// Membership in D_A: no element of the target, read back one right-shift,
// extends the condition. For finite targets this decides the full
// quantifier over all extensions.
bool in_dense_set(const Node& condition, const NodeSet& target);

// Density witness: append one coordinate larger than every coordinate
// occurring in the target. Any target element keeps all coordinates below
// the appended one, so its left shift cannot extend the result.
Node extend_into_dense(const Node& condition, const NodeSet& target);

struct GenericRun {
  std::vector<Node> chain;  // strictly descending, chain.front() = start
  Node stem;                // last element of the chain
  // Per target, the level at which its dense set was entered.
  std::vector<std::pair<std::string, std::size_t>> met;
};

// Meets every target's dense set in list order, recording entry levels.
GenericRun run_generic(const Node& start,
                       const std::vector<DenseTarget>& targets);

struct HairRecord {
  std::string label;
  NodeSet intersection;  // hair of the stem ∩ target
  bool bound_ok;         // every hit sits at or below the witness level
};

// Must be called with the same targets the run was produced from.
std::vector<HairRecord> hair_report(const GenericRun& run,
                                    const std::vector<DenseTarget>& targets);

}  // namespace ob
