#pragma once

// Possibly-infinite node sets given by a membership predicate plus a
// level-bounded enumerator, and finite families of labeled members.
//
// Enumerators are exact for members that are intrinsically enumerable
// (explicit lists, branch prefixes, hairs, the zeros-then-one antichain,
// block-code images). A full level of the finitely-branching tree is
// infinite, so the level kind additionally carries a coordinate width
// (defaulting to the probe depth); that window is the desk-scale universe
// for such members.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ob/branch.hpp"
#include "ob/node.hpp"

namespace ob {

struct LazyNodeSet {
  std::function<bool(const Node&)> contains;
  std::function<NodeSet(std::size_t depth)> enumerate_upto;
  bool claims_infinite = false;
};

LazyNodeSet explicit_set(NodeSet nodes);
LazyNodeSet level_set(std::size_t n, std::optional<std::size_t> width = {});
LazyNodeSet branch_prefix_set(PeriodicBranch branch);
LazyNodeSet branch_hair_set(PeriodicBranch branch);
// The binary antichain {0^n 1 : n}.
LazyNodeSet zeros_then_one_set();
// Image of a member under the unary-block code into the binary tree.
LazyNodeSet block_image_set(LazyNodeSet base);

struct FamilyMember {
  std::string label;
  LazyNodeSet set;
};

struct Family {
  std::vector<FamilyMember> members;

  const FamilyMember* find(const std::string& label) const;
};

// All nodes with level < depth and every coordinate < width.
NodeSet grid_nodes(std::size_t depth, std::size_t width);

// Canonical enumeration of all nodes: ordered by weight
// max(level, max_coord + 1), then by length, then lexicographically.
// The first node is the root.
std::vector<Node> canonical_nodes(std::size_t count);

// Enough canonical indices to exhaust grid_nodes(depth, width).
std::size_t canonical_count_for_grid(std::size_t depth, std::size_t width);

// Desk-scale infinitude evidence for a truncation at the given depth:
// at least depth/2 elements, or one element in the top third of levels.
bool looks_infinite(const NodeSet& truncation, std::size_t depth);

// Top-third test shared by the infinitude threshold and overlap verdicts.
bool in_top_third(std::size_t level, std::size_t depth);

}  // namespace ob
