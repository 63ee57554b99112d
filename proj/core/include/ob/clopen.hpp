#pragma once

// Clopen subsets of the branch space of the binary tree, in stem-antichain
// normal form: a finite antichain of stems, fully reduced (no two sibling
// stems both present; such a pair merges into its parent). Two clopen sets denote
// the same set of branches exactly when their normal forms are structurally
// equal, so equality is decidable and canonical.
//
// The cone through stem s has measure 1/2^len(s); a canonical set's measure
// is the disjoint sum over its stems.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ob/dyadic.hpp"
#include "ob/node.hpp"

namespace ob {

// Reduces an arbitrary stem list to normal form: drop non-minimal stems,
// then merge sibling pairs upward to fixpoint.
std::vector<BinNode> canonical_stems(std::vector<BinNode> stems);

class ClopenSet {
 public:
  ClopenSet() = default;  // empty set

  static ClopenSet interval(const BinNode& stem);
  static ClopenSet whole();
  static ClopenSet from_stems(std::vector<BinNode> stems);

  const std::vector<BinNode>& stems() const { return stems_; }
  bool empty() const { return stems_.empty(); }

  // True iff the whole cone through the node is contained in this set.
  bool covers(const BinNode& node) const;
  // True iff the node's cone meets this set (equivalently: the node is
  // comparable with some stem).
  bool meets(const BinNode& node) const;

  Dyadic measure() const;

  bool operator==(const ClopenSet& other) const = default;

 private:
  std::vector<BinNode> stems_;  // canonical: shortlex-sorted reduced antichain
};

ClopenSet unite(const ClopenSet& a, const ClopenSet& b);
ClopenSet intersect(const ClopenSet& a, const ClopenSet& b);
ClopenSet subtract(const ClopenSet& a, const ClopenSet& b);

// Union of the cones through f(k) for n <= k < N. Requires n <= N <= f.size.
ClopenSet window_union(std::span<const BinNode> f, std::size_t n,
                       std::size_t N);

// Measures of the shrinking windows [n, N) for n = 0..N. Entries are
// nonincreasing in n; their decay toward 0 is the finite-window shadow of the
// vanishing intersection of the tails.
std::vector<std::pair<std::size_t, Dyadic>> tail_decay_table(
    std::span<const BinNode> f, std::size_t N);

struct WindowBound {
  Dyadic lhs;  // measure of the union of parent cones over the window
  Dyadic rhs;  // twice the window union's measure
  bool holds;  // lhs <= rhs; true for every input
};

WindowBound parent_window_bound(std::span<const BinNode> f, std::size_t n,
                                std::size_t N);

// q with the window's union removed.
ClopenSet shrink_against_window(const ClopenSet& q, std::span<const BinNode> f,
                                std::size_t n, std::size_t N);

}  // namespace ob
