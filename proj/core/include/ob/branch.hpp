#pragma once

// Eventually periodic branches of the finitely-branching tree: a finite stem
// followed by a nonempty period repeated forever. Membership, truncation and
// eventual domination are exactly decidable on this representation.

#include <cstddef>

#include "ob/node.hpp"

namespace ob {

class PeriodicBranch {
 public:
  PeriodicBranch(Node stem, Node period);

  unsigned value_at(std::size_t i) const;
  // First n values of the branch, as a node.
  Node node_at(std::size_t n) const;

  const Node& stem() const { return stem_; }
  const Node& period() const { return period_; }

  // The canonical branch through ⟨n⟩: stem ⟨n⟩, period ⟨0⟩.
  static PeriodicBranch through(unsigned n);

  bool operator==(const PeriodicBranch& other) const = default;

 private:
  Node stem_;
  Node period_;
};

// Decides eventual domination f <* g: whether {n : g(n) <= f(n)} is finite.
// Exact: beyond both stems the pair of value streams is periodic with period
// lcm(|period_f|, |period_g|), so one full window decides the tail.
bool eventually_dominates(const PeriodicBranch& f, const PeriodicBranch& g);

}  // namespace ob
