#include "ob/branch.hpp"

#include <numeric>

namespace ob {

PeriodicBranch::PeriodicBranch(Node stem, Node period)
    : stem_(std::move(stem)), period_(std::move(period)) {
  if (period_.empty())
    throw Error(Errc::InvalidInput, "branch period must be nonempty");
}

unsigned PeriodicBranch::value_at(std::size_t i) const {
  if (i < stem_.length()) return stem_[i];
  return period_[(i - stem_.length()) % period_.length()];
}

Node PeriodicBranch::node_at(std::size_t n) const {
  std::vector<unsigned> coords;
  coords.reserve(n);
  for (std::size_t i = 0; i < n; ++i) coords.push_back(value_at(i));
  return Node(std::move(coords));
}

PeriodicBranch PeriodicBranch::through(unsigned n) {
  return PeriodicBranch(Node({n}), Node({0}));
}

bool eventually_dominates(const PeriodicBranch& f, const PeriodicBranch& g) {
  std::size_t start = std::max(f.stem().length(), g.stem().length());
  std::size_t window = std::lcm(f.period().length(), g.period().length());
  for (std::size_t i = start; i < start + window; ++i)
    if (g.value_at(i) <= f.value_at(i)) return false;
  return true;
}

}  // namespace ob
