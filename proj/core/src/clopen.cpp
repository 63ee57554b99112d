#include "ob/clopen.hpp"

#include <algorithm>

#include "ob/errors.hpp"

namespace ob {

namespace {

// [stem] minus the union of the cones through cut; emits surviving stems.
void subtract_cone(const BinNode& stem, const std::vector<BinNode>& cuts,
                   std::vector<BinNode>& out) {
  std::vector<BinNode> below;
  for (const BinNode& cut : cuts) {
    if (is_prefix(cut, stem)) return;  // the whole cone is removed
    if (is_prefix(stem, cut)) below.push_back(cut);
  }
  if (below.empty()) {
    out.push_back(stem);
    return;
  }
  subtract_cone(stem.child(0), below, out);
  subtract_cone(stem.child(1), below, out);
}

}  // namespace

std::vector<BinNode> canonical_stems(std::vector<BinNode> stems) {
  BinNodeSet set(stems.begin(), stems.end());
  set = minimal_elements(set);
  // Sibling merge to fixpoint; a merge can enable another one level up.
  bool merged = true;
  while (merged) {
    merged = false;
    for (const BinNode& s : set) {
      if (s.empty()) continue;
      BinNode sib = flip_last(s);
      if (set.count(sib)) {
        BinNode up = parent(s);
        set.erase(s);
        set.erase(sib);
        set.insert(up);
        merged = true;
        break;
      }
    }
  }
  return {set.begin(), set.end()};
}

ClopenSet ClopenSet::interval(const BinNode& stem) {
  ClopenSet c;
  c.stems_ = {stem};
  return c;
}

ClopenSet ClopenSet::whole() { return interval(BinNode{}); }

ClopenSet ClopenSet::from_stems(std::vector<BinNode> stems) {
  ClopenSet c;
  c.stems_ = canonical_stems(std::move(stems));
  return c;
}

bool ClopenSet::covers(const BinNode& node) const {
  return subtract(interval(node), *this).empty();
}

bool ClopenSet::meets(const BinNode& node) const {
  for (const BinNode& s : stems_)
    if (comparable(s, node)) return true;
  return false;
}

Dyadic ClopenSet::measure() const {
  Dyadic total;
  for (const BinNode& s : stems_)
    total = total + Dyadic::half_power(static_cast<unsigned>(s.length()));
  return total;
}

ClopenSet unite(const ClopenSet& a, const ClopenSet& b) {
  std::vector<BinNode> stems = a.stems();
  stems.insert(stems.end(), b.stems().begin(), b.stems().end());
  return ClopenSet::from_stems(std::move(stems));
}

ClopenSet intersect(const ClopenSet& a, const ClopenSet& b) {
  std::vector<BinNode> stems;
  for (const BinNode& sa : a.stems())
    for (const BinNode& sb : b.stems()) {
      if (is_prefix(sa, sb))
        stems.push_back(sb);
      else if (is_prefix(sb, sa))
        stems.push_back(sa);
    }
  return ClopenSet::from_stems(std::move(stems));
}

ClopenSet subtract(const ClopenSet& a, const ClopenSet& b) {
  std::vector<BinNode> stems;
  for (const BinNode& sa : a.stems()) subtract_cone(sa, b.stems(), stems);
  return ClopenSet::from_stems(std::move(stems));
}

ClopenSet window_union(std::span<const BinNode> f, std::size_t n,
                       std::size_t N) {
  if (n > N || N > f.size())
    throw Error(Errc::WindowOutOfRange,
                "window [" + std::to_string(n) + "," + std::to_string(N) +
                    ") over a list of length " + std::to_string(f.size()));
  std::vector<BinNode> stems(f.begin() + n, f.begin() + N);
  return ClopenSet::from_stems(std::move(stems));
}

std::vector<std::pair<std::size_t, Dyadic>> tail_decay_table(
    std::span<const BinNode> f, std::size_t N) {
  std::vector<std::pair<std::size_t, Dyadic>> table;
  table.reserve(N + 1);
  for (std::size_t n = 0; n <= N; ++n)
    table.emplace_back(n, window_union(f, n, N).measure());
  return table;
}

WindowBound parent_window_bound(std::span<const BinNode> f, std::size_t n,
                                std::size_t N) {
  ClopenSet window = window_union(f, n, N);
  std::vector<BinNode> parents;
  parents.reserve(N - n);
  for (std::size_t k = n; k < N; ++k) parents.push_back(parent(f[k]));
  WindowBound out;
  out.lhs = ClopenSet::from_stems(std::move(parents)).measure();
  out.rhs = window.measure().doubled();
  out.holds = out.lhs <= out.rhs;
  return out;
}

ClopenSet shrink_against_window(const ClopenSet& q, std::span<const BinNode> f,
                                std::size_t n, std::size_t N) {
  return subtract(q, window_union(f, n, N));
}

}  // namespace ob
