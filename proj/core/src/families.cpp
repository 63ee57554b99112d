#include "ob/families.hpp"

#include <algorithm>

#include "ob/errors.hpp"

namespace ob {

namespace {

FamilyOutcome transform_members(
    const Family& family, std::size_t depth,
    const std::function<LazyNodeSet(const LazyNodeSet&)>& transform) {
  FamilyOutcome out;
  for (const FamilyMember& member : family.members) {
    LazyNodeSet image = transform(member.set);
    if (looks_infinite(image.enumerate_upto(depth), depth)) {
      out.family.members.push_back({member.label, std::move(image)});
    } else {
      out.dropped.push_back(member.label);
    }
  }
  return out;
}

}  // namespace

FamilyOutcome pullback_identity(const Family& family, std::size_t depth) {
  return transform_members(family, depth, [](const LazyNodeSet& set) {
    LazyNodeSet image;
    auto base_contains = set.contains;
    image.contains = [base_contains](const Node& n) {
      return is_binary(n) && base_contains(n);
    };
    auto base_enum = set.enumerate_upto;
    image.enumerate_upto = [base_enum](std::size_t d) {
      NodeSet out;
      for (const Node& n : base_enum(d))
        if (is_binary(n)) out.insert(n);
      return out;
    };
    image.claims_infinite = set.claims_infinite;
    return image;
  });
}

FamilyOutcome pullback_pi(const Family& family, std::size_t depth) {
  return transform_members(family, depth, [](const LazyNodeSet& set) {
    LazyNodeSet image;
    auto base_contains = set.contains;
    image.contains = [base_contains](const Node& n) {
      return base_contains(to_node(block_encode(n)));
    };
    auto base_enum = set.enumerate_upto;
    image.enumerate_upto = [base_enum](std::size_t d) {
      NodeSet out;
      // An image is at least as long as its source, so a preimage below
      // level d sits in the base below the largest image length of a
      // depth-d grid node.
      std::size_t probe = d > 0 ? (d - 1) * d + 1 : 1;
      for (const Node& n : base_enum(probe)) {
        if (!is_binary(n)) continue;
        if (!n.empty() && n[n.length() - 1] != 0) continue;
        Node source = block_decode(to_binary(n));
        if (source.length() < d) out.insert(source);
      }
      return out;
    };
    image.claims_infinite = set.claims_infinite;
    return image;
  });
}

NodeSet decomposition_block(const std::vector<LazyNodeSet>& f,
                            std::span<const Node> g, std::size_t n,
                            std::size_t depth) {
  if (n >= f.size())
    throw Error(Errc::IndexOutOfRange,
                "block index " + std::to_string(n) + " over " +
                    std::to_string(f.size()) + " members");
  if (g.size() <= n)
    throw Error(Errc::IndexOutOfRange, "enumeration shorter than block index");
  auto removed_before = [&](const Node& node) {
    for (std::size_t k = 0; k < n; ++k)
      if (node == g[k] || f[k].contains(node)) return true;
    return false;
  };
  NodeSet block;
  if (g[n].length() < depth && !removed_before(g[n])) block.insert(g[n]);
  for (const Node& node : f[n].enumerate_upto(depth))
    if (!removed_before(node)) block.insert(node);
  return block;
}

NodeSet decomposition_block(const std::vector<LazyNodeSet>& f, std::size_t n,
                            std::size_t depth) {
  std::vector<Node> g = canonical_nodes(n + 1);
  return decomposition_block(f, g, n, depth);
}

std::vector<NodeSet> decomposition_cover(const std::vector<LazyNodeSet>& f,
                                         std::size_t depth,
                                         std::size_t width) {
  std::size_t count = canonical_count_for_grid(depth, width);
  std::vector<Node> g = canonical_nodes(count);
  std::vector<NodeSet> blocks;
  blocks.reserve(count);
  auto removed_before = [&](const Node& node, std::size_t n) {
    for (std::size_t k = 0; k < n && k < f.size(); ++k)
      if (f[k].contains(node)) return true;
    for (std::size_t k = 0; k < n; ++k)
      if (node == g[k]) return true;
    return false;
  };
  for (std::size_t n = 0; n < count; ++n) {
    NodeSet block;
    if (g[n].length() < depth && !removed_before(g[n], n)) block.insert(g[n]);
    if (n < f.size())
      for (const Node& node : f[n].enumerate_upto(depth))
        if (!removed_before(node, n)) block.insert(node);
    blocks.push_back(std::move(block));
  }
  return blocks;
}

FamilyOutcome restrict_family(const Family& decomposition,
                              const LazyNodeSet& a, std::size_t depth) {
  return transform_members(
      decomposition, depth, [&a](const LazyNodeSet& member) {
        LazyNodeSet image;
        auto member_contains = member.contains;
        auto a_contains = a.contains;
        image.contains = [member_contains, a_contains](const Node& n) {
          return member_contains(n) && a_contains(n);
        };
        auto member_enum = member.enumerate_upto;
        auto a_enum = a.enumerate_upto;
        image.enumerate_upto = [member_enum, a_enum, member_contains,
                                a_contains](std::size_t d) {
          NodeSet out;
          for (const Node& n : member_enum(d))
            if (a_contains(n)) out.insert(n);
          for (const Node& n : a_enum(d))
            if (member_contains(n)) out.insert(n);
          return out;
        };
        image.claims_infinite = false;
        return image;
      });
}

std::vector<PeriodicBranch> default_branches(std::size_t count) {
  std::vector<PeriodicBranch> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n)
    out.push_back(PeriodicBranch::through(static_cast<unsigned>(n)));
  return out;
}

namespace {

void check_branch_roots(std::span<const PeriodicBranch> branches) {
  for (std::size_t n = 0; n < branches.size(); ++n) {
    if (branches[n].node_at(1) != Node({static_cast<unsigned>(n)}))
      throw Error(Errc::BranchRootMismatch,
                  "branch " + std::to_string(n) + " passes through " +
                      branches[n].node_at(1).str() + ", not " +
                      Node({static_cast<unsigned>(n)}).str());
  }
}

}  // namespace

PairSet to_branch_columns(const LazyNodeSet& set,
                          std::span<const PeriodicBranch> branches,
                          std::size_t depth) {
  check_branch_roots(branches);
  PairSet pairs;
  for (std::size_t n = 0; n < branches.size(); ++n)
    for (std::size_t i = 0; i < depth; ++i)
      if (set.contains(branches[n].node_at(i))) pairs.insert({n, i});
  return pairs;
}

NodeSet from_branch_columns(const PairSet& pairs,
                            std::span<const PeriodicBranch> branches) {
  check_branch_roots(branches);
  NodeSet out;
  for (const auto& [n, i] : pairs) {
    if (n >= branches.size())
      throw Error(Errc::IndexOutOfRange,
                  "pair column " + std::to_string(n) + " over " +
                      std::to_string(branches.size()) + " branches");
    out.insert(branches[n].node_at(i));
  }
  return out;
}

std::size_t column_multiplicity(const PairSet& pairs) {
  std::size_t best = 0;
  std::size_t current = 0;
  std::optional<std::size_t> column;
  for (const auto& [n, i] : pairs) {
    if (!column || *column != n) {
      column = n;
      current = 0;
    }
    ++current;
    if (current > best) best = current;
  }
  return best;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::ConsistentWithAd: return "consistent-with-ad";
    case Verdict::ChainFound: return "chain-found";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

OverlapReport ad_report(const LazyNodeSet& a, const LazyNodeSet& b,
                        std::size_t depth) {
  NodeSet overlap;
  for (const Node& n : a.enumerate_upto(depth))
    if (b.contains(n)) overlap.insert(n);
  for (const Node& n : b.enumerate_upto(depth))
    if (a.contains(n)) overlap.insert(n);

  OverlapReport report;
  report.overlap_count = overlap.size();
  report.depth_checked = depth;
  for (const Node& n : overlap) {
    if (!report.last_hit_level || n.length() > *report.last_hit_level)
      report.last_hit_level = n.length();
  }
  report.verdict = Verdict::ConsistentWithAd;
  if (report.last_hit_level && in_top_third(*report.last_hit_level, depth))
    report.verdict = Verdict::Inconclusive;
  return report;
}

OverlapReport off_branch_report(const LazyNodeSet& a, std::size_t depth,
                                std::size_t chain_threshold) {
  NodeSet truncation = a.enumerate_upto(depth);
  OverlapReport report;
  report.overlap_count = truncation.size();
  report.depth_checked = depth;
  report.chain_length = max_chain_len(truncation);
  report.verdict = report.chain_length >= chain_threshold
                       ? Verdict::ChainFound
                       : Verdict::ConsistentWithAd;
  return report;
}

}  // namespace ob
