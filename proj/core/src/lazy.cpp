#include "ob/lazy.hpp"

#include <memory>

#include "ob/blockcode.hpp"
#include "ob/errors.hpp"

namespace ob {

namespace {

// Appends every node of the given length over coordinates < width.
void append_level(std::size_t len, std::size_t width, NodeSet& out) {
  std::vector<unsigned> coords(len, 0);
  while (true) {
    out.insert(Node(coords));
    std::size_t i = len;
    while (i > 0) {
      --i;
      if (coords[i] + 1 < width) {
        ++coords[i];
        std::fill(coords.begin() + i + 1, coords.end(), 0u);
        break;
      }
      if (i == 0) return;
    }
    if (len == 0) return;
  }
}

std::size_t weight(const Node& n) {
  std::size_t w = n.length();
  for (unsigned c : n.coords())
    if (static_cast<std::size_t>(c) + 1 > w) w = c + 1;
  return w;
}

}  // namespace

const FamilyMember* Family::find(const std::string& label) const {
  for (const FamilyMember& m : members)
    if (m.label == label) return &m;
  return nullptr;
}

LazyNodeSet explicit_set(NodeSet nodes) {
  auto shared = std::make_shared<NodeSet>(std::move(nodes));
  LazyNodeSet set;
  set.contains = [shared](const Node& n) { return shared->count(n) > 0; };
  set.enumerate_upto = [shared](std::size_t depth) {
    NodeSet out;
    for (const Node& n : *shared)
      if (n.length() < depth) out.insert(n);
    return out;
  };
  set.claims_infinite = false;
  return set;
}

LazyNodeSet level_set(std::size_t n, std::optional<std::size_t> width) {
  LazyNodeSet set;
  set.contains = [n](const Node& node) { return node.length() == n; };
  set.enumerate_upto = [n, width](std::size_t depth) {
    NodeSet out;
    if (n >= depth) return out;
    append_level(n, width.value_or(depth), out);
    return out;
  };
  set.claims_infinite = true;
  return set;
}

LazyNodeSet branch_prefix_set(PeriodicBranch branch) {
  LazyNodeSet set;
  set.contains = [branch](const Node& node) {
    return node == branch.node_at(node.length());
  };
  set.enumerate_upto = [branch](std::size_t depth) {
    NodeSet out;
    for (std::size_t i = 0; i < depth; ++i) out.insert(branch.node_at(i));
    return out;
  };
  set.claims_infinite = true;
  return set;
}

LazyNodeSet branch_hair_set(PeriodicBranch branch) {
  LazyNodeSet set;
  set.contains = [branch](const Node& node) {
    Node back;
    return left_shift(node, back) && back == branch.node_at(node.length());
  };
  set.enumerate_upto = [branch](std::size_t depth) {
    NodeSet out;
    for (std::size_t i = 1; i < depth; ++i)
      out.insert(right_shift(branch.node_at(i)));
    return out;
  };
  set.claims_infinite = true;
  return set;
}

LazyNodeSet zeros_then_one_set() {
  LazyNodeSet set;
  set.contains = [](const Node& node) {
    if (node.empty() || node[node.length() - 1] != 1) return false;
    for (std::size_t i = 0; i + 1 < node.length(); ++i)
      if (node[i] != 0) return false;
    return true;
  };
  set.enumerate_upto = [](std::size_t depth) {
    NodeSet out;
    for (std::size_t zeros = 0; zeros + 1 < depth; ++zeros) {
      std::vector<unsigned> coords(zeros, 0u);
      coords.push_back(1u);
      out.insert(Node(std::move(coords)));
    }
    return out;
  };
  set.claims_infinite = true;
  return set;
}

LazyNodeSet block_image_set(LazyNodeSet base) {
  LazyNodeSet set;
  auto base_contains = base.contains;
  set.contains = [base_contains](const Node& node) {
    if (!is_binary(node)) return false;
    if (!node.empty() && node[node.length() - 1] != 0) return false;
    return base_contains(block_decode(to_binary(node)));
  };
  auto base_enum = base.enumerate_upto;
  set.enumerate_upto = [base_enum](std::size_t depth) {
    NodeSet out;
    // A source node's image is at least as long as the source, so probing
    // the base at the same depth is exhaustive.
    for (const Node& n : base_enum(depth)) {
      BinNode image = block_encode(n);
      if (image.length() < depth) out.insert(to_node(image));
    }
    return out;
  };
  set.claims_infinite = base.claims_infinite;
  return set;
}

NodeSet grid_nodes(std::size_t depth, std::size_t width) {
  NodeSet out;
  for (std::size_t len = 0; len < depth; ++len) append_level(len, width, out);
  return out;
}

std::vector<Node> canonical_nodes(std::size_t count) {
  std::vector<Node> out;
  out.reserve(count);
  if (count == 0) return out;
  out.push_back(Node{});
  for (std::size_t w = 1; out.size() < count; ++w) {
    for (std::size_t len = 1; len <= w && out.size() < count; ++len) {
      NodeSet layer;
      append_level(len, w, layer);
      for (const Node& n : layer) {
        if (weight(n) != w) continue;
        out.push_back(n);
        if (out.size() == count) break;
      }
    }
  }
  return out;
}

std::size_t canonical_count_for_grid(std::size_t depth, std::size_t width) {
  std::size_t max_weight = width;
  if (depth > 0 && depth - 1 > max_weight) max_weight = depth - 1;
  std::size_t total = 0;
  std::size_t power = 1;
  for (std::size_t len = 0; len <= max_weight; ++len) {
    total += power;
    power *= max_weight;
  }
  return total;
}

bool in_top_third(std::size_t level, std::size_t depth) {
  return 3 * level >= 2 * depth;
}

bool looks_infinite(const NodeSet& truncation, std::size_t depth) {
  if (2 * truncation.size() >= depth && !truncation.empty()) return true;
  for (const Node& n : truncation)
    if (in_top_third(n.length(), depth)) return true;
  return false;
}

}  // namespace ob
