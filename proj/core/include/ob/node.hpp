#pragma once

// Nodes of the finitely-branching tree (finite sequences of naturals) and of
// the binary tree (bit sequences), with the prefix order and the antichain
// utilities everything else is built on.
//
// Node literal syntax, used by every file format and report: coordinates
// joined by dots ("2.0.1"), the empty node written "e".
//
// All values are immutable; all operations are pure. Sets are ordered
// shortlex (by length, then lexicographically) so that every enumeration in
// the library is deterministic.

#include <compare>
#include <concepts>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ob/errors.hpp"

namespace ob {

class Node {
 public:
  Node() = default;
  explicit Node(std::vector<unsigned> coords) : coords_(std::move(coords)) {}

  // Parses "n0.n1.....nk" or "e".
  static Node parse(std::string_view text);

  std::size_t length() const { return coords_.size(); }
  bool empty() const { return coords_.empty(); }
  unsigned operator[](std::size_t i) const { return coords_[i]; }
  std::span<const unsigned> coords() const { return coords_; }

  Node child(unsigned c) const;
  Node prefix(std::size_t n) const;

  std::string str() const;

  std::strong_ordering operator<=>(const Node& other) const {
    if (coords_.size() != other.coords_.size())
      return coords_.size() <=> other.coords_.size();
    return coords_ <=> other.coords_;
  }
  bool operator==(const Node& other) const = default;

 private:
  std::vector<unsigned> coords_;
};

class BinNode {
 public:
  BinNode() = default;
  explicit BinNode(std::vector<unsigned> bits);  // every bit must be 0 or 1

  static BinNode parse(std::string_view text);

  std::size_t length() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  unsigned operator[](std::size_t i) const { return bits_[i]; }
  std::span<const unsigned> coords() const { return bits_; }

  BinNode child(unsigned bit) const;
  BinNode prefix(std::size_t n) const;
  unsigned last() const;

  std::string str() const;

  std::strong_ordering operator<=>(const BinNode& other) const {
    if (bits_.size() != other.bits_.size())
      return bits_.size() <=> other.bits_.size();
    return bits_ <=> other.bits_;
  }
  bool operator==(const BinNode& other) const = default;

 private:
  std::vector<unsigned> bits_;
};

using NodeSet = std::set<Node>;
using BinNodeSet = std::set<BinNode>;

template <typename N>
concept TreeNode = std::same_as<N, Node> || std::same_as<N, BinNode>;

Node to_node(const BinNode& b);
bool is_binary(const Node& n);
// Empty optional-free variant: throws Errc::InvalidInput when not binary.
BinNode to_binary(const Node& n);

// The tree order: true iff a is an initial segment of b (reflexive).
template <TreeNode N>
bool is_prefix(const N& a, const N& b) {
  if (a.length() > b.length()) return false;
  for (std::size_t i = 0; i < a.length(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

template <TreeNode N>
bool comparable(const N& a, const N& b) {
  return is_prefix(a, b) || is_prefix(b, a);
}

template <TreeNode N>
std::size_t level(const N& n) {
  return n.length();
}

// Right shift: increments the last coordinate. Undefined at the root.
Node right_shift(const Node& n);

// Left inverse of right_shift where defined: decrements the last coordinate.
// Returns false (leaving out untouched) when the last coordinate is 0 or the
// node is empty.
bool left_shift(const Node& n, Node& out);

// Drops the last bit; the root is its own parent.
BinNode parent(const BinNode& n);

// Flips the last bit. Undefined at the root.
BinNode flip_last(const BinNode& n);

template <TreeNode N>
std::set<N> minimal_elements(const std::set<N>& s) {
  std::set<N> out;
  for (const N& candidate : s) {
    bool minimal = true;
    for (const N& other : s) {
      if (other != candidate && is_prefix(other, candidate)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.insert(candidate);
  }
  return out;
}

template <TreeNode N>
bool is_antichain(const std::set<N>& s) {
  for (auto it = s.begin(); it != s.end(); ++it) {
    auto jt = it;
    for (++jt; jt != s.end(); ++jt)
      if (comparable(*it, *jt)) return false;
  }
  return true;
}

// Length of the longest prefix-linearly-ordered subset. Shortlex order puts
// every proper prefix before its extensions, so one forward DP pass works.
template <TreeNode N>
std::size_t max_chain_len(const std::set<N>& s) {
  std::vector<N> nodes(s.begin(), s.end());
  std::vector<std::size_t> best(nodes.size(), 1);
  std::size_t result = s.empty() ? 0 : 1;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (nodes[j].length() < nodes[i].length() &&
          is_prefix(nodes[j], nodes[i]) && best[j] + 1 > best[i]) {
        best[i] = best[j] + 1;
      }
    }
    if (best[i] > result) result = best[i];
  }
  return result;
}

// Hair of a chain in the finitely-branching tree: the right shifts of its
// nonempty members. For the prefix set of a single sequence this is an
// antichain of one-step deviations.
NodeSet hair_of_chain(const std::vector<Node>& chain);

// Binary hair of a stem: for every nonempty prefix, the sibling obtained by
// flipping its last bit. Always an antichain of size level(stem).
BinNodeSet binary_hair(const BinNode& stem);

std::string to_literal_list(const NodeSet& s);

}  // namespace ob
