#include "ob/node.hpp"

#include <charconv>

namespace ob {

namespace {

std::vector<unsigned> parse_coords(std::string_view text) {
  if (text == "e") return {};
  if (text.empty())
    throw Error(Errc::ParseFailure, "empty node literal (use \"e\")");
  std::vector<unsigned> coords;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t dot = text.find('.', pos);
    std::string_view piece =
        text.substr(pos, dot == std::string_view::npos ? dot : dot - pos);
    unsigned value = 0;
    auto [ptr, ec] =
        std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc() || ptr != piece.data() + piece.size())
      throw Error(Errc::ParseFailure,
                  "bad node literal coordinate \"" + std::string(piece) +
                      "\" in \"" + std::string(text) + "\"");
    coords.push_back(value);
    if (dot == std::string_view::npos) break;
    pos = dot + 1;
    if (pos == text.size())
      throw Error(Errc::ParseFailure,
                  "trailing dot in node literal \"" + std::string(text) + "\"");
  }
  return coords;
}

std::string format_coords(std::span<const unsigned> coords) {
  if (coords.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(coords[i]);
  }
  return out;
}

}  // namespace

Node Node::parse(std::string_view text) { return Node(parse_coords(text)); }

Node Node::child(unsigned c) const {
  std::vector<unsigned> coords = coords_;
  coords.push_back(c);
  return Node(std::move(coords));
}

Node Node::prefix(std::size_t n) const {
  return Node(std::vector<unsigned>(coords_.begin(), coords_.begin() + n));
}

std::string Node::str() const { return format_coords(coords_); }

BinNode::BinNode(std::vector<unsigned> bits) : bits_(std::move(bits)) {
  for (unsigned b : bits_)
    if (b > 1)
      throw Error(Errc::InvalidInput,
                  "binary node coordinate " + std::to_string(b));
}

BinNode BinNode::parse(std::string_view text) {
  return BinNode(parse_coords(text));
}

BinNode BinNode::child(unsigned bit) const {
  std::vector<unsigned> bits = bits_;
  bits.push_back(bit);
  return BinNode(std::move(bits));
}

BinNode BinNode::prefix(std::size_t n) const {
  return BinNode(std::vector<unsigned>(bits_.begin(), bits_.begin() + n));
}

unsigned BinNode::last() const { return bits_.back(); }

std::string BinNode::str() const { return format_coords(bits_); }

Node to_node(const BinNode& b) {
  return Node(std::vector<unsigned>(b.coords().begin(), b.coords().end()));
}

bool is_binary(const Node& n) {
  for (unsigned c : n.coords())
    if (c > 1) return false;
  return true;
}

BinNode to_binary(const Node& n) {
  if (!is_binary(n))
    throw Error(Errc::InvalidInput, "node " + n.str() + " is not binary");
  return BinNode(std::vector<unsigned>(n.coords().begin(), n.coords().end()));
}

Node right_shift(const Node& n) {
  if (n.empty())
    throw Error(Errc::EmptySequence, "right shift of the empty node");
  std::vector<unsigned> coords(n.coords().begin(), n.coords().end());
  ++coords.back();
  return Node(std::move(coords));
}

bool left_shift(const Node& n, Node& out) {
  if (n.empty() || n[n.length() - 1] == 0) return false;
  std::vector<unsigned> coords(n.coords().begin(), n.coords().end());
  --coords.back();
  out = Node(std::move(coords));
  return true;
}

BinNode parent(const BinNode& n) {
  if (n.empty()) return n;
  return n.prefix(n.length() - 1);
}

BinNode flip_last(const BinNode& n) {
  if (n.empty())
    throw Error(Errc::EmptySequence, "flip_last of the empty node");
  std::vector<unsigned> bits(n.coords().begin(), n.coords().end());
  bits.back() ^= 1u;
  return BinNode(std::move(bits));
}

NodeSet hair_of_chain(const std::vector<Node>& chain) {
  NodeSet out;
  for (const Node& n : chain)
    if (!n.empty()) out.insert(right_shift(n));
  return out;
}

BinNodeSet binary_hair(const BinNode& stem) {
  BinNodeSet out;
  for (std::size_t i = 1; i <= stem.length(); ++i)
    out.insert(flip_last(stem.prefix(i)));
  return out;
}

std::string to_literal_list(const NodeSet& s) {
  std::string out = "{";
  bool first = true;
  for (const Node& n : s) {
    if (!first) out += ",";
    out += n.str();
    first = false;
  }
  return out + "}";
}

}  // namespace ob
