#include "ob/blockcode.hpp"

namespace ob {

BinNode block_encode(const Node& n) {
  std::vector<unsigned> bits;
  for (unsigned c : n.coords()) {
    bits.insert(bits.end(), c, 1u);
    bits.push_back(0u);
  }
  return BinNode(std::move(bits));
}

Node block_decode(const BinNode& b) {
  if (!b.empty() && b.last() != 0)
    throw Error(Errc::NotInImage,
                "binary node " + b.str() + " does not end in 0");
  std::vector<unsigned> coords;
  unsigned run = 0;
  for (unsigned bit : b.coords()) {
    if (bit == 1) {
      ++run;
    } else {
      coords.push_back(run);
      run = 0;
    }
  }
  return Node(std::move(coords));
}

}  // namespace ob
