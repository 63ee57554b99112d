#pragma once

// Unary-block code between the finitely-branching tree and the binary tree:
// each coordinate n becomes a run of n ones followed by a zero. The image is
// exactly the binary nodes ending in 0 (plus the root), the code is
// injective, and it preserves and reflects the prefix order.

#include "ob/node.hpp"

namespace ob {

BinNode block_encode(const Node& n);

// Inverse on the image; throws Errc::NotInImage for a nonempty node
// ending in 1.
Node block_decode(const BinNode& b);

}  // namespace ob
