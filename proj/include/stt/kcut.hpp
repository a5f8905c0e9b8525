#pragma once

#include "stt/search_tree.hpp"

namespace stt {

// Turns a valid search tree into a k-cut tree (k >= 3) by replacing the
// root of every overweight subtree with a leaf centroid of the boundary
// hull. Per-node depth grows by at most a factor 1 + 1/(ceil(k/2) - 1).
SearchTree fix(const SearchTree& tree, int k);

// Refined transform, valid for k >= 2: when the subtree root is already an
// admissible root of its node set, recursion proceeds without replacement;
// otherwise the replacement is the leaf centroid of the hull of the root
// plus the boundary. Per-node depth grows by at most 1 + 1/floor(k/2).
SearchTree fix_improved(const SearchTree& tree, int k);

// Steiner-closed result with per-node depth at most doubled.
inline SearchTree steinerize(const SearchTree& tree) { return fix_improved(tree, 2); }

}  // namespace stt
