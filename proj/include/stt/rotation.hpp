#pragma once

#include <functional>
#include <vector>

#include "stt/search_tree.hpp"

namespace stt {

// One recorded rotation: applied at `child`, whose parent at that moment is
// `parent`. Storing both endpoints makes reversal unambiguous: the inverse
// rotation acts at `parent` on the same edge.
struct RotationStep {
  NodeId child;
  NodeId parent;
};

struct RotationScript {
  std::vector<RotationStep> steps;

  std::size_t size() const { return steps.size(); }
  std::vector<NodeId> rotate_at_nodes() const;
  RotationScript reversed() const;
};

// Replays the script, checking each step against the recorded edge.
void apply_script(SearchTree& tree, const RotationScript& script);

// Rotates the root of a 1-cut tree to r2 along the search path; at most
// n - 1 rotations, every intermediate tree 1-cut.
RotationScript transform_1cut(const SearchTree& tree, NodeId r2);

// One reduction level: turns a k-cut tree into a (k-1)-cut tree with at most
// n - k rotations, each at a node of boundary size k under a parent of
// boundary size k - 1. Intermediates stay k-cut.
RotationScript reduce_cut(const SearchTree& tree, int k);

// Full transformation between two k-cut trees on the same space: reduce both
// sides level by level to rooted versions of the space, bridge the roots,
// then replay the target-side reduction backwards. At most
// (2k-1)n - (k+1)k + 1 rotations, all intermediates k-cut.
RotationScript transform(const SearchTree& tree, const SearchTree& target, int k);

// Pointer-machine reduction (marked depth-first search). Node marks:
enum class Mark : unsigned char { unvisited = 0, visited = 1, finished = 2 };

// Trace of pointer primitives, invertible for the return leg.
struct PointerOp {
  enum class Kind : unsigned char { move_up, move_down, rotate_child } kind;
  NodeId a;  // move: source node; rotation: parent at time of rotation
  NodeId b;  // move: destination;  rotation: child rotated above a
};

using PointerHook =
    std::function<void(const SearchTree&, const Pointer&, const std::vector<Mark>&)>;

struct ReduceStats {
  long long moves = 0;
  long long rotations = 0;
};

// Same outcome as reduce_cut, executed in the dynamic model: at most 2n
// pointer moves and n - k rotations per level, pointer back at the root.
// `hook`, when set, runs after every primitive.
ReduceStats reduce_cut_pointer(SearchTree& tree, int k, CostLedger& ledger,
                               std::vector<PointerOp>* trace = nullptr,
                               const PointerHook& hook = nullptr);

struct TransformStats {
  long long moves = 0;
  long long rotations = 0;
  long long total_ops() const { return moves + rotations; }
};

// Whole pipeline in the dynamic model: reduces both sides, bridges the
// rooted versions, and replays the target-side trace inverted.
TransformStats transform_pointer(SearchTree& tree, const SearchTree& target, int k,
                                 CostLedger& ledger, const PointerHook& hook = nullptr);

}  // namespace stt
