#pragma once

#include <vector>

#include "stt/search_tree.hpp"

namespace stt {

enum class StepKind { zig, zigzig, zigzag };

// Instrumentation hooks for splay steps; used by the potential analysis.
class SplayObserver {
 public:
  virtual ~SplayObserver() = default;
  virtual void after_rotation(const SearchTree&, NodeId /*x*/, NodeId /*old_parent*/) {}
  virtual void before_step(const SearchTree&, StepKind, NodeId /*x*/) {}
  virtual void after_step(const SearchTree&, StepKind, NodeId /*x*/) {}
  virtual void before_splay(const SearchTree&, NodeId /*x*/, NodeId /*stop*/) {}
  virtual void after_splay(const SearchTree&, NodeId /*x*/, NodeId /*stop*/, int /*z_steps*/) {}
};

// Classifies the next splay step for x under stopping parent y (kNone splays
// to the root): zig when x's parent hangs off y, otherwise the separation
// pattern of parent and grandparent decides. Throws on the non-separating
// triple, which cannot arise in a Steiner-closed tree.
StepKind classify_step(const SearchTree& tree, NodeId x, NodeId y = kNone);

// Splays x upward until its parent is y (kNone: until x is the root).
// Zig-zig rotates the parent first, zig-zag rotates x twice. With a pointer
// and ledger the steps run in the dynamic model (the pointer must sit on x).
void splay(SearchTree& tree, NodeId x, NodeId y = kNone, SplayObserver* obs = nullptr,
           Pointer* ptr = nullptr, CostLedger* ledger = nullptr);

// Branching nodes of x's search path in root-to-x order, read off the
// boundary table: a path node with boundary size 2 whose path child has
// boundary size 1.
std::vector<NodeId> branching_nodes(const SearchTree& tree, NodeId x);

struct SearchStats {
  int depth_before = 0;
  int branching = 0;
  long long rotations = 0;
  long long zig = 0;
  long long zigzig = 0;
  long long zigzag = 0;
};

// Two-phase self-adjusting search: walk down to x, splay each branching node
// up to its nearest branching ancestor (bottom to top), then splay x to the
// root. Requires a Steiner-closed tree and keeps it Steiner-closed.
SearchStats search(SearchTree& tree, NodeId x, CostLedger& ledger,
                   SplayObserver* obs = nullptr);

// Serves a whole sequence; a non-Steiner-closed initial tree is first
// steinerized outside the ledger.
void serve(SearchTree& tree, const std::vector<NodeId>& searches, CostLedger& ledger,
           SplayObserver* obs = nullptr);

}  // namespace stt
