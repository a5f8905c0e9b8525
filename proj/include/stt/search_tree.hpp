#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "stt/core.hpp"
#include "stt/tree.hpp"

namespace stt {

// Dynamic-model accounting. Model cost is pointer moves + rotations + one
// unit per search; oracle calls are tracked as a diagnostic only.
struct CostLedger {
  long long pointer_moves = 0;
  long long rotations = 0;
  long long searches = 0;
  long long oracle_calls = 0;

  long long model_cost() const { return pointer_moves + rotations + searches; }
};

std::string format_ledger_csv(const CostLedger& ledger);

// A rooted search tree on an unrooted space. Single-owner mutable state; the
// per-node boundary table is kept exact across rotations.
class SearchTree {
 public:
  static SearchTree rooted_at(const UnrootedTree& space, NodeId root);
  // Builds from a parent vector (kNone marks the root). Checks structure
  // (single root, acyclic, connected) but not the search-tree property;
  // use validate() for that.
  static SearchTree from_parents(const UnrootedTree& space, const std::vector<NodeId>& parents);

  const UnrootedTree& space() const { return *space_; }
  int size() const { return static_cast<int>(parent_.size()); }
  NodeId root() const { return root_; }
  NodeId parent(NodeId x) const { return parent_[x]; }
  const std::vector<NodeId>& parents() const { return parent_; }
  const std::vector<NodeId>& children(NodeId x) const { return children_[x]; }
  const std::vector<NodeId>& boundary(NodeId x) const { return boundary_[x]; }
  int boundary_size(NodeId x) const { return static_cast<int>(boundary_[x].size()); }

  int depth(NodeId x) const;                    // root has depth 1
  std::vector<int> depths() const;
  std::vector<NodeId> path_from_root(NodeId x) const;
  NodeSet subtree_nodes(NodeId x) const;

  // Rotates x with its parent. At most one child of x moves to the old
  // parent; boundaries of the two rotated nodes are refreshed with
  // |boundary(parent)| separation queries. Oracle calls are charged to the
  // ledger when one is given.
  void rotate(NodeId x, CostLedger* ledger = nullptr);

  int max_boundary_size() const;
  bool is_k_cut(int k) const;
  bool is_steiner_closed() const { return is_k_cut(2); }

  // Recursive search-tree definition, quadratic; test oracle.
  bool validate() const;

  bool same_shape(const SearchTree& other) const {
    return root_ == other.root_ && parent_ == other.parent_;
  }

  // Text format: line 1 = n, line 2 = root, then n-1 lines "child parent".
  static SearchTree parse(std::istream& in, const UnrootedTree& space);
  static SearchTree parse_string(const std::string& text, const UnrootedTree& space);
  std::string format() const;

 private:
  SearchTree() = default;
  void check_node(NodeId v) const;

  const UnrootedTree* space_ = nullptr;
  NodeId root_ = kNone;
  std::vector<NodeId> parent_;
  std::vector<std::vector<NodeId>> children_;  // sorted
  std::vector<std::vector<NodeId>> boundary_;  // sorted
};

// Boundary recomputed from scratch by scanning all space edges; test oracle.
std::vector<NodeId> boundary_brute(const SearchTree& tree, NodeId x);

// Direct Steiner-closure check from the definition (hull of every search
// path); quadratic test oracle for is_steiner_closed().
bool steiner_closed_direct(const SearchTree& tree);

// Pointer machine of the dynamic model. The pointer names a node and follows
// it through rotations.
struct Pointer {
  NodeId current = kNone;
};

void begin_search(const SearchTree& tree, Pointer& ptr, CostLedger& ledger);
void move_to_parent(const SearchTree& tree, Pointer& ptr, CostLedger& ledger);
void move_to_child(const SearchTree& tree, Pointer& ptr, NodeId child, CostLedger& ledger);
// Rotates the edge between the pointer node and its parent.
void rotate_at_pointer(SearchTree& tree, Pointer& ptr, CostLedger& ledger);
// Rotates the edge between the pointer node and one of its children; the
// pointer stays on its node, which ends up below the child.
void rotate_child_at_pointer(SearchTree& tree, Pointer& ptr, NodeId child, CostLedger& ledger);

// Serves searches on a static tree: walk down to each target, no rotations.
void serve_static(const SearchTree& tree, const std::vector<NodeId>& searches,
                  CostLedger& ledger);

}  // namespace stt
