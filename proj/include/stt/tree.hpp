#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "stt/core.hpp"

namespace stt {

// The unrooted search space. Immutable after construction; all queries are
// read-only and safe to share across threads.
class UnrootedTree {
 public:
  UnrootedTree(int n, const std::vector<std::pair<NodeId, NodeId>>& edges);

  int size() const { return n_; }
  const std::vector<NodeId>& neighbors(NodeId v) const;
  int degree(NodeId v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(NodeId u, NodeId v) const;

  // True iff z lies on the unique path between x and y. Requires x != z, y != z.
  bool separates(NodeId z, NodeId x, NodeId y) const;
  int path_length(NodeId a, NodeId b) const;  // number of edges

  // Node set of the component of S minus `removed` that contains `target`.
  NodeSet component_with(NodeId removed, NodeId target) const;

  // Components of S[A] minus r, ordered by smallest member. Requires S[A]
  // connected and r in A.
  std::vector<NodeSet> components_of_induced(const NodeSet& A, NodeId r) const;

  // Smallest connected superset of A.
  NodeSet convex_hull(const NodeSet& A) const;

  bool induced_connected(const NodeSet& A) const;

  // Leaf centroid of S[A] (requires |A| >= 3 and S[A] connected): a non-leaf
  // node v such that every component of S[A] minus v holds at most floor(l/2)
  // leaves of S[A] (l = leaf count of S[A]), plus at most one attachment
  // node. Found by a tuple descent from the smallest-id non-leaf; among
  // equally good neighbors the smallest id wins, so the answer is
  // deterministic.
  NodeId leaf_centroid(const NodeSet& A) const;

  // Text format: line 1 = n, then n-1 lines "u v". Parse errors carry line
  // numbers.
  static UnrootedTree parse(std::istream& in);
  static UnrootedTree parse_string(const std::string& text);
  std::string format() const;

 private:
  void check_node(NodeId v) const;
  NodeId lca(NodeId a, NodeId b) const;

  int n_ = 0;
  std::vector<std::vector<NodeId>> adj_;  // sorted neighbor lists

  // Euler tour LCA machinery (rooted at 0).
  std::vector<int> depth_;
  std::vector<int> first_;
  std::vector<NodeId> tour_;
  std::vector<std::vector<int>> sparse_;  // indices into tour_, min by depth
  std::vector<int> log2_;
};

}  // namespace stt
