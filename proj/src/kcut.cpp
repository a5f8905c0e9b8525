#include "stt/kcut.hpp"

namespace stt {

namespace {

// Rotates v upward until it occupies the slot whose parent is `above`.
void raise_to(SearchTree& tree, NodeId v, NodeId above) {
  int guard = tree.size();
  while (tree.parent(v) != above) {
    if (--guard < 0) throw Error(Errc::internal, "replacement root escaped its subtree");
    tree.rotate(v);
  }
}

// Children of x ordered by the smallest node id in their subtree.
std::vector<NodeId> ordered_children(const SearchTree& tree, NodeId x) {
  std::vector<std::pair<NodeId, NodeId>> keyed;
  for (NodeId c : tree.children(x)) keyed.push_back({tree.subtree_nodes(c).front(), c});
  std::sort(keyed.begin(), keyed.end());
  std::vector<NodeId> out;
  out.reserve(keyed.size());
  for (auto& [key, c] : keyed) out.push_back(c);
  return out;
}

template <typename PickReplacement>
SearchTree run_fix(const SearchTree& tree, int k, PickReplacement pick) {
  SearchTree out = tree;
  const UnrootedTree& space = out.space();
  std::vector<NodeId> stack{out.root()};
  while (!stack.empty()) {
    NodeId x = stack.back();
    stack.pop_back();
    int bsize = out.boundary_size(x);
    if (bsize > k) throw Error(Errc::internal, "recursion reached boundary size above k");
    if (out.children(x).empty()) continue;

    NodeId top = x;
    if (bsize == k) {
      NodeId v = pick(out, space, x);
      if (v != x) {
        if (!out.subtree_nodes(x).contains(v))
          throw Error(Errc::internal, "replacement root outside the subtree");
        raise_to(out, v, out.parent(x));
        top = v;
      }
    }
    std::vector<NodeId> kids = ordered_children(out, top);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

}  // namespace

SearchTree fix(const SearchTree& tree, int k) {
  if (k < 3) throw Error(Errc::bad_argument, "fix requires k >= 3; use fix_improved for k = 2");
  return run_fix(tree, k, [](const SearchTree& t, const UnrootedTree& space, NodeId x) {
    NodeSet hull = space.convex_hull(NodeSet(t.boundary(x)));
    return space.leaf_centroid(hull);
  });
}

SearchTree fix_improved(const SearchTree& tree, int k) {
  if (k < 2) throw Error(Errc::bad_argument, "fix_improved requires k >= 2");
  return run_fix(tree, k, [](const SearchTree& t, const UnrootedTree& space, NodeId x) {
    NodeSet boundary_hull = space.convex_hull(NodeSet(t.boundary(x)));
    if (boundary_hull.contains(x)) return x;  // x is an admissible root; keep it
    std::vector<NodeId> anchor = t.boundary(x);
    insert_sorted(anchor, x);
    NodeSet hull = space.convex_hull(NodeSet(std::move(anchor)));
    return space.leaf_centroid(hull);
  });
}

}  // namespace stt
