#include "stt/rotation.hpp"

namespace stt {

std::vector<NodeId> RotationScript::rotate_at_nodes() const {
  std::vector<NodeId> out;
  out.reserve(steps.size());
  for (const RotationStep& s : steps) out.push_back(s.child);
  return out;
}

RotationScript RotationScript::reversed() const {
  RotationScript out;
  out.steps.reserve(steps.size());
  for (auto it = steps.rbegin(); it != steps.rend(); ++it)
    out.steps.push_back({it->parent, it->child});
  return out;
}

void apply_script(SearchTree& tree, const RotationScript& script) {
  for (const RotationStep& s : script.steps) {
    if (tree.parent(s.child) != s.parent)
      throw Error(Errc::bad_argument, "script does not match the tree");
    tree.rotate(s.child);
  }
}

RotationScript transform_1cut(const SearchTree& tree, NodeId r2) {
  if (!tree.is_k_cut(1)) throw Error(Errc::not_k_cut, "tree is not 1-cut");
  std::vector<NodeId> path = tree.path_from_root(r2);
  RotationScript script;
  for (std::size_t i = 1; i < path.size(); ++i) script.steps.push_back({path[i], path[i - 1]});
  return script;
}

namespace {

// First preorder node (smallest-id child first) whose subtree boundary has
// exactly k nodes; its parent then has boundary size k - 1.
NodeId find_full_boundary_node(const SearchTree& tree, int k) {
  std::vector<NodeId> stack{tree.root()};
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    if (tree.boundary_size(v) == k) return v;
    const auto& kids = tree.children(v);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return kNone;
}

RotationScript reduce_apply(SearchTree& tree, int k) {
  if (k < 2) throw Error(Errc::bad_argument, "reduce_cut needs k >= 2");
  if (!tree.is_k_cut(k)) throw Error(Errc::not_k_cut, "tree is not k-cut");
  RotationScript script;
  int n = tree.size();
  int guard = n + 1;
  for (;;) {
    NodeId q = find_full_boundary_node(tree, k);
    if (q == kNone) break;
    NodeId p = tree.parent(q);
    if (p == kNone || tree.boundary_size(p) != k - 1)
      throw Error(Errc::internal, "full-boundary node without a k-1 parent");
    script.steps.push_back({q, p});
    tree.rotate(q);
    if (tree.boundary_size(q) > k - 1 || tree.boundary_size(p) > k - 1)
      throw Error(Errc::internal, "reduction rotation failed to shrink boundaries");
    if (--guard < 0) throw Error(Errc::internal, "reduction did not terminate");
  }
  if (static_cast<int>(script.size()) > std::max(0, n - k))
    throw Error(Errc::internal, "reduction exceeded its rotation bound");
  return script;
}

}  // namespace

RotationScript reduce_cut(const SearchTree& tree, int k) {
  SearchTree work = tree;
  return reduce_apply(work, k);
}

RotationScript transform(const SearchTree& tree, const SearchTree& target, int k) {
  if (&tree.space() != &target.space())
    throw Error(Errc::space_mismatch, "trees live on different spaces");
  if (!tree.is_k_cut(k) || !target.is_k_cut(k))
    throw Error(Errc::not_k_cut, "both trees must be k-cut");
  if (tree.same_shape(target)) return {};

  SearchTree a = tree;
  RotationScript forward;
  for (int j = k; j >= 2; --j) {
    RotationScript level = reduce_apply(a, j);
    forward.steps.insert(forward.steps.end(), level.steps.begin(), level.steps.end());
  }
  SearchTree b = target;
  RotationScript back;
  for (int j = k; j >= 2; --j) {
    RotationScript level = reduce_apply(b, j);
    back.steps.insert(back.steps.end(), level.steps.begin(), level.steps.end());
  }
  RotationScript bridge = transform_1cut(a, b.root());
  apply_script(a, bridge);

  RotationScript full = forward;
  full.steps.insert(full.steps.end(), bridge.steps.begin(), bridge.steps.end());
  RotationScript reversed = back.reversed();
  full.steps.insert(full.steps.end(), reversed.steps.begin(), reversed.steps.end());

  apply_script(a, reversed);
  if (!a.same_shape(target))
    throw Error(Errc::internal, "transform script does not reproduce the target");
  return full;
}

ReduceStats reduce_cut_pointer(SearchTree& tree, int k, CostLedger& ledger,
                               std::vector<PointerOp>* trace, const PointerHook& hook) {
  if (k < 2) throw Error(Errc::bad_argument, "reduce_cut_pointer needs k >= 2");
  if (!tree.is_k_cut(k)) throw Error(Errc::not_k_cut, "tree is not k-cut");
  int n = tree.size();
  CostLedger before = ledger;
  std::vector<Mark> marks(n, Mark::unvisited);
  Pointer ptr{tree.root()};

  for (;;) {
    NodeId y = ptr.current;
    if (marks[y] == Mark::unvisited) marks[y] = Mark::visited;

    NodeId pick = kNone;
    for (NodeId c : tree.children(y)) {
      if (marks[c] == Mark::unvisited) {
        pick = c;
        break;
      }
      if (marks[c] == Mark::visited)
        throw Error(Errc::internal, "visited child below the pointer");
    }

    if (pick != kNone) {
      if (tree.boundary_size(pick) <= k - 1) {
        move_to_child(tree, ptr, pick, ledger);
        if (trace) trace->push_back({PointerOp::Kind::move_down, y, pick});
        if (hook) hook(tree, ptr, marks);
      } else {
        if (tree.boundary_size(pick) != k || tree.boundary_size(y) != k - 1)
          throw Error(Errc::internal, "rotation step outside its boundary precondition");
        rotate_child_at_pointer(tree, ptr, pick, ledger);
        marks[pick] = Mark::visited;
        if (trace) trace->push_back({PointerOp::Kind::rotate_child, y, pick});
        if (hook) hook(tree, ptr, marks);
      }
    } else {
      marks[y] = Mark::finished;
      if (y == tree.root()) break;
      NodeId par = tree.parent(y);
      move_to_parent(tree, ptr, ledger);
      if (trace) trace->push_back({PointerOp::Kind::move_up, y, par});
      if (hook) hook(tree, ptr, marks);
    }
  }

  if (!tree.is_k_cut(k - 1))
    throw Error(Errc::internal, "pointer reduction left the tree above k-1");
  ReduceStats stats{ledger.pointer_moves - before.pointer_moves,
                    ledger.rotations - before.rotations};
  if (stats.moves > 2LL * n || stats.rotations > std::max(0, n - k))
    throw Error(Errc::internal, "pointer reduction exceeded its operation bounds");
  return stats;
}

TransformStats transform_pointer(SearchTree& tree, const SearchTree& target, int k,
                                 CostLedger& ledger, const PointerHook& hook) {
  if (&tree.space() != &target.space())
    throw Error(Errc::space_mismatch, "trees live on different spaces");
  if (!tree.is_k_cut(k) || !target.is_k_cut(k))
    throw Error(Errc::not_k_cut, "both trees must be k-cut");
  CostLedger before = ledger;

  for (int j = k; j >= 2; --j) reduce_cut_pointer(tree, j, ledger, nullptr, hook);

  // Plan the target-side reduction off-line; only its inverse is executed
  // in the model.
  SearchTree planned = target;
  CostLedger scratch;
  std::vector<PointerOp> trace;
  for (int j = k; j >= 2; --j) reduce_cut_pointer(planned, j, scratch, &trace, nullptr);

  Pointer ptr{tree.root()};
  NodeId meet = planned.root();
  if (tree.root() != meet) {
    std::vector<NodeId> path = tree.path_from_root(meet);
    for (std::size_t i = 1; i < path.size(); ++i) {
      move_to_child(tree, ptr, path[i], ledger);
      rotate_at_pointer(tree, ptr, ledger);
    }
  }

  for (auto it = trace.rbegin(); it != trace.rend(); ++it) {
    switch (it->kind) {
      case PointerOp::Kind::move_down:
        if (ptr.current != it->b) throw Error(Errc::internal, "inverse replay lost the pointer");
        move_to_parent(tree, ptr, ledger);
        break;
      case PointerOp::Kind::move_up:
        if (ptr.current != it->b) throw Error(Errc::internal, "inverse replay lost the pointer");
        move_to_child(tree, ptr, it->a, ledger);
        break;
      case PointerOp::Kind::rotate_child:
        if (ptr.current != it->a || tree.parent(it->a) != it->b)
          throw Error(Errc::internal, "inverse replay lost the rotated edge");
        rotate_at_pointer(tree, ptr, ledger);
        break;
    }
  }

  if (!tree.same_shape(target))
    throw Error(Errc::internal, "pointer transformation missed the target");
  if (ptr.current != tree.root())
    throw Error(Errc::internal, "pointer did not return to the root");
  return {ledger.pointer_moves - before.pointer_moves, ledger.rotations - before.rotations};
}

}  // namespace stt
