#include "stt/splay.hpp"

#include "stt/kcut.hpp"

namespace stt {

namespace {

StepKind classify(const SearchTree& tree, NodeId x, NodeId y, CostLedger* ledger) {
  NodeId p = tree.parent(x);
  if (p == kNone) throw Error(Errc::bad_argument, "cannot classify a step at the root");
  if (tree.parent(p) == y) return StepKind::zig;
  NodeId g = tree.parent(p);
  const UnrootedTree& space = tree.space();
  if (ledger) ++ledger->oracle_calls;
  if (space.separates(p, x, g)) return StepKind::zigzig;
  if (ledger) ++ledger->oracle_calls;
  if (space.separates(x, p, g)) return StepKind::zigzag;
  throw Error(Errc::non_separating_triple,
              "none of x, parent, grandparent separates the other two");
}

void rotate_step(SearchTree& tree, NodeId x, Pointer* ptr, CostLedger* ledger,
                 SplayObserver* obs) {
  NodeId old_parent = tree.parent(x);
  if (ptr && ledger) {
    if (ptr->current == x) {
      rotate_at_pointer(tree, *ptr, *ledger);
    } else if (ptr->current == old_parent) {
      rotate_child_at_pointer(tree, *ptr, x, *ledger);
    } else {
      throw Error(Errc::internal, "pointer not adjacent to the rotated edge");
    }
  } else {
    tree.rotate(x, ledger);
  }
  if (obs) obs->after_rotation(tree, x, old_parent);
}

}  // namespace

StepKind classify_step(const SearchTree& tree, NodeId x, NodeId y) {
  return classify(tree, x, y, nullptr);
}

void splay(SearchTree& tree, NodeId x, NodeId y, SplayObserver* obs, Pointer* ptr,
           CostLedger* ledger) {
  if (ptr && ptr->current != x)
    throw Error(Errc::bad_argument, "splay expects the pointer on the splayed node");
  if (obs) obs->before_splay(tree, x, y);
  int z_steps = 0;
  while (tree.parent(x) != y) {
    StepKind kind = classify(tree, x, y, ledger);
    if (obs) obs->before_step(tree, kind, x);
    switch (kind) {
      case StepKind::zig:
        rotate_step(tree, x, ptr, ledger, obs);
        break;
      case StepKind::zigzig: {
        NodeId p = tree.parent(x);
        if (ptr && ledger) {
          // Pointer rides up to the parent, both rotations happen on edges
          // incident to it, then it returns to x.
          move_to_parent(tree, *ptr, *ledger);
          rotate_step(tree, p, ptr, ledger, obs);
          rotate_step(tree, x, ptr, ledger, obs);
          move_to_parent(tree, *ptr, *ledger);
        } else {
          rotate_step(tree, p, ptr, ledger, obs);
          rotate_step(tree, x, ptr, ledger, obs);
        }
        ++z_steps;
        break;
      }
      case StepKind::zigzag:
        rotate_step(tree, x, ptr, ledger, obs);
        rotate_step(tree, x, ptr, ledger, obs);
        ++z_steps;
        break;
    }
    if (obs) obs->after_step(tree, kind, x);
  }
  if (ptr && ptr->current != x)
    throw Error(Errc::internal, "pointer drifted off the splayed node");
  if (obs) obs->after_splay(tree, x, y, z_steps);
}

std::vector<NodeId> branching_nodes(const SearchTree& tree, NodeId x) {
  std::vector<NodeId> path = tree.path_from_root(x);
  std::vector<NodeId> out;
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (tree.boundary_size(path[i]) == 2 && tree.boundary_size(path[i + 1]) == 1)
      out.push_back(path[i]);
  return out;
}

SearchStats search(SearchTree& tree, NodeId x, CostLedger& ledger, SplayObserver* obs) {
  SearchStats stats;
  Pointer ptr;
  begin_search(tree, ptr, ledger);

  std::vector<NodeId> path = tree.path_from_root(x);
  stats.depth_before = static_cast<int>(path.size());
  for (std::size_t i = 1; i < path.size(); ++i) move_to_child(tree, ptr, path[i], ledger);

  std::vector<NodeId> branch = branching_nodes(tree, x);
  stats.branching = static_cast<int>(branch.size());

  CostLedger before = ledger;
  struct Counter : SplayObserver {
    SearchStats* s;
    SplayObserver* inner;
    void after_rotation(const SearchTree& t, NodeId a, NodeId b) override {
      if (inner) inner->after_rotation(t, a, b);
    }
    void before_step(const SearchTree& t, StepKind k, NodeId a) override {
      if (inner) inner->before_step(t, k, a);
    }
    void after_step(const SearchTree& t, StepKind k, NodeId a) override {
      switch (k) {
        case StepKind::zig: ++s->zig; break;
        case StepKind::zigzig: ++s->zigzig; break;
        case StepKind::zigzag: ++s->zigzag; break;
      }
      if (inner) inner->after_step(t, k, a);
    }
    void before_splay(const SearchTree& t, NodeId a, NodeId b) override {
      if (inner) inner->before_splay(t, a, b);
    }
    void after_splay(const SearchTree& t, NodeId a, NodeId b, int z) override {
      if (inner) inner->after_splay(t, a, b, z);
    }
  } counter;
  counter.s = &stats;
  counter.inner = obs;

  // Phase 1: walk back up, removing branching nodes bottom to top.
  for (int i = static_cast<int>(branch.size()) - 1; i >= 0; --i) {
    NodeId target = branch[i];
    NodeId stop = i > 0 ? branch[i - 1] : kNone;
    while (ptr.current != target) move_to_parent(tree, ptr, ledger);
    splay(tree, target, stop, &counter, &ptr, &ledger);
  }

  // Phase 2: splay x itself to the root.
  if (!branch.empty()) {
    std::vector<NodeId> down = tree.path_from_root(x);
    if (ptr.current != down.front()) throw Error(Errc::internal, "pointer lost after phase 1");
    for (std::size_t i = 1; i < down.size(); ++i) move_to_child(tree, ptr, down[i], ledger);
  }
  splay(tree, x, kNone, &counter, &ptr, &ledger);

  if (tree.root() != x) throw Error(Errc::internal, "search did not finish at the root");
  stats.rotations = ledger.rotations - before.rotations;
  return stats;
}

void serve(SearchTree& tree, const std::vector<NodeId>& searches, CostLedger& ledger,
           SplayObserver* obs) {
  if (!tree.is_steiner_closed()) tree = steinerize(tree);
  for (NodeId x : searches) search(tree, x, ledger, obs);
}

}  // namespace stt
