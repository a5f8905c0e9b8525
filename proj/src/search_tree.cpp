#include "stt/search_tree.hpp"

#include <istream>
#include <sstream>

namespace stt {

std::string format_ledger_csv(const CostLedger& ledger) {
  std::ostringstream out;
  out << "moves,rotations,searches,oracle_calls\n";
  out << ledger.pointer_moves << "," << ledger.rotations << "," << ledger.searches << ","
      << ledger.oracle_calls << "\n";
  return out.str();
}

void SearchTree::check_node(NodeId v) const {
  if (v < 0 || v >= size())
    throw Error(Errc::node_out_of_range, "node " + std::to_string(v) + " out of range");
}

SearchTree SearchTree::rooted_at(const UnrootedTree& space, NodeId root) {
  if (root < 0 || root >= space.size())
    throw Error(Errc::node_out_of_range, "root out of range");
  SearchTree t;
  t.space_ = &space;
  t.root_ = root;
  int n = space.size();
  t.parent_.assign(n, kNone);
  t.children_.assign(n, {});
  t.boundary_.assign(n, {});
  std::vector<char> seen(n, 0);
  seen[root] = 1;
  std::vector<NodeId> queue{root};
  std::size_t head = 0;
  while (head < queue.size()) {
    NodeId v = queue[head++];
    for (NodeId u : space.neighbors(v)) {
      if (seen[u]) continue;
      seen[u] = 1;
      t.parent_[u] = v;
      t.children_[v].push_back(u);  // space neighbors are sorted already
      t.boundary_[u] = {v};
      queue.push_back(u);
    }
  }
  return t;
}

SearchTree SearchTree::from_parents(const UnrootedTree& space, const std::vector<NodeId>& parents) {
  int n = space.size();
  if (static_cast<int>(parents.size()) != n)
    throw Error(Errc::bad_argument, "parent vector size mismatch");
  SearchTree t;
  t.space_ = &space;
  t.parent_ = parents;
  t.children_.assign(n, {});
  t.boundary_.assign(n, {});
  t.root_ = kNone;
  for (NodeId v = 0; v < n; ++v) {
    NodeId p = parents[v];
    if (p == kNone) {
      if (t.root_ != kNone) throw Error(Errc::bad_argument, "multiple roots");
      t.root_ = v;
    } else {
      if (p < 0 || p >= n) throw Error(Errc::node_out_of_range, "parent out of range");
      insert_sorted(t.children_[p], v);
    }
  }
  if (t.root_ == kNone) throw Error(Errc::bad_argument, "no root");
  // Reachability from the root doubles as the cycle check.
  std::vector<char> seen(n, 0);
  std::vector<NodeId> queue{t.root_};
  seen[t.root_] = 1;
  std::size_t head = 0;
  while (head < queue.size()) {
    NodeId v = queue[head++];
    for (NodeId c : t.children_[v]) {
      seen[c] = 1;
      queue.push_back(c);
    }
  }
  if (static_cast<int>(queue.size()) != n)
    throw Error(Errc::cyclic, "parent vector contains a cycle");
  for (NodeId v = 0; v < n; ++v) t.boundary_[v] = boundary_brute(t, v);
  return t;
}

int SearchTree::depth(NodeId x) const {
  check_node(x);
  int d = 1;
  while (parent_[x] != kNone) {
    x = parent_[x];
    ++d;
  }
  return d;
}

std::vector<int> SearchTree::depths() const {
  std::vector<int> d(size(), 0);
  std::vector<NodeId> queue{root_};
  d[root_] = 1;
  std::size_t head = 0;
  while (head < queue.size()) {
    NodeId v = queue[head++];
    for (NodeId c : children_[v]) {
      d[c] = d[v] + 1;
      queue.push_back(c);
    }
  }
  return d;
}

std::vector<NodeId> SearchTree::path_from_root(NodeId x) const {
  check_node(x);
  std::vector<NodeId> path;
  for (NodeId v = x; v != kNone; v = parent_[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

NodeSet SearchTree::subtree_nodes(NodeId x) const {
  check_node(x);
  std::vector<NodeId> out{x}, queue{x};
  std::size_t head = 0;
  while (head < queue.size()) {
    NodeId v = queue[head++];
    for (NodeId c : children_[v]) {
      out.push_back(c);
      queue.push_back(c);
    }
  }
  return NodeSet(std::move(out));
}

void SearchTree::rotate(NodeId x, CostLedger* ledger) {
  check_node(x);
  NodeId p = parent_[x];
  if (p == kNone) throw Error(Errc::rotate_root, "cannot rotate the root");
  NodeId gp = parent_[p];

  // The child of x whose subtree holds the space-neighbor of p, if any,
  // moves over to p. One separation query per child.
  NodeId transfer = kNone;
  for (NodeId y : children_[x]) {
    if (ledger) ++ledger->oracle_calls;
    if (!space_->separates(x, p, y)) {
      transfer = y;
      break;
    }
  }

  erase_sorted(children_[p], x);
  if (transfer != kNone) {
    erase_sorted(children_[x], transfer);
    insert_sorted(children_[p], transfer);
    parent_[transfer] = p;
  }
  parent_[x] = gp;
  if (gp != kNone) {
    erase_sorted(children_[gp], p);
    insert_sorted(children_[gp], x);
  } else {
    root_ = x;
  }
  parent_[p] = x;
  insert_sorted(children_[x], p);

  // x inherits p's old boundary; p keeps the part on its own side plus x.
  std::vector<NodeId> old_bp = std::move(boundary_[p]);
  std::vector<NodeId> new_bp{x};
  for (NodeId u : old_bp) {
    if (ledger) ++ledger->oracle_calls;
    if (!space_->separates(x, u, p)) insert_sorted(new_bp, u);
  }
  boundary_[x] = std::move(old_bp);
  boundary_[p] = std::move(new_bp);
}

int SearchTree::max_boundary_size() const {
  int m = 0;
  for (const auto& b : boundary_) m = std::max(m, static_cast<int>(b.size()));
  return m;
}

bool SearchTree::is_k_cut(int k) const {
  if (k < 1) throw Error(Errc::bad_argument, "k must be at least 1");
  return max_boundary_size() <= k;
}

bool SearchTree::validate() const {
  int n = size();
  for (NodeId v = 0; v < n; ++v)
    for (NodeId c : children_[v])
      if (parent_[c] != v) return false;
  if (root_ == kNone || parent_[root_] != kNone) return false;

  // Subtree node sets, bottom-up.
  std::vector<NodeSet> sub(n);
  std::vector<NodeId> order{root_};
  std::size_t head = 0;
  while (head < order.size()) {
    NodeId v = order[head++];
    for (NodeId c : children_[v]) order.push_back(c);
  }
  if (static_cast<int>(order.size()) != n) return false;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::vector<NodeId> ids{*it};
    for (NodeId c : children_[*it])
      ids.insert(ids.end(), sub[c].begin(), sub[c].end());
    sub[*it] = NodeSet(std::move(ids));
  }

  // Each node's child subtrees must be exactly the components of the
  // induced subtree minus the node.
  for (NodeId v : order) {
    if (!space_->induced_connected(sub[v])) return false;
    std::vector<NodeSet> comps;
    try {
      comps = space_->components_of_induced(sub[v], v);
    } catch (const Error&) {
      return false;
    }
    if (comps.size() != children_[v].size()) return false;
    std::vector<NodeSet> childsets;
    childsets.reserve(children_[v].size());
    for (NodeId c : children_[v]) childsets.push_back(sub[c]);
    std::sort(childsets.begin(), childsets.end());
    std::sort(comps.begin(), comps.end());
    if (childsets != comps) return false;
  }
  return true;
}

std::vector<NodeId> boundary_brute(const SearchTree& tree, NodeId x) {
  NodeSet inside = tree.subtree_nodes(x);
  std::vector<NodeId> out;
  for (NodeId v : inside)
    for (NodeId u : tree.space().neighbors(v))
      if (!inside.contains(u) && !contains_sorted(out, u)) insert_sorted(out, u);
  return out;
}

bool steiner_closed_direct(const SearchTree& tree) {
  const UnrootedTree& space = tree.space();
  for (NodeId x = 0; x < tree.size(); ++x) {
    NodeSet path(tree.path_from_root(x));
    NodeSet hull = space.convex_hull(path);
    for (NodeId h : hull) {
      if (path.contains(h)) continue;
      int inside = 0;
      for (NodeId u : space.neighbors(h))
        if (hull.contains(u)) ++inside;
      if (inside != 2) return false;
    }
  }
  return true;
}

void begin_search(const SearchTree& tree, Pointer& ptr, CostLedger& ledger) {
  ptr.current = tree.root();
  ++ledger.searches;
}

void move_to_parent(const SearchTree& tree, Pointer& ptr, CostLedger& ledger) {
  NodeId p = tree.parent(ptr.current);
  if (p == kNone) throw Error(Errc::illegal_move, "pointer already at root");
  ptr.current = p;
  ++ledger.pointer_moves;
}

void move_to_child(const SearchTree& tree, Pointer& ptr, NodeId child, CostLedger& ledger) {
  if (!contains_sorted(tree.children(ptr.current), child))
    throw Error(Errc::illegal_move,
                std::to_string(child) + " is not a child of the pointer node");
  ptr.current = child;
  ++ledger.pointer_moves;
}

void rotate_at_pointer(SearchTree& tree, Pointer& ptr, CostLedger& ledger) {
  tree.rotate(ptr.current, &ledger);
  ++ledger.rotations;
}

void rotate_child_at_pointer(SearchTree& tree, Pointer& ptr, NodeId child, CostLedger& ledger) {
  if (!contains_sorted(tree.children(ptr.current), child))
    throw Error(Errc::illegal_move,
                std::to_string(child) + " is not a child of the pointer node");
  tree.rotate(child, &ledger);
  ++ledger.rotations;
}

void serve_static(const SearchTree& tree, const std::vector<NodeId>& searches,
                  CostLedger& ledger) {
  Pointer ptr;
  for (NodeId x : searches) {
    begin_search(tree, ptr, ledger);
    std::vector<NodeId> path = tree.path_from_root(x);
    for (std::size_t i = 1; i < path.size(); ++i) move_to_child(tree, ptr, path[i], ledger);
  }
}

std::string SearchTree::format() const {
  std::ostringstream out;
  out << size() << "\n" << root_ << "\n";
  for (NodeId v = 0; v < size(); ++v)
    if (parent_[v] != kNone) out << v << " " << parent_[v] << "\n";
  return out.str();
}

SearchTree SearchTree::parse(std::istream& in, const UnrootedTree& space) {
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
    }
    return false;
  };
  auto fail = [&](const std::string& msg) -> void {
    throw Error(Errc::parse, "line " + std::to_string(lineno) + ": " + msg);
  };
  if (!next_line()) throw Error(Errc::parse, "line 1: expected node count");
  int n = 0;
  {
    std::istringstream ls(line);
    std::string extra;
    if (!(ls >> n) || (ls >> extra)) fail("expected node count");
  }
  if (n != space.size()) fail("node count does not match the search space");
  if (!next_line()) throw Error(Errc::parse, "expected root id");
  NodeId root;
  {
    std::istringstream ls(line);
    std::string extra;
    if (!(ls >> root) || (ls >> extra)) fail("expected root id");
  }
  std::vector<NodeId> parents(n, kNone);
  std::vector<char> assigned(n, 0);
  if (root < 0 || root >= n) fail("root out of range");
  assigned[root] = 1;
  for (int i = 0; i < n - 1; ++i) {
    if (!next_line())
      throw Error(Errc::parse, "expected " + std::to_string(n - 1) + " child/parent lines");
    std::istringstream ls(line);
    NodeId c, p;
    std::string extra;
    if (!(ls >> c >> p) || (ls >> extra)) fail("expected \"child parent\"");
    if (c < 0 || c >= n || p < 0 || p >= n) fail("node out of range");
    if (assigned[c]) fail("node " + std::to_string(c) + " assigned twice");
    assigned[c] = 1;
    parents[c] = p;
  }
  return from_parents(space, parents);
}

SearchTree SearchTree::parse_string(const std::string& text, const UnrootedTree& space) {
  std::istringstream in(text);
  return parse(in, space);
}

}  // namespace stt
