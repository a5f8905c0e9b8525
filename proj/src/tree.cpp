#include "stt/tree.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace stt {

UnrootedTree::UnrootedTree(int n, const std::vector<std::pair<NodeId, NodeId>>& edges)
    : n_(n) {
  if (n < 1) throw Error(Errc::bad_argument, "tree needs at least one node");
  if (static_cast<int>(edges.size()) != n - 1)
    throw Error(edges.size() + 1 > static_cast<std::size_t>(n) ? Errc::cyclic : Errc::disconnected,
                "a tree on " + std::to_string(n) + " nodes needs exactly " +
                    std::to_string(n - 1) + " edges, got " + std::to_string(edges.size()));
  adj_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw Error(Errc::node_out_of_range,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    if (u == v)
      throw Error(Errc::self_loop, "self loop at node " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw Error(Errc::duplicate_edge, "duplicate edge");
  }

  // Depth / Euler tour from node 0; doubles as the connectivity check.
  depth_.assign(n, -1);
  first_.assign(n, -1);
  tour_.clear();
  tour_.reserve(2 * n);
  std::vector<std::pair<NodeId, std::size_t>> stack;  // node, next neighbor index
  depth_[0] = 0;
  stack.push_back({0, 0});
  first_[0] = 0;
  tour_.push_back(0);
  while (!stack.empty()) {
    auto& [v, idx] = stack.back();
    if (idx < adj_[v].size()) {
      NodeId u = adj_[v][idx++];
      if (depth_[u] != -1) continue;
      depth_[u] = depth_[v] + 1;
      first_[u] = static_cast<int>(tour_.size());
      tour_.push_back(u);
      stack.push_back({u, 0});
    } else {
      stack.pop_back();
      if (!stack.empty()) tour_.push_back(stack.back().first);
    }
  }
  for (int v = 0; v < n; ++v)
    if (depth_[v] == -1)
      throw Error(Errc::disconnected, "edge list does not connect node " + std::to_string(v));

  int m = static_cast<int>(tour_.size());
  log2_.assign(m + 1, 0);
  for (int i = 2; i <= m; ++i) log2_[i] = log2_[i / 2] + 1;
  int levels = log2_[m] + 1;
  sparse_.assign(levels, std::vector<int>(m));
  for (int i = 0; i < m; ++i) sparse_[0][i] = i;
  for (int j = 1; j < levels; ++j) {
    for (int i = 0; i + (1 << j) <= m; ++i) {
      int a = sparse_[j - 1][i];
      int b = sparse_[j - 1][i + (1 << (j - 1))];
      sparse_[j][i] = depth_[tour_[a]] <= depth_[tour_[b]] ? a : b;
    }
  }
}

void UnrootedTree::check_node(NodeId v) const {
  if (v < 0 || v >= n_)
    throw Error(Errc::node_out_of_range, "node " + std::to_string(v) + " out of range");
}

const std::vector<NodeId>& UnrootedTree::neighbors(NodeId v) const {
  check_node(v);
  return adj_[v];
}

bool UnrootedTree::adjacent(NodeId u, NodeId v) const {
  check_node(u);
  check_node(v);
  return contains_sorted(adj_[u], v);
}

NodeId UnrootedTree::lca(NodeId a, NodeId b) const {
  int l = first_[a], r = first_[b];
  if (l > r) std::swap(l, r);
  ++r;
  int j = log2_[r - l];
  int x = sparse_[j][l];
  int y = sparse_[j][r - (1 << j)];
  return depth_[tour_[x]] <= depth_[tour_[y]] ? tour_[x] : tour_[y];
}

int UnrootedTree::path_length(NodeId a, NodeId b) const {
  check_node(a);
  check_node(b);
  return depth_[a] + depth_[b] - 2 * depth_[lca(a, b)];
}

bool UnrootedTree::separates(NodeId z, NodeId x, NodeId y) const {
  check_node(z);
  check_node(x);
  check_node(y);
  if (x == z || y == z)
    throw Error(Errc::bad_argument, "separates requires x != z and y != z");
  return path_length(x, z) + path_length(z, y) == path_length(x, y);
}

NodeSet UnrootedTree::component_with(NodeId removed, NodeId target) const {
  check_node(removed);
  check_node(target);
  if (removed == target)
    throw Error(Errc::bad_argument, "component_with requires target != removed");
  std::vector<char> seen(n_, 0);
  seen[removed] = 1;
  seen[target] = 1;
  std::vector<NodeId> out{target}, queue{target};
  while (!queue.empty()) {
    NodeId v = queue.back();
    queue.pop_back();
    for (NodeId u : adj_[v]) {
      if (seen[u]) continue;
      seen[u] = 1;
      out.push_back(u);
      queue.push_back(u);
    }
  }
  return NodeSet(std::move(out));
}

bool UnrootedTree::induced_connected(const NodeSet& A) const {
  if (A.empty()) return false;
  std::vector<char> in(n_, 0);
  for (NodeId v : A) {
    check_node(v);
    in[v] = 1;
  }
  std::vector<NodeId> queue{A.front()};
  std::vector<char> seen(n_, 0);
  seen[A.front()] = 1;
  std::size_t count = 1;
  while (!queue.empty()) {
    NodeId v = queue.back();
    queue.pop_back();
    for (NodeId u : adj_[v]) {
      if (!in[u] || seen[u]) continue;
      seen[u] = 1;
      ++count;
      queue.push_back(u);
    }
  }
  return count == A.size();
}

std::vector<NodeSet> UnrootedTree::components_of_induced(const NodeSet& A, NodeId r) const {
  check_node(r);
  if (!A.contains(r))
    throw Error(Errc::bad_argument, "root " + std::to_string(r) + " not in set");
  if (!induced_connected(A))
    throw Error(Errc::bad_argument, "induced subgraph is not connected");
  std::vector<char> in(n_, 0);
  for (NodeId v : A) in[v] = 1;
  in[r] = 0;
  std::vector<char> seen(n_, 0);
  std::vector<NodeSet> comps;
  for (NodeId s : A) {
    if (s == r || seen[s]) continue;
    std::vector<NodeId> comp{s}, queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      NodeId v = queue.back();
      queue.pop_back();
      for (NodeId u : adj_[v]) {
        if (!in[u] || seen[u]) continue;
        seen[u] = 1;
        comp.push_back(u);
        queue.push_back(u);
      }
    }
    comps.emplace_back(std::move(comp));
  }
  // Seeds are taken in ascending id order, so components already come out
  // ordered by smallest member.
  return comps;
}

NodeSet UnrootedTree::convex_hull(const NodeSet& A) const {
  if (A.empty()) throw Error(Errc::bad_argument, "convex hull of empty set");
  NodeId a0 = A.front();
  check_node(a0);
  std::vector<NodeId> par(n_, kNone);
  std::vector<char> seen(n_, 0);
  seen[a0] = 1;
  std::vector<NodeId> queue{a0};
  std::size_t head = 0;
  while (head < queue.size()) {
    NodeId v = queue[head++];
    for (NodeId u : adj_[v]) {
      if (seen[u]) continue;
      seen[u] = 1;
      par[u] = v;
      queue.push_back(u);
    }
  }
  std::vector<char> mark(n_, 0);
  mark[a0] = 1;
  std::vector<NodeId> hull{a0};
  for (NodeId a : A) {
    check_node(a);
    NodeId v = a;
    while (!mark[v]) {
      mark[v] = 1;
      hull.push_back(v);
      v = par[v];
    }
  }
  return NodeSet(std::move(hull));
}

NodeId UnrootedTree::leaf_centroid(const NodeSet& A) const {
  if (A.size() < 3)
    throw Error(Errc::bad_argument, "leaf centroid needs at least 3 nodes");
  if (!induced_connected(A))
    throw Error(Errc::bad_argument, "induced subgraph is not connected");
  std::vector<char> in(n_, 0);
  for (NodeId v : A) in[v] = 1;
  auto deg_in = [&](NodeId v) {
    int d = 0;
    for (NodeId u : adj_[v])
      if (in[u]) ++d;
    return d;
  };

  int total_leaves = 0;
  for (NodeId v : A)
    if (deg_in(v) == 1) ++total_leaves;

  // Rooted pass over S[A]: subtree sizes and S[A]-leaf counts.
  NodeId root = A.front();
  std::vector<NodeId> order, par(n_, kNone);
  std::vector<char> seen(n_, 0);
  order.reserve(A.size());
  order.push_back(root);
  seen[root] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    NodeId v = order[i];
    for (NodeId u : adj_[v]) {
      if (!in[u] || seen[u]) continue;
      seen[u] = 1;
      par[u] = v;
      order.push_back(u);
    }
  }
  std::vector<int> sz(n_, 0), lc(n_, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    NodeId v = *it;
    sz[v] += 1;
    if (deg_in(v) == 1) lc[v] += 1;
    if (par[v] != kNone) {
      sz[par[v]] += sz[v];
      lc[par[v]] += lc[v];
    }
  }

  // t(v): lexicographically largest (leaf count, size) over the components
  // of S[A] minus v.
  auto tuple_of = [&](NodeId v) {
    std::pair<int, int> best{-1, -1};
    for (NodeId u : adj_[v]) {
      if (!in[u]) continue;
      std::pair<int, int> t =
          par[u] == v ? std::pair<int, int>{lc[u], sz[u]}
                      : std::pair<int, int>{total_leaves - lc[v],
                                            static_cast<int>(A.size()) - sz[v]};
      best = std::max(best, t);
    }
    return best;
  };

  NodeId v = kNone;
  for (NodeId cand : A) {
    if (deg_in(cand) >= 2) {
      v = cand;
      break;
    }
  }
  if (v == kNone) throw Error(Errc::internal, "connected set of size >= 3 without inner node");

  auto tv = tuple_of(v);
  for (;;) {
    NodeId best_u = kNone;
    std::pair<int, int> best_t{0, 0};
    for (NodeId u : adj_[v]) {
      if (!in[u]) continue;
      auto tu = tuple_of(u);
      if (best_u == kNone || tu < best_t) {
        best_u = u;
        best_t = tu;
      }
    }
    if (best_u == kNone || !(best_t < tv)) break;
    v = best_u;
    tv = best_t;
  }
  return v;
}

UnrootedTree UnrootedTree::parse(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line())
    throw Error(Errc::parse, "line 1: expected node count");
  int n = 0;
  {
    std::istringstream ls(line);
    std::string extra;
    if (!(ls >> n) || (ls >> extra))
      throw Error(Errc::parse, "line " + std::to_string(lineno) + ": expected node count");
  }
  if (n < 1)
    throw Error(Errc::parse, "line " + std::to_string(lineno) + ": node count must be positive");
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(n - 1);
  for (int i = 0; i < n - 1; ++i) {
    if (!next_line())
      throw Error(Errc::parse, "line " + std::to_string(lineno + 1) + ": expected edge " +
                                   std::to_string(i + 1) + " of " + std::to_string(n - 1));
    std::istringstream ls(line);
    NodeId u, v;
    std::string extra;
    if (!(ls >> u >> v) || (ls >> extra))
      throw Error(Errc::parse, "line " + std::to_string(lineno) + ": expected \"u v\"");
    edges.emplace_back(u, v);
  }
  try {
    return UnrootedTree(n, edges);
  } catch (const Error& e) {
    throw Error(e.code(), std::string("tree file: ") + e.what());
  }
}

UnrootedTree UnrootedTree::parse_string(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

std::string UnrootedTree::format() const {
  std::ostringstream out;
  out << n_ << "\n";
  for (NodeId u = 0; u < n_; ++u)
    for (NodeId v : adj_[u])
      if (u < v) out << u << " " << v << "\n";
  return out.str();
}

}  // namespace stt
