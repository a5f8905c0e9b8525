#include "stt/opt.hpp"

#include <bit>
#include <istream>
#include <map>
#include <sstream>
#include <unordered_map>

namespace stt {

FrequencyMap::FrequencyMap(int n, const std::vector<long long>& counts) : counts_(counts) {
  if (static_cast<int>(counts.size()) != n)
    throw Error(Errc::bad_argument, "frequency vector size mismatch");
  for (long long c : counts)
    if (c < 0) throw Error(Errc::bad_argument, "negative frequency");
}

FrequencyMap FrequencyMap::uniform(int n, long long c) {
  FrequencyMap f(n);
  for (NodeId v = 0; v < n; ++v) f.counts_[v] = c;
  return f;
}

FrequencyMap FrequencyMap::from_sequence(int n, const std::vector<NodeId>& seq) {
  FrequencyMap f(n);
  for (NodeId v : seq) {
    if (v < 0 || v >= n) throw Error(Errc::node_out_of_range, "sequence node out of range");
    ++f.counts_[v];
  }
  return f;
}

void FrequencyMap::set(NodeId v, long long c) {
  if (v < 0 || v >= size()) throw Error(Errc::node_out_of_range, "node out of range");
  if (c < 0) throw Error(Errc::bad_argument, "negative frequency");
  counts_[v] = c;
}

long long FrequencyMap::total() const {
  long long t = 0;
  for (long long c : counts_) t += c;
  return t;
}

FrequencyMap FrequencyMap::parse(std::istream& in, int n) {
  FrequencyMap f(n);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    std::istringstream ls(line);
    NodeId v;
    long long c;
    std::string extra;
    if (!(ls >> v >> c) || (ls >> extra))
      throw Error(Errc::parse, "line " + std::to_string(lineno) + ": expected \"node count\"");
    if (v < 0 || v >= n)
      throw Error(Errc::parse, "line " + std::to_string(lineno) + ": node out of range");
    if (c < 0)
      throw Error(Errc::parse, "line " + std::to_string(lineno) + ": negative count");
    f.counts_[v] = c;
  }
  return f;
}

std::string FrequencyMap::format() const {
  std::ostringstream out;
  for (NodeId v = 0; v < size(); ++v)
    if (counts_[v] != 0) out << v << " " << counts_[v] << "\n";
  return out.str();
}

std::vector<NodeId> AdmissibleSet::boundary() const {
  std::vector<NodeId> b;
  for (auto& [u, v] : cut)
    if (!contains_sorted(b, u)) insert_sorted(b, u);
  return b;
}

namespace {

std::vector<std::pair<NodeId, NodeId>> space_edges(const UnrootedTree& space) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u = 0; u < space.size(); ++u)
    for (NodeId v : space.neighbors(u))
      if (u < v) edges.emplace_back(u, v);
  return edges;
}

// Cut of a component, scanned from its nodes.
std::vector<std::pair<NodeId, NodeId>> cut_of(const UnrootedTree& space,
                                              const std::vector<NodeId>& nodes,
                                              const std::vector<char>& membership) {
  std::vector<std::pair<NodeId, NodeId>> cut;
  for (NodeId v : nodes)
    for (NodeId u : space.neighbors(v))
      if (!membership[u]) cut.emplace_back(u, v);
  std::sort(cut.begin(), cut.end());
  return cut;
}

}  // namespace

std::vector<AdmissibleSet> enumerate_admissible(const UnrootedTree& space, int k) {
  if (k < 1) throw Error(Errc::bad_argument, "k must be at least 1");
  int n = space.size();
  std::vector<AdmissibleSet> out;

  std::vector<NodeId> all(n);
  for (NodeId v = 0; v < n; ++v) all[v] = v;
  out.push_back({{}, NodeSet(all)});

  auto edges = space_edges(space);
  int m = static_cast<int>(edges.size());
  int max_cut = std::min(k, m);

  std::vector<char> removed(m, 0), seen(n, 0), member(n, 0);
  std::vector<int> choice;
  // All edge subsets of size 1..k; every component of the split that touches
  // each removed edge exactly once is one admissible set, keyed by that cut.
  auto emit_components = [&]() {
    std::fill(seen.begin(), seen.end(), 0);
    for (NodeId s = 0; s < n; ++s) {
      if (seen[s]) continue;
      std::vector<NodeId> comp{s}, queue{s};
      seen[s] = 1;
      std::size_t head = 0;
      while (head < queue.size()) {
        NodeId v = queue[head++];
        for (NodeId u : space.neighbors(v)) {
          auto e = std::minmax(v, u);
          // Removed edges are skipped; identify by endpoints.
          bool skip = false;
          for (int ei : choice) {
            if (edges[ei].first == e.first && edges[ei].second == e.second) {
              skip = true;
              break;
            }
          }
          if (skip || seen[u]) continue;
          seen[u] = 1;
          comp.push_back(u);
          queue.push_back(u);
        }
      }
      std::fill(member.begin(), member.end(), 0);
      for (NodeId v : comp) member[v] = 1;
      bool canonical = true;
      for (int ei : choice) {
        int inside = (member[edges[ei].first] ? 1 : 0) + (member[edges[ei].second] ? 1 : 0);
        if (inside != 1) {
          canonical = false;
          break;
        }
      }
      if (!canonical) continue;
      std::sort(comp.begin(), comp.end());
      AdmissibleSet a;
      a.cut = cut_of(space, comp, member);
      a.nodes = NodeSet(std::move(comp));
      out.push_back(std::move(a));
    }
  };

  // Iterative combination enumeration over edge indices.
  for (int j = 1; j <= max_cut; ++j) {
    choice.assign(j, 0);
    for (int i = 0; i < j; ++i) choice[i] = i;
    if (j > m) break;
    for (;;) {
      emit_components();
      int i = j - 1;
      while (i >= 0 && choice[i] == m - j + i) --i;
      if (i < 0) break;
      ++choice[i];
      for (int t = i + 1; t < j; ++t) choice[t] = choice[t - 1] + 1;
    }
  }

  std::sort(out.begin(), out.end(), [](const AdmissibleSet& a, const AdmissibleSet& b) {
    if (a.nodes.size() != b.nodes.size()) return a.nodes.size() < b.nodes.size();
    return a.nodes < b.nodes;
  });
  return out;
}

std::vector<NodeId> admissible_roots(const UnrootedTree& space, const AdmissibleSet& A, int k) {
  if (k < 2) throw Error(Errc::bad_argument, "admissible roots need k >= 2");
  std::vector<NodeId> boundary = A.boundary();
  if (static_cast<int>(boundary.size()) > k)
    throw Error(Errc::bad_argument, "set is not k-admissible");
  if (static_cast<int>(boundary.size()) < k) return A.nodes.ids();
  NodeSet hull = space.convex_hull(NodeSet(boundary));
  std::vector<NodeId> roots;
  for (NodeId v : A.nodes)
    if (hull.contains(v)) roots.push_back(v);
  return roots;
}

long long static_cost(const SearchTree& tree, const FrequencyMap& freq) {
  if (freq.size() != tree.size()) throw Error(Errc::bad_argument, "frequency size mismatch");
  std::vector<int> d = tree.depths();
  long long cost = 0;
  for (NodeId v = 0; v < tree.size(); ++v) cost += freq.at(v) * d[v];
  return cost;
}

namespace {

struct DpEntry {
  NodeId best_root = kNone;
  long long best_cost = 0;
  long long weight = 0;  // sum of frequencies over the set
};

}  // namespace

OptResult opt_kcut(const UnrootedTree& space, int k, const FrequencyMap& freq, DpStats* stats) {
  if (k < 2)
    throw Error(Errc::bad_argument,
                "opt_kcut requires k >= 2 (rooted versions cannot approximate the optimum)");
  if (freq.size() != space.size()) throw Error(Errc::bad_argument, "frequency size mismatch");
  int n = space.size();

  std::vector<AdmissibleSet> sets = enumerate_admissible(space, k);
  std::map<std::vector<std::pair<NodeId, NodeId>>, int> index;
  for (int i = 0; i < static_cast<int>(sets.size()); ++i) index[sets[i].cut] = i;

  std::vector<DpEntry> table(sets.size());
  if (stats) {
    stats->component_lookups.assign(sets.size(), 0);
    stats->induced_edges.assign(sets.size(), 0);
  }

  std::vector<char> member(n, 0);
  for (int i = 0; i < static_cast<int>(sets.size()); ++i) {
    const AdmissibleSet& A = sets[i];
    DpEntry& entry = table[i];
    for (NodeId v : A.nodes) entry.weight += freq.at(v);
    if (A.nodes.size() == 1) {
      entry.best_root = A.nodes.front();
      entry.best_cost = entry.weight;
      continue;
    }
    if (stats) {
      int edges_inside = 0;
      std::fill(member.begin(), member.end(), 0);
      for (NodeId v : A.nodes) member[v] = 1;
      for (NodeId v : A.nodes)
        for (NodeId u : space.neighbors(v))
          if (member[u] && v < u) ++edges_inside;
      stats->induced_edges[i] = edges_inside;
    }
    entry.best_cost = -1;
    for (NodeId r : admissible_roots(space, A, k)) {
      long long cost = entry.weight;
      for (const NodeSet& comp : space.components_of_induced(A.nodes, r)) {
        std::fill(member.begin(), member.end(), 0);
        for (NodeId v : comp) member[v] = 1;
        auto cut = cut_of(space, comp.ids(), member);
        auto it = index.find(cut);
        if (it == index.end())
          throw Error(Errc::internal, "recursion left the admissible family");
        if (it->second >= i)
          throw Error(Errc::internal, "dynamic program visited an unresolved set");
        if (stats) ++stats->component_lookups[i];
        cost += table[it->second].best_cost;
      }
      if (entry.best_cost < 0 || cost < entry.best_cost) {
        entry.best_cost = cost;
        entry.best_root = r;
      }
    }
    if (entry.best_root == kNone)
      throw Error(Errc::internal, "admissible set without an admissible root");
  }

  // Rebuild the tree top-down from the stored roots.
  std::vector<NodeId> parents(n, kNone);
  std::vector<std::pair<int, NodeId>> work;  // set index, parent of its root
  int full = index.at({});
  work.push_back({full, kNone});
  while (!work.empty()) {
    auto [i, par] = work.back();
    work.pop_back();
    const AdmissibleSet& A = sets[i];
    NodeId r = table[i].best_root;
    parents[r] = par;
    if (A.nodes.size() == 1) continue;
    for (const NodeSet& comp : space.components_of_induced(A.nodes, r)) {
      std::fill(member.begin(), member.end(), 0);
      for (NodeId v : comp) member[v] = 1;
      auto cut = cut_of(space, comp.ids(), member);
      work.push_back({index.at(cut), r});
    }
  }
  return {SearchTree::from_parents(space, parents), table[full].best_cost};
}

OptResult ptas(const UnrootedTree& space, int t, const FrequencyMap& freq) {
  if (t < 1) throw Error(Errc::bad_argument, "t must be at least 1");
  return opt_kcut(space, 2 * t, freq);
}

OptResult best_rooted(const UnrootedTree& space, const FrequencyMap& freq) {
  OptResult best{SearchTree::rooted_at(space, 0), 0};
  best.cost = static_cost(best.tree, freq);
  for (NodeId r = 1; r < space.size(); ++r) {
    SearchTree t = SearchTree::rooted_at(space, r);
    long long c = static_cost(t, freq);
    if (c < best.cost) best = {std::move(t), c};
  }
  return best;
}

namespace {

// Exact optimum by recursion over connected subsets, memoized on bitmasks.
struct BruteSolver {
  const UnrootedTree& space;
  const FrequencyMap& freq;
  std::unordered_map<std::uint64_t, std::pair<long long, NodeId>> memo;

  std::vector<std::uint64_t> components(std::uint64_t mask, NodeId removed) const {
    std::uint64_t rest = mask & ~(std::uint64_t{1} << removed);
    std::vector<std::uint64_t> comps;
    std::uint64_t left = rest;
    while (left) {
      int s = std::countr_zero(left);
      std::uint64_t comp = std::uint64_t{1} << s;
      std::vector<NodeId> queue{s};
      while (!queue.empty()) {
        NodeId v = queue.back();
        queue.pop_back();
        for (NodeId u : space.neighbors(v)) {
          std::uint64_t bit = std::uint64_t{1} << u;
          if (!(rest & bit) || (comp & bit)) continue;
          comp |= bit;
          queue.push_back(u);
        }
      }
      comps.push_back(comp);
      left &= ~comp;
    }
    return comps;
  }

  std::pair<long long, NodeId> solve(std::uint64_t mask) {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    long long weight = 0;
    for (NodeId v = 0; v < space.size(); ++v)
      if (mask & (std::uint64_t{1} << v)) weight += freq.at(v);
    long long best = -1;
    NodeId best_root = kNone;
    for (NodeId r = 0; r < space.size(); ++r) {
      if (!(mask & (std::uint64_t{1} << r))) continue;
      long long cost = weight;
      for (std::uint64_t comp : components(mask, r)) cost += solve(comp).first;
      if (best < 0 || cost < best) {
        best = cost;
        best_root = r;
      }
    }
    auto res = std::make_pair(best, best_root);
    memo[mask] = res;
    return res;
  }

  void rebuild(std::uint64_t mask, NodeId par, std::vector<NodeId>& parents) {
    NodeId r = memo.at(mask).second;
    parents[r] = par;
    for (std::uint64_t comp : components(mask, r)) rebuild(comp, r, parents);
  }
};

}  // namespace

OptResult brute_opt(const UnrootedTree& space, const FrequencyMap& freq, int cap) {
  int n = space.size();
  if (n > cap || n > 62)
    throw Error(Errc::too_large, "brute-force optimum capped at " + std::to_string(cap) + " nodes");
  if (freq.size() != n) throw Error(Errc::bad_argument, "frequency size mismatch");
  BruteSolver solver{space, freq, {}};
  std::uint64_t full = n == 62 ? ~std::uint64_t{0} >> 2 : (std::uint64_t{1} << n) - 1;
  auto [cost, root] = solver.solve(full);
  std::vector<NodeId> parents(n, kNone);
  solver.rebuild(full, kNone, parents);
  return {SearchTree::from_parents(space, parents), cost};
}

}  // namespace stt
