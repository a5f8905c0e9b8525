#include "stt/verify.hpp"

#include <bit>
#include <map>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "stt/analysis.hpp"
#include "stt/kcut.hpp"
#include "stt/opt.hpp"
#include "stt/rotation.hpp"
#include "stt/splay.hpp"

namespace stt::verify {

void run_trials(long long trials, int threads,
                const std::function<void(long long, TrialOutcome&)>& trial, SuiteResult& result) {
  std::vector<TrialOutcome> outcomes(trials);
  auto run_one = [&](long long i) {
    try {
      trial(i, outcomes[i]);
    } catch (const std::exception& e) {
      ++outcomes[i].checks;
      ++outcomes[i].failures;
      outcomes[i].messages.push_back("trial " + std::to_string(i) + " raised: " + e.what());
    }
  };
  if (threads == 1) {
    for (long long i = 0; i < trials; ++i) run_one(i);
  } else {
#ifdef _OPENMP
    int want = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(want)
    for (long long i = 0; i < trials; ++i) run_one(i);
#else
    for (long long i = 0; i < trials; ++i) run_one(i);
#endif
  }
  for (long long i = 0; i < trials; ++i) {
    result.checks += outcomes[i].checks;
    result.failures += outcomes[i].failures;
    for (auto& m : outcomes[i].messages)
      if (result.messages.size() < 50) result.messages.push_back(std::move(m));
  }
}

UnrootedTree random_trial_tree(long long index, int max_n, Rng& rng) {
  int n = 1 + static_cast<int>(bounded(rng, static_cast<std::uint32_t>(max_n)));
  switch (index % 5) {
    case 0: return gen_tree(TreeShape::path, n);
    case 1: return gen_tree(TreeShape::star, n);
    case 2: return gen_tree(TreeShape::caterpillar, n);
    case 3: return gen_tree(TreeShape::spider, n);
    default: return gen_tree(TreeShape::random, n, rng());
  }
}

Rng trial_rng(std::uint32_t seed, long long index) {
  return Rng(seed + 0x9e3779b9u * static_cast<std::uint32_t>(index + 1));
}

// ---------------------------------------------------------------------------
// Classic splay oracle
// ---------------------------------------------------------------------------

ClassicSplayTree::ClassicSplayTree(int n, const std::vector<NodeId>& parents)
    : root_(kNone), parent_(parents), left_(n, kNone), right_(n, kNone) {
  for (NodeId v = 0; v < n; ++v) {
    NodeId p = parents[v];
    if (p == kNone) {
      root_ = v;
    } else if (v < p) {
      left_[p] = v;
    } else {
      right_[p] = v;
    }
  }
  if (root_ == kNone) throw Error(Errc::bad_argument, "no root");
}

void ClassicSplayTree::rotate_up(NodeId x) {
  NodeId p = parent_[x];
  NodeId g = parent_[p];
  if (left_[p] == x) {
    left_[p] = right_[x];
    if (right_[x] != kNone) parent_[right_[x]] = p;
    right_[x] = p;
  } else {
    right_[p] = left_[x];
    if (left_[x] != kNone) parent_[left_[x]] = p;
    left_[x] = p;
  }
  parent_[p] = x;
  parent_[x] = g;
  if (g == kNone) {
    root_ = x;
  } else if (left_[g] == p) {
    left_[g] = x;
  } else {
    right_[g] = x;
  }
}

int ClassicSplayTree::search(NodeId x) {
  int rotations = 0;
  while (parent_[x] != kNone) {
    NodeId p = parent_[x];
    NodeId g = parent_[p];
    if (g == kNone) {
      rotate_up(x);
      rotations += 1;
    } else if ((left_[g] == p) == (left_[p] == x)) {
      rotate_up(p);
      rotate_up(x);
      rotations += 2;
    } else {
      rotate_up(x);
      rotate_up(x);
      rotations += 2;
    }
  }
  return rotations;
}

int ClassicSplayTree::depth(NodeId x) const {
  int d = 1;
  while (parent_[x] != kNone) {
    x = parent_[x];
    ++d;
  }
  return d;
}

// ---------------------------------------------------------------------------
// Enumeration helpers
// ---------------------------------------------------------------------------

namespace {

std::vector<std::pair<NodeId, NodeId>> prufer_decode(int n, const std::vector<int>& seq) {
  std::vector<int> degree(n, 1);
  for (int s : seq) ++degree[s];
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::vector<char> used(n, 0);
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int s : seq) {
    edges.emplace_back(leaf, s);
    if (--degree[s] == 1 && s < ptr) {
      leaf = s;
    } else {
      ++ptr;
      while (ptr < n && degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return edges;
}

std::string ahu_string(const std::vector<std::vector<NodeId>>& adj, NodeId v, NodeId parent) {
  std::vector<std::string> parts;
  for (NodeId u : adj[v])
    if (u != parent) parts.push_back(ahu_string(adj, u, v));
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (auto& p : parts) out += p;
  out += ")";
  return out;
}

std::string canonical_form(int n, const std::vector<std::pair<NodeId, NodeId>>& edges) {
  std::vector<std::vector<NodeId>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  // Size centroids (one or two) as canonical roots.
  std::vector<int> size(n, 1), order, par(n, kNone);
  std::vector<char> seen(n, 0);
  order.push_back(0);
  seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (NodeId u : adj[order[i]])
      if (!seen[u]) {
        seen[u] = 1;
        par[u] = order[i];
        order.push_back(u);
      }
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (par[*it] != kNone) size[par[*it]] += size[*it];
  std::string best;
  for (NodeId v = 0; v < n; ++v) {
    int heaviest = n - size[v];
    for (NodeId u : adj[v])
      if (par[u] == v) heaviest = std::max(heaviest, size[u]);
    if (heaviest <= n / 2) {
      std::string s = ahu_string(adj, v, kNone);
      if (best.empty() || s < best) best = s;
    }
  }
  return best;
}

}  // namespace

std::vector<UnrootedTree> all_tree_shapes(int n) {
  if (n < 1) throw Error(Errc::bad_argument, "n must be positive");
  std::vector<UnrootedTree> out;
  if (n == 1) {
    out.push_back(UnrootedTree(1, {}));
    return out;
  }
  if (n == 2) {
    out.push_back(UnrootedTree(2, {{0, 1}}));
    return out;
  }
  std::map<std::string, std::vector<std::pair<NodeId, NodeId>>> canon;
  std::vector<int> seq(n - 2, 0);
  for (;;) {
    auto edges = prufer_decode(n, seq);
    std::string key = canonical_form(n, edges);
    canon.emplace(std::move(key), edges);
    int i = n - 3;
    while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
  out.reserve(canon.size());
  for (auto& [key, edges] : canon) out.push_back(UnrootedTree(n, edges));
  return out;
}

namespace {

void stt_enum_rec(const UnrootedTree& space,
                  std::vector<std::pair<NodeSet, NodeId>>& work, std::vector<NodeId>& parents,
                  const std::function<void(const SearchTree&)>& fn) {
  if (work.empty()) {
    fn(SearchTree::from_parents(space, parents));
    return;
  }
  auto [nodes, par] = work.back();
  work.pop_back();
  if (nodes.size() == 1) {
    parents[nodes.front()] = par;
    stt_enum_rec(space, work, parents, fn);
  } else {
    for (NodeId r : nodes) {
      parents[r] = par;
      std::size_t mark = work.size();
      for (NodeSet& comp : space.components_of_induced(nodes, r)) work.push_back({comp, r});
      stt_enum_rec(space, work, parents, fn);
      work.resize(mark);
    }
  }
  work.push_back({std::move(nodes), par});
}

}  // namespace

void for_each_stt(const UnrootedTree& space,
                  const std::function<void(const SearchTree&)>& fn) {
  std::vector<NodeId> all(space.size());
  for (NodeId v = 0; v < space.size(); ++v) all[v] = v;
  std::vector<std::pair<NodeSet, NodeId>> work{{NodeSet(all), kNone}};
  std::vector<NodeId> parents(space.size(), kNone);
  stt_enum_rec(space, work, parents, fn);
}

std::vector<NodeSet> all_connected_subsets(const UnrootedTree& space) {
  int n = space.size();
  if (n > 20) throw Error(Errc::too_large, "subset sweep capped at 20 nodes");
  std::vector<NodeSet> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    int start = std::countr_zero(mask);
    std::uint32_t comp = 1u << start;
    std::vector<NodeId> queue{start};
    while (!queue.empty()) {
      NodeId v = queue.back();
      queue.pop_back();
      for (NodeId u : space.neighbors(v)) {
        std::uint32_t bit = 1u << u;
        if (!(mask & bit) || (comp & bit)) continue;
        comp |= bit;
        queue.push_back(u);
      }
    }
    if (comp != mask) continue;
    std::vector<NodeId> ids;
    for (NodeId v = 0; v < n; ++v)
      if (mask & (1u << v)) ids.push_back(v);
    out.push_back(NodeSet(std::move(ids)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

namespace {

std::string shape_diff(const SearchTree& a, const SearchTree& b) {
  std::ostringstream out;
  out << "roots " << a.root() << "/" << b.root();
  return out.str();
}

}  // namespace

SuiteResult run_stt_suite(const SuiteOptions& opts) {
  SuiteResult result;
  result.suite = "stt";
  run_trials(opts.trials, opts.threads, [&](long long i, TrialOutcome& out) {
    Rng rng = trial_rng(opts.seed, i);
    UnrootedTree space = random_trial_tree(i, opts.size_cap, rng);
    SearchTree tree = random_stt(space, rng);
    out.check(tree.validate(), "random search tree failed validation");
    out.check(tree.boundary_size(tree.root()) == 0, "root boundary not empty");

    int n = space.size();
    for (int step = 0; step < 2 * n && n > 1; ++step) {
      NodeId x;
      do {
        x = static_cast<NodeId>(bounded(rng, n));
      } while (x == tree.root());
      NodeId p = tree.parent(x);
      tree.rotate(x);
      out.check(tree.validate(), "rotation broke the search-tree property");
      bool boundaries_ok = true;
      for (NodeId v = 0; v < n && boundaries_ok; ++v)
        boundaries_ok = tree.boundary(v) == boundary_brute(tree, v);
      out.check(boundaries_ok, "boundary table drifted from brute recomputation");
      bool subset_ok = true;
      for (NodeId v = 0; v < n && subset_ok; ++v) {
        NodeId q = tree.parent(v);
        if (q == kNone) continue;
        for (NodeId u : tree.boundary(v))
          if (u != q && !contains_sorted(tree.boundary(q), u)) subset_ok = false;
      }
      out.check(subset_ok, "child boundary not inside parent boundary plus parent");
      // One more rotation of the same edge undoes the first.
      std::vector<NodeId> snapshot = tree.parents();
      tree.rotate(p);
      tree.rotate(x);
      out.check(tree.parents() == snapshot, "rotation involution failed");
    }
  }, result);
  return result;
}

SuiteResult run_kcut_suite(const SuiteOptions& opts) {
  SuiteResult result;
  result.suite = "kcut";
  run_trials(opts.trials, opts.threads, [&](long long i, TrialOutcome& out) {
    Rng rng = trial_rng(opts.seed, i);
    UnrootedTree space = random_trial_tree(i, opts.size_cap, rng);
    SearchTree tree = random_stt(space, rng);
    std::vector<int> before = tree.depths();

    for (int k : {2, 3, 4, 6}) {
      SearchTree fixed = fix_improved(tree, k);
      out.check(fixed.validate(), "fix_improved output invalid");
      out.check(fixed.is_k_cut(k), "fix_improved output not k-cut");
      std::vector<int> after = fixed.depths();
      int c = k / 2;
      bool depths_ok = true;
      for (NodeId v = 0; v < space.size(); ++v)
        if (after[v] * c > before[v] * (c + 1)) depths_ok = false;
      out.check(depths_ok, "fix_improved depth bound violated at k=" + std::to_string(k));
      // Already k-cut input: every subtree root stays admissible, shape kept.
      SearchTree again = fix_improved(fixed, k);
      out.check(again.same_shape(fixed), "fix_improved not idempotent on k-cut input");
    }
    for (int k : {3, 4, 5}) {
      SearchTree fixed = fix(tree, k);
      out.check(fixed.validate() && fixed.is_k_cut(k), "fix output invalid or not k-cut");
      std::vector<int> after = fixed.depths();
      int c = (k + 1) / 2 - 1;
      bool depths_ok = true;
      for (NodeId v = 0; v < space.size(); ++v)
        if (after[v] * c > before[v] * (c + 1)) depths_ok = false;
      out.check(depths_ok, "fix depth bound violated at k=" + std::to_string(k));
    }
    SearchTree closed = steinerize(tree);
    out.check(closed.is_steiner_closed() && steiner_closed_direct(closed),
              "steinerize output not Steiner-closed");
    std::vector<int> after = closed.depths();
    bool doubled = true;
    for (NodeId v = 0; v < space.size(); ++v)
      if (after[v] > 2 * before[v]) doubled = false;
    out.check(doubled, "steinerize more than doubled a depth");
  }, result);
  return result;
}

SuiteResult run_steiner_suite(const SuiteOptions& opts) {
  SuiteResult result;
  result.suite = "steiner";
  run_trials(opts.trials, opts.threads, [&](long long i, TrialOutcome& out) {
    Rng rng = trial_rng(opts.seed, i);
    if (i == 0) {
      // Exhaustive sweep: every search tree of every shape with up to 7 nodes.
      for (int n = 1; n <= std::min(opts.size_cap, 7); ++n) {
        for (const UnrootedTree& space : all_tree_shapes(n)) {
          for_each_stt(space, [&](const SearchTree& t) {
            out.check(t.is_steiner_closed() == steiner_closed_direct(t),
                      "2-cut and Steiner-closed verdicts disagree (exhaustive)");
          });
        }
      }
      return;
    }
    UnrootedTree space = random_trial_tree(i, opts.size_cap, rng);
    SearchTree tree = random_stt(space, rng);
    out.check(tree.is_steiner_closed() == steiner_closed_direct(tree),
              "2-cut and Steiner-closed verdicts disagree");
    // Rooted versions of the space are always Steiner-closed.
    SearchTree rooted = SearchTree::rooted_at(space, static_cast<NodeId>(bounded(
                                                         rng, space.size())));
    out.check(rooted.is_steiner_closed() && steiner_closed_direct(rooted),
              "rooted version not Steiner-closed");
    // On a path every valid search tree is Steiner-closed.
    UnrootedTree path = gen_tree(TreeShape::path, space.size());
    SearchTree bst = random_stt(path, rng);
    out.check(bst.is_steiner_closed() && steiner_closed_direct(bst),
              "search tree on a path not Steiner-closed");
  }, result);
  return result;
}

SuiteResult run_rotdist_suite(const SuiteOptions& opts) {
  SuiteResult result;
  result.suite = "rotdist";
  run_trials(opts.trials, opts.threads, [&](long long i, TrialOutcome& out) {
    Rng rng = trial_rng(opts.seed, i);
    int n = 2 + static_cast<int>(bounded(rng, std::max(1, opts.size_cap - 1)));
    UnrootedTree space = i % 2 ? gen_tree(TreeShape::random, n, rng())
                               : random_trial_tree(i / 2, opts.size_cap, rng);
    n = space.size();
    SearchTree a = steinerize(random_stt(space, rng));
    SearchTree b = steinerize(random_stt(space, rng));

    for (int k : {2, 3, 4}) {
      RotationScript script = transform(a, b, k);
      SearchTree replay = a;
      bool intermediates_ok = true;
      for (const RotationStep& s : script.steps) {
        if (replay.parent(s.child) != s.parent) {
          intermediates_ok = false;
          break;
        }
        replay.rotate(s.child);
        if (!replay.is_k_cut(k)) {
          intermediates_ok = false;
          break;
        }
      }
      out.check(intermediates_ok, "transform intermediates left the k-cut family");
      out.check(replay.same_shape(b), "transform replay missed the target: " + shape_diff(replay, b));
      if (n > k) {
        long long bound = (2LL * k - 1) * n - (k + 1) * k + 1;
        out.check(static_cast<long long>(script.size()) <= bound,
                  "transform used more than its rotation bound at k=" + std::to_string(k));
      }
    }

    // Round trip: there and back again restores the start exactly.
    {
      SearchTree t = a;
      apply_script(t, transform(a, b, 2));
      apply_script(t, transform(t, a, 2));
      out.check(t.same_shape(a), "transform round trip did not restore the source");
    }

    // Pointer-machine reduction with per-primitive invariants.
    {
      SearchTree t = fix_improved(random_stt(space, rng), 4);
      CostLedger ledger;
      for (int k = 4; k >= 2; --k) {
        bool invariants_ok = true;
        auto hook = [&](const SearchTree& cur, const Pointer& ptr,
                        const std::vector<Mark>& marks) {
          for (NodeId v = 0; v < cur.size() && invariants_ok; ++v) {
            for (NodeId c : cur.children(v)) {
              if (marks[v] == Mark::finished && marks[c] != Mark::finished) invariants_ok = false;
              if (marks[v] == Mark::unvisited && marks[c] != Mark::unvisited)
                invariants_ok = false;
            }
            if (marks[v] != Mark::unvisited && cur.boundary_size(v) > k - 1)
              invariants_ok = false;
          }
          if (marks[ptr.current] == Mark::visited)
            for (NodeId c : cur.children(ptr.current))
              if (marks[c] == Mark::visited) invariants_ok = false;
        };
        ReduceStats stats = reduce_cut_pointer(t, k, ledger, nullptr, hook);
        out.check(invariants_ok, "marked DFS invariant violated at level " + std::to_string(k));
        out.check(stats.moves <= 2LL * n, "pointer reduction used more than 2n moves");
        out.check(stats.rotations <= std::max(0, n - k),
                  "pointer reduction used more than n-k rotations");
        out.check(t.is_k_cut(k - 1), "pointer reduction did not reach k-1");
      }
    }

    // Full pipeline stays within its operation envelope.
    for (int k : {2, 3}) {
      SearchTree t = a;
      CostLedger ledger;
      TransformStats stats = transform_pointer(t, b, k, ledger);
      out.check(t.same_shape(b), "pointer transformation missed the target");
      out.check(stats.total_ops() <= (6LL * k - 4) * n,
                "pointer transformation exceeded its operation envelope");
    }
  }, result);
  return result;
}

namespace {

// Checks Steiner closure after every rotation (only the two rotated nodes
// can change) and the phase-1 postconditions at the start of phase 2.
class SplaySafetyObserver : public SplayObserver {
 public:
  SplaySafetyObserver(NodeId target, std::vector<NodeId> branch, TrialOutcome& out)
      : target_(target), branch_(std::move(branch)), out_(out) {}

  void after_rotation(const SearchTree& tree, NodeId x, NodeId old_parent) override {
    out_.check(tree.boundary_size(x) <= 2 && tree.boundary_size(old_parent) <= 2,
               "rotation broke the 2-cut property");
  }

  void before_splay(const SearchTree& tree, NodeId x, NodeId stop) override {
    if (x != target_ || stop != kNone) return;
    out_.check(branching_nodes(tree, target_).empty(),
               "branching nodes remain after phase 1");
    NodeSet ancestors(tree.path_from_root(target_));
    for (NodeId b : branch_)
      out_.check(ancestors.contains(b), "former branching node no longer an ancestor");
  }

 private:
  NodeId target_;
  std::vector<NodeId> branch_;
  TrialOutcome& out_;
};

}  // namespace

SuiteResult run_splay_suite(const SuiteOptions& opts) {
  SuiteResult result;
  result.suite = "splay";
  run_trials(opts.trials, opts.threads, [&](long long i, TrialOutcome& out) {
    Rng rng = trial_rng(opts.seed, i);
    UnrootedTree space = random_trial_tree(i, opts.size_cap, rng);
    int n = space.size();
    SearchTree tree = steinerize(random_stt(space, rng));
    CostLedger ledger;
    int searches = 50;
    for (int s = 0; s < searches; ++s) {
      NodeId x = static_cast<NodeId>(bounded(rng, n));
      std::vector<NodeId> branch = branching_nodes(tree, x);
      SplaySafetyObserver observer(x, branch, out);
      CostLedger before = ledger;
      SearchStats stats = search(tree, x, ledger, &observer);
      out.check(tree.root() == x, "searched node did not end at the root");
      out.check(tree.is_steiner_closed(), "tree not Steiner-closed after a search");
      out.check(stats.rotations <= 2LL * stats.depth_before,
                "search used more than 2 depth rotations");
      out.check(ledger.pointer_moves - before.pointer_moves <= 4LL * stats.depth_before,
                "search used more than 4 depth pointer moves");
      if (s % 25 == 0)
        out.check(steiner_closed_direct(tree), "direct Steiner check failed after a search");
    }

    // On a path the whole evolution matches the classic splay oracle.
    UnrootedTree path = gen_tree(TreeShape::path, std::max(2, n));
    SearchTree stt_tree = random_stt(path, rng);
    ClassicSplayTree classic(path.size(), stt_tree.parents());
    CostLedger path_ledger;
    for (int s = 0; s < searches; ++s) {
      NodeId x = static_cast<NodeId>(bounded(rng, path.size()));
      search(stt_tree, x, path_ledger, nullptr);
      classic.search(x);
      out.check(stt_tree.parents() == classic.parents() && stt_tree.root() == classic.root(),
                "path-shaped evolution diverged from classic splay");
    }

    // A repeated search settles at the root and costs a constant after the
    // first access.
    {
      SearchTree t = steinerize(random_stt(space, rng));
      CostLedger single;
      NodeId x = static_cast<NodeId>(bounded(rng, n));
      search(t, x, single, nullptr);
      long long first = single.model_cost();
      for (int s = 0; s < 20; ++s) search(t, x, single, nullptr);
      out.check(single.model_cost() == first + 20, "repeated search at the root not unit cost");
    }
  }, result);
  return result;
}

SuiteResult run_potential_suite(const SuiteOptions& opts) {
  SuiteResult result;
  result.suite = "potential";
  run_trials(opts.trials, opts.threads, [&](long long i, TrialOutcome& out) {
    Rng rng = trial_rng(opts.seed, i);
    UnrootedTree space = random_trial_tree(i, opts.size_cap, rng);
    int n = space.size();
    SearchTree reference = steinerize(random_stt(space, rng));
    SearchTree tree = steinerize(random_stt(space, rng));
    int d = 4;
    PotentialTracker tracker(reference, d);
    tracker.attach(tree);

    std::vector<int> rdepth = reference.depths();
    bool range_ok = true, mono_ok = true;
    for (NodeId v = 0; v < n; ++v) {
      if (!(-rdepth[v] <= tracker.node_phi(v) && tracker.node_phi(v) <= -1)) range_ok = false;
      NodeId p = tree.parent(v);
      if (p != kNone && tracker.node_phi(p) < tracker.node_phi(v)) mono_ok = false;
    }
    out.check(range_ok, "node potential out of its depth range");
    out.check(mono_ok, "node potential not monotone along ancestors");
    long long total = tracker.total();
    out.check(-static_cast<long long>(d) * n * n <= total && total <= -static_cast<long long>(d) * n,
              "total potential out of range");

    if (n <= 9) {
      bool unique_ok = true;
      for (const NodeSet& subset : all_connected_subsets(space)) {
        int best = n + 1, count = 0;
        for (NodeId v : subset) {
          if (rdepth[v] < best) {
            best = rdepth[v];
            count = 1;
          } else if (rdepth[v] == best) {
            ++count;
          }
        }
        if (count != 1) unique_ok = false;
      }
      out.check(unique_ok, "reference depth minimum not unique on a connected subset");
    }

    std::vector<NodeId> searches = gen_sequence(SeqDist::uniform, n, 200, rng());
    AmortizedReport report = amortized_check(space, searches, reference, d, &tree);
    out.check(report.ok(), "amortized bound violated: " + report.first_violation);
    out.check(report.max_ratio <= 1.0, "amortized ratio above one");

    // Star fixture: rooting at the hub pins the potential exactly.
    if (i % 7 == 0 && n >= 2) {
      UnrootedTree star = gen_tree(TreeShape::star, n);
      SearchTree hub = SearchTree::rooted_at(star, 0);
      out.check(potential(hub, hub, 4) == 4LL * (-1 - 2LL * (n - 1)),
                "star potential fixture mismatch");
    }
  }, result);
  return result;
}

std::vector<std::string> suite_names() {
  return {"stt", "kcut", "steiner", "rotdist", "splay", "potential"};
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
  if (name == "stt") return run_stt_suite(opts);
  if (name == "kcut") return run_kcut_suite(opts);
  if (name == "steiner") return run_steiner_suite(opts);
  if (name == "rotdist") return run_rotdist_suite(opts);
  if (name == "splay") return run_splay_suite(opts);
  if (name == "potential") return run_potential_suite(opts);
  throw Error(Errc::bad_argument, "unknown suite: " + name);
}

}  // namespace stt::verify
