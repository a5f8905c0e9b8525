// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Scales and tolerances are pinned here; all inequalities are exact
// integer checks.

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "stt/analysis.hpp"
#include "stt/generators.hpp"
#include "stt/kcut.hpp"
#include "stt/opt.hpp"
#include "stt/rotation.hpp"
#include "stt/splay.hpp"
#include "stt/verify.hpp"

using namespace stt;
using verify::TrialOutcome;

namespace {

struct Criterion {
  bool pass = true;
  std::string detail;
};

Criterion from_suite(const verify::SuiteResult& r) {
  Criterion c;
  c.pass = r.ok();
  std::ostringstream d;
  d << r.checks << " checks";
  if (!r.ok()) d << ", " << r.failures << " failures: " << r.messages.front();
  c.detail = d.str();
  return c;
}

void merge(verify::SuiteResult& result, long long trials, int threads,
           const std::function<void(long long, TrialOutcome&)>& trial) {
  verify::run_trials(trials, threads, trial, result);
}

// 1. Approximation guarantee of the k-cut optimum against the exhaustive
//    optimum: t * cost(2t-cut) <= (t+1) * OPT, exact integers.
Criterion criterion_ptas() {
  verify::SuiteResult result;
  const int trees_per_size = 200;
  const int freqs_per_tree = 20;
  merge(result, 8 * trees_per_size, 0, [&](long long index, TrialOutcome& out) {
    int n = 1 + static_cast<int>(index / trees_per_size);
    long long slot = index % trees_per_size;
    Rng rng(0xACCE9701u + 977u * static_cast<std::uint32_t>(index));
    // The four named shapes first, then random sampling.
    UnrootedTree space = slot < 4 ? gen_tree(static_cast<TreeShape>(slot), n)
                                  : gen_tree(TreeShape::random, n, rng());
    for (int f = 0; f < freqs_per_tree; ++f) {
      FrequencyMap freq(n);
      for (NodeId v = 0; v < n; ++v)
        freq.set(v, f == 0 ? 0 : bounded(rng, 50));  // includes the all-zero map
      if (f == 1 && n > 1) freq.set(bounded(rng, n), 500);  // one heavy node
      long long best = brute_opt(space, freq, 8).cost;
      for (int t : {1, 2, 3}) {
        OptResult r = ptas(space, t, freq);
        out.check(r.tree.is_k_cut(2 * t), "approximate tree not 2t-cut");
        out.check(t * r.cost <= (t + 1) * best,
                  "approximation bound failed at n=" + std::to_string(n) +
                      " t=" + std::to_string(t));
      }
    }
  });
  return from_suite(result);
}

// 2. Depth guarantee of the improved k-cut transform: every node satisfies
//    depth' * floor(k/2) <= depth * (floor(k/2) + 1), and the result is k-cut.
Criterion criterion_depth() {
  verify::SuiteResult result;
  merge(result, 500, 0, [&](long long index, TrialOutcome& out) {
    Rng rng(0xACCE9702u + 31u * static_cast<std::uint32_t>(index));
    UnrootedTree space = verify::random_trial_tree(index, 20, rng);
    SearchTree tree = random_stt(space, rng);
    std::vector<int> before = tree.depths();
    for (int k : {2, 3, 4, 6}) {
      SearchTree fixed = fix_improved(tree, k);
      out.check(fixed.is_k_cut(k), "transformed tree not k-cut");
      out.check(fixed.validate(), "transformed tree invalid");
      std::vector<int> after = fixed.depths();
      int c = k / 2;
      bool ok = true;
      for (NodeId v = 0; v < space.size(); ++v)
        if (after[v] * c > before[v] * (c + 1)) ok = false;
      out.check(ok, "per-node depth ratio exceeded at k=" + std::to_string(k));
    }
  });
  return from_suite(result);
}

// 3. Rotation distance: the script reproduces the target exactly, within
//    3n-5 rotations for Steiner-closed pairs and (2k-1)n-(k+1)k+1 for
//    k in {3,4}, with every intermediate tree k-cut.
Criterion criterion_rotation_distance() {
  verify::SuiteResult result;
  merge(result, 500, 0, [&](long long index, TrialOutcome& out) {
    Rng rng(0xACCE9703u + 53u * static_cast<std::uint32_t>(index));
    int n = 2 + static_cast<int>(bounded(rng, 14));
    UnrootedTree space = gen_tree(index % 3 ? TreeShape::random
                                            : static_cast<TreeShape>(index % 4),
                                  n, rng());
    SearchTree a = steinerize(random_stt(space, rng));
    SearchTree b = steinerize(random_stt(space, rng));
    for (int k : {2, 3, 4}) {
      RotationScript script = transform(a, b, k);
      SearchTree t = a;
      bool intermediates = true;
      for (const RotationStep& s : script.steps) {
        if (t.parent(s.child) != s.parent) {
          intermediates = false;
          break;
        }
        t.rotate(s.child);
        if (!t.is_k_cut(k)) intermediates = false;
      }
      out.check(intermediates, "intermediate tree left the k-cut family");
      out.check(t.same_shape(b), "replay did not reproduce the target");
      long long bound = k == 2 ? 3LL * n - 5 : (2LL * k - 1) * n - (k + 1LL) * k + 1;
      if (n > k)
        out.check(static_cast<long long>(script.size()) <= bound,
                  "script exceeded the rotation bound at k=" + std::to_string(k));
    }
  });
  return from_suite(result);
}

// 4. Pointer implementation of the reduction: per level at most 2n moves and
//    n-k rotations, the three DFS invariants hold after every primitive, and
//    the whole pipeline fits its O(k^2 n) envelope.
Criterion criterion_pointer() {
  verify::SuiteResult result;
  double max_constant = 0;
  std::vector<double> constants(900, 0.0);
  merge(result, 900, 0, [&](long long index, TrialOutcome& out) {
    Rng rng(0xACCE9704u + 71u * static_cast<std::uint32_t>(index));
    const int sizes[] = {8, 12, 15};
    const int ks[] = {2, 3, 4};
    int n = sizes[index % 3];
    int k = ks[(index / 3) % 3];
    UnrootedTree space = gen_tree(TreeShape::random, n, rng());

    SearchTree t = fix_improved(random_stt(space, rng), k);
    CostLedger ledger;
    for (int level = k; level >= 2; --level) {
      bool invariants = true;
      auto hook = [&](const SearchTree& cur, const Pointer& ptr,
                      const std::vector<Mark>& marks) {
        for (NodeId v = 0; v < cur.size() && invariants; ++v) {
          for (NodeId c : cur.children(v)) {
            if (marks[v] == Mark::finished && marks[c] != Mark::finished) invariants = false;
            if (marks[v] == Mark::unvisited && marks[c] != Mark::unvisited) invariants = false;
          }
          if (marks[v] != Mark::unvisited && cur.boundary_size(v) > level - 1)
            invariants = false;
        }
        if (marks[ptr.current] == Mark::visited)
          for (NodeId c : cur.children(ptr.current))
            if (marks[c] == Mark::visited) invariants = false;
      };
      ReduceStats stats = reduce_cut_pointer(t, level, ledger, nullptr, hook);
      out.check(invariants, "DFS invariant broken at level " + std::to_string(level));
      out.check(stats.moves <= 2LL * n, "level used more than 2n pointer moves");
      out.check(stats.rotations <= std::max(0, n - level),
                "level used more than n-k rotations");
      out.check(t.is_k_cut(level - 1), "level did not reduce the boundary bound");
    }

    SearchTree src = fix_improved(random_stt(space, rng), k);
    SearchTree dst = fix_improved(random_stt(space, rng), k);
    SearchTree work = src;
    CostLedger pipeline;
    TransformStats stats = transform_pointer(work, dst, k, pipeline);
    out.check(work.same_shape(dst), "pointer pipeline missed the target");
    out.check(stats.total_ops() <= (6LL * k - 4) * n,
              "pipeline exceeded its derived operation budget");
    constants[index] =
        static_cast<double>(stats.total_ops()) / (static_cast<double>(k) * k * n);
  });
  for (double c : constants) max_constant = std::max(max_constant, c);
  Criterion c = from_suite(result);
  std::ostringstream d;
  d << c.detail << "; max observed ops/(k^2 n) = " << max_constant;
  c.detail = d.str();
  return c;
}

void for_each_stt_checked(const UnrootedTree& space, TrialOutcome& out) {
  verify::for_each_stt(space, [&](const SearchTree& t) {
    out.check(t.is_steiner_closed() == steiner_closed_direct(t),
              "fast and direct Steiner verdicts disagree (exhaustive)");
  });
}

// 5. Steiner-closed <=> 2-cut: exhaustive over every search tree of every
//    shape with up to 7 nodes, plus 10^4 random larger instances (n <= 12).
Criterion criterion_steiner_equivalence() {
  verify::SuiteResult result;
  merge(result, 10001, 0, [&](long long index, TrialOutcome& out) {
    if (index == 0) {
      for (int n = 1; n <= 7; ++n)
        for (const UnrootedTree& space : verify::all_tree_shapes(n))
          for_each_stt_checked(space, out);
      return;
    }
    Rng rng(0xACCE9705u + 13u * static_cast<std::uint32_t>(index));
    UnrootedTree space = verify::random_trial_tree(index, 12, rng);
    SearchTree t = random_stt(space, rng);
    out.check(t.is_steiner_closed() == steiner_closed_direct(t),
              "fast and direct Steiner verdicts disagree");
  });
  return from_suite(result);
}

// 6. Self-adjusting search safety: Steiner-closed after every rotation,
//    branching nodes vanish after phase 1 while remaining ancestors, and the
//    searched node ends at the root; 10^4 searches, n <= 64.
Criterion criterion_splay_safety() {
  verify::SuiteResult result;
  merge(result, 100, 0, [&](long long index, TrialOutcome& out) {
    Rng rng(0xACCE9706u + 29u * static_cast<std::uint32_t>(index));
    int n = 1 + static_cast<int>(bounded(rng, 64));
    UnrootedTree space = gen_tree(index % 2 ? TreeShape::random : TreeShape::caterpillar, n,
                                  rng());
    SearchTree tree = steinerize(random_stt(space, rng));
    CostLedger ledger;
    for (int s = 0; s < 100; ++s) {
      NodeId x = static_cast<NodeId>(bounded(rng, n));
      std::vector<NodeId> branch = branching_nodes(tree, x);

      struct Observer : SplayObserver {
        TrialOutcome* out;
        NodeId target;
        std::vector<NodeId>* branch;
        void after_rotation(const SearchTree& t, NodeId a, NodeId b) override {
          out->check(t.boundary_size(a) <= 2 && t.boundary_size(b) <= 2,
                     "rotation left the Steiner-closed family");
        }
        void before_splay(const SearchTree& t, NodeId node, NodeId stop) override {
          if (node != target || stop != kNone) return;
          out->check(branching_nodes(t, target).empty(), "branching nodes survived phase 1");
          NodeSet ancestors(t.path_from_root(target));
          for (NodeId b : *branch)
            out->check(ancestors.contains(b), "a former branching node left the search path");
        }
      } obs;
      obs.out = &out;
      obs.target = x;
      obs.branch = &branch;

      search(tree, x, ledger, &obs);
      out.check(tree.root() == x, "search did not finish at the root");
      out.check(tree.is_steiner_closed(), "tree not Steiner-closed after the search");
    }
  });
  return from_suite(result);
}

// 7. On path-shaped spaces the evolution is step-identical to an independent
//    classical splay implementation; 10^3 searches, n <= 64.
Criterion criterion_bst_degeneration() {
  verify::SuiteResult result;
  merge(result, 20, 0, [&](long long index, TrialOutcome& out) {
    Rng rng(0xACCE9707u + 41u * static_cast<std::uint32_t>(index));
    int n = 2 + static_cast<int>(bounded(rng, 63));
    UnrootedTree path = gen_tree(TreeShape::path, n);
    SearchTree tree = random_stt(path, rng);
    verify::ClassicSplayTree classic(n, tree.parents());
    CostLedger ledger;
    for (int s = 0; s < 50; ++s) {
      NodeId x = static_cast<NodeId>(bounded(rng, n));
      search(tree, x, ledger, nullptr);
      classic.search(x);
      out.check(tree.parents() == classic.parents() && tree.root() == classic.root(),
                "evolution diverged from classical splay");
    }
  });
  return from_suite(result);
}

// 8. Amortized bound with d = 4 and slack 4: every search satisfies
//    depth + dPhi <= 24 depth_R + 4, and every elementary step satisfies its
//    3*dphi / 3*dphi - 1 bound.
Criterion criterion_amortized() {
  verify::SuiteResult result;
  struct Instance {
    int n;
    SeqDist dist;
    long long m;
  };
  std::vector<Instance> instances = {
      {5, SeqDist::uniform, 4000},   {8, SeqDist::zipf, 10000},
      {10, SeqDist::sequential, 10000}, {16, SeqDist::zipf, 10000},
      {33, SeqDist::uniform, 10000}, {64, SeqDist::zipf, 10000},
      {64, SeqDist::uniform, 10000}, {64, SeqDist::sequential, 10000},
  };
  std::vector<long long> searches(instances.size(), 0), steps(instances.size(), 0);
  merge(result, static_cast<long long>(instances.size()), 0,
        [&](long long index, TrialOutcome& out) {
          const Instance& inst = instances[index];
          Rng rng(0xACCE9708u + 59u * static_cast<std::uint32_t>(index));
          UnrootedTree space = gen_tree(index % 2 ? TreeShape::random : TreeShape::caterpillar,
                                        inst.n, rng());
          std::vector<NodeId> seq = gen_sequence(inst.dist, inst.n, inst.m, rng());
          FrequencyMap freq = FrequencyMap::from_sequence(inst.n, seq);
          SearchTree reference = inst.n <= 10 ? steinerize(brute_opt(space, freq).tree)
                                              : opt_kcut(space, 2, freq).tree;
          AmortizedReport report = amortized_check(space, seq, reference, 4);
          out.check(report.search_violations == 0,
                    "per-search amortized bound violated: " + report.first_violation);
          out.check(report.step_violations == 0,
                    "per-step potential bound violated: " + report.first_violation);
          out.check(report.phase_violations == 0,
                    "per-splay telescoped bound violated: " + report.first_violation);
          out.check(report.searches == inst.m, "not every search was checked");
          searches[index] = report.searches;
          steps[index] = report.steps;
        });
  Criterion c = from_suite(result);
  long long total_searches = 0, total_steps = 0;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    total_searches += searches[i];
    total_steps += steps[i];
  }
  std::ostringstream d;
  d << c.detail << "; " << total_searches << " searches, " << total_steps
    << " elementary steps verified";
  c.detail = d.str();
  return c;
}

// 9. Static optimality at exact optima (n <= 10, m = 10^4): total model cost
//    <= 24 cost_R + 4m + 4n^2; when every node is searched, the additive term
//    tightens to 4 * sum of reference depths.
Criterion criterion_static_optimality() {
  verify::SuiteResult result;
  merge(result, 12, 0, [&](long long index, TrialOutcome& out) {
    Rng rng(0xACCE9709u + 83u * static_cast<std::uint32_t>(index));
    const int sizes[] = {4, 7, 10};
    const SeqDist dists[] = {SeqDist::zipf, SeqDist::uniform, SeqDist::sequential};
    int n = sizes[index % 3];
    SeqDist dist = dists[(index / 3) % 3];
    UnrootedTree space = verify::random_trial_tree(index, n, rng);
    std::vector<NodeId> seq = gen_sequence(dist, space.size(), 10000, rng());
    ExperimentRow row = static_optimality_experiment(space, seq, "acceptance", 10);
    out.check(row.bound_holds, "static-optimality bound failed");
    out.check(row.violations == 0, "amortized violations during the experiment");
    if (row.tight_bound_checked)
      out.check(row.tight_bound_holds, "tight additive bound failed");
  });
  return from_suite(result);
}

}  // namespace

int main() {
  struct Entry {
    const char* title;
    Criterion (*run)();
  };
  const Entry entries[] = {
      {"approximation guarantee of the k-cut optimum (t in {1,2,3}, n <= 8)", criterion_ptas},
      {"depth bound of the k-cut transform (k in {2,3,4,6}, n <= 20)", criterion_depth},
      {"rotation distance scripts (k in {2,3,4}, n <= 15)", criterion_rotation_distance},
      {"pointer-machine reduction budgets and invariants", criterion_pointer},
      {"Steiner-closed equals 2-cut (exhaustive n <= 7 plus random n <= 12)",
       criterion_steiner_equivalence},
      {"self-adjusting search safety (10^4 searches, n <= 64)", criterion_splay_safety},
      {"classical splay degeneration on paths (10^3 searches)", criterion_bst_degeneration},
      {"amortized potential bound (d = 4, slack 4)", criterion_amortized},
      {"static optimality against exact optima (m = 10^4)", criterion_static_optimality},
  };

  bool all_pass = true;
  int number = 1;
  for (const Entry& entry : entries) {
    auto start = std::chrono::steady_clock::now();
    Criterion c = entry.run();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %d: %s (%s; %.1fs)\n", c.pass ? "PASS" : "FAIL", number,
                entry.title, c.detail.c_str(), secs);
    std::fflush(stdout);
    all_pass = all_pass && c.pass;
    ++number;
  }
  return all_pass ? 0 : 1;
}
