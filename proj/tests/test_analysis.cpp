#include <doctest.h>

#include "stt/analysis.hpp"
#include "stt/generators.hpp"
#include "stt/kcut.hpp"
#include "stt/verify.hpp"

using namespace stt;

TEST_CASE("potential of the hub-rooted star") {
  for (int n : {2, 5, 9}) {
    UnrootedTree star = gen_tree(TreeShape::star, n);
    SearchTree hub = SearchTree::rooted_at(star, 0);
    CHECK(potential(hub, hub, 4) == 4LL * (-1 - 2LL * (n - 1)));
  }
}

TEST_CASE("potential of a single node") {
  UnrootedTree single(1, {});
  SearchTree t = SearchTree::rooted_at(single, 0);
  CHECK(potential(t, t, 4) == -4);
}

TEST_CASE("potential requires a Steiner-closed reference") {
  UnrootedTree spider(4, {{0, 3}, {1, 3}, {2, 3}});
  SearchTree chain = SearchTree::from_parents(spider, {kNone, 0, 1, 2});
  SearchTree rooted = SearchTree::rooted_at(spider, 3);
  CHECK_THROWS_AS((void)potential(rooted, chain, 4), Error);
}

TEST_CASE("node potentials sit in their ranges and are ancestor-monotone") {
  Rng rng(193);
  for (int trial = 0; trial < 40; ++trial) {
    UnrootedTree space = gen_tree(TreeShape::random, 1 + bounded(rng, 16), rng());
    int n = space.size();
    SearchTree reference = steinerize(random_stt(space, rng));
    SearchTree tree = steinerize(random_stt(space, rng));
    PotentialTracker tracker(reference, 4);
    tracker.attach(tree);
    std::vector<int> rdepth = reference.depths();
    for (NodeId v = 0; v < n; ++v) {
      CHECK(tracker.node_phi(v) >= -rdepth[v]);
      CHECK(tracker.node_phi(v) <= -1);
      NodeId p = tree.parent(v);
      if (p != kNone) CHECK(tracker.node_phi(p) >= tracker.node_phi(v));
    }
    CHECK(tracker.total() <= -4LL * n);
    CHECK(tracker.total() >= -4LL * n * n);
  }
}

TEST_CASE("reference depth has a unique minimum on every connected subset") {
  Rng rng(197);
  for (int trial = 0; trial < 25; ++trial) {
    UnrootedTree space = gen_tree(TreeShape::random, 2 + bounded(rng, 8), rng());
    SearchTree reference = steinerize(random_stt(space, rng));
    std::vector<int> rdepth = reference.depths();
    for (const NodeSet& subset : verify::all_connected_subsets(space)) {
      int best = space.size() + 1, count = 0;
      for (NodeId v : subset) {
        if (rdepth[v] < best) {
          best = rdepth[v];
          count = 1;
        } else if (rdepth[v] == best) {
          ++count;
        }
      }
      CHECK(count == 1);
    }
  }
}

TEST_CASE("incremental potential tracks rotations exactly") {
  Rng rng(199);
  for (int trial = 0; trial < 30; ++trial) {
    UnrootedTree space = gen_tree(TreeShape::random, 2 + bounded(rng, 14), rng());
    SearchTree reference = steinerize(random_stt(space, rng));
    SearchTree tree = random_stt(space, rng);
    PotentialTracker tracker(reference, 4);
    tracker.attach(tree);
    for (int step = 0; step < 25; ++step) {
      NodeId x;
      do {
        x = bounded(rng, space.size());
      } while (x == tree.root());
      NodeId p = tree.parent(x);
      tree.rotate(x);
      tracker.after_rotation(tree, x, p);
      CHECK(tracker.unit_sum() == tracker.unit_sum_recomputed(tree));
    }
  }
}

TEST_CASE("searching the root of the reference keeps the bound comfortably") {
  UnrootedTree path = gen_tree(TreeShape::path, 7);
  SearchTree reference = SearchTree::rooted_at(path, 3);
  std::vector<NodeId> once{3};
  AmortizedReport report = amortized_check(path, once, reference, 4, &reference);
  CHECK(report.ok());
  CHECK(report.max_ratio <= 1.0);
}

TEST_CASE("the amortized inequality holds on random instances") {
  Rng rng(211);
  for (int trial = 0; trial < 20; ++trial) {
    UnrootedTree space = gen_tree(TreeShape::random, 1 + bounded(rng, 32), rng());
    SearchTree reference = steinerize(random_stt(space, rng));
    std::vector<NodeId> seq =
        gen_sequence(trial % 2 ? SeqDist::zipf : SeqDist::uniform, space.size(), 400, rng());
    AmortizedReport report = amortized_check(space, seq, reference, 4);
    CHECK(report.ok());
    CHECK(report.max_ratio <= 1.0);
    CHECK(report.searches == 400);
  }
}

TEST_CASE("empty workloads cost nothing") {
  UnrootedTree path = gen_tree(TreeShape::path, 6);
  SearchTree reference = SearchTree::rooted_at(path, 2);
  AmortizedReport report = amortized_check(path, {}, reference);
  CHECK(report.ok());
  CHECK(report.searches == 0);
  ExperimentRow row = static_optimality_experiment(path, {}, "empty");
  CHECK(row.cost_splay == 0);
  CHECK(row.bound_holds);
}

TEST_CASE("experiment rows: single node costs exactly the searches") {
  UnrootedTree single(1, {});
  std::vector<NodeId> seq(25, 0);
  ExperimentRow row = static_optimality_experiment(single, seq, "single");
  CHECK(row.cost_splay == 25);
  CHECK(row.bound_holds);
  CHECK(row.tight_bound_checked);
  CHECK(row.tight_bound_holds);
  CHECK(row.violations == 0);
}

TEST_CASE("experiment bound holds for zipf, uniform and sequential workloads") {
  Rng rng(223);
  int trial = 0;
  for (SeqDist dist : {SeqDist::zipf, SeqDist::uniform, SeqDist::sequential}) {
    UnrootedTree space = gen_tree(TreeShape::random, 10, rng());
    std::vector<NodeId> seq = gen_sequence(dist, 10, 2000, rng());
    ExperimentRow row = static_optimality_experiment(space, seq, "t" + std::to_string(trial++));
    CHECK(row.bound_holds);
    CHECK(row.violations == 0);
    CHECK(row.opt > 0);
    if (row.tight_bound_checked) CHECK(row.tight_bound_holds);
  }
}

TEST_CASE("experiment falls back to the 2-cut optimum above the brute cap") {
  Rng rng(227);
  UnrootedTree space = gen_tree(TreeShape::random, 18, rng());
  std::vector<NodeId> seq = gen_sequence(SeqDist::zipf, 18, 1500, rng());
  ExperimentRow row = static_optimality_experiment(space, seq, "large", 10);
  CHECK(row.bound_holds);
  CHECK(row.violations == 0);
}

TEST_CASE("experiment CSV formatting") {
  ExperimentRow row;
  row.instance = "demo";
  row.n = 3;
  row.m = 7;
  row.cost_splay = 21;
  row.cost_reference = 14;
  row.opt = 12;
  row.ratio = 1.75;
  row.max_amortized_ratio = 0.5;
  row.violations = 0;
  CHECK(experiment_csv_header() ==
        "instance,n,m,cost_splay,cost_R,opt,ratio,max_amortized_ratio,violations");
  CHECK(format_experiment_row(row) == "demo,3,7,21,14,12,1.75,0.5,0");
}
