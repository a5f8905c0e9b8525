#include <doctest.h>

#include <sstream>

#include "stt/generators.hpp"
#include "stt/tree.hpp"

using namespace stt;

namespace {

UnrootedTree path3() { return gen_tree(TreeShape::path, 3); }
UnrootedTree star4() { return gen_tree(TreeShape::star, 4); }

bool passes_leaf_centroid_definition(const UnrootedTree& space, const NodeSet& A, NodeId v) {
  auto deg_in = [&](NodeId x, const NodeSet& set) {
    int d = 0;
    for (NodeId u : space.neighbors(x))
      if (set.contains(u)) ++d;
    return d;
  };
  if (deg_in(v, A) <= 1) return false;  // must not be a leaf of S[A]
  int leaves = 0;
  for (NodeId x : A)
    if (deg_in(x, A) == 1) ++leaves;
  int half = leaves / 2;
  for (const NodeSet& comp : space.components_of_induced(A, v)) {
    int comp_leaves = 0, set_leaves = 0;
    for (NodeId x : comp) {
      if (deg_in(x, comp) <= 1) {
        ++comp_leaves;
        if (deg_in(x, A) == 1) ++set_leaves;
      }
    }
    if (comp_leaves > half + 1 || set_leaves > half) return false;
  }
  return true;
}

NodeSet all_nodes(const UnrootedTree& space) {
  std::vector<NodeId> ids(space.size());
  for (NodeId v = 0; v < space.size(); ++v) ids[v] = v;
  return NodeSet(ids);
}

}  // namespace

TEST_CASE("tree construction accepts the basic shapes") {
  UnrootedTree single(1, {});
  CHECK(single.size() == 1);
  CHECK(single.neighbors(0).empty());

  UnrootedTree path = path3();
  CHECK(path.neighbors(1) == std::vector<NodeId>{0, 2});

  UnrootedTree star = star4();
  CHECK(star.neighbors(0) == std::vector<NodeId>{1, 2, 3});
  CHECK(star.degree(2) == 1);
}

TEST_CASE("tree construction rejects malformed edge lists with distinct codes") {
  auto code_of = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::internal;
  };
  CHECK(code_of([] { UnrootedTree(3, {{0, 1}}); }) == Errc::disconnected);
  CHECK(code_of([] { UnrootedTree(3, {{0, 1}, {1, 2}, {0, 2}}); }) == Errc::cyclic);
  CHECK(code_of([] { UnrootedTree(3, {{0, 1}, {0, 1}}); }) == Errc::duplicate_edge);
  CHECK(code_of([] { UnrootedTree(3, {{0, 1}, {1, 5}}); }) == Errc::node_out_of_range);
  CHECK(code_of([] { UnrootedTree(3, {{0, 1}, {2, 2}}); }) == Errc::self_loop);
  CHECK(code_of([] { UnrootedTree(4, {{0, 1}, {0, 1}, {2, 3}}); }) == Errc::duplicate_edge);
}

TEST_CASE("separation queries on the basic shapes") {
  UnrootedTree path = path3();
  CHECK(path.separates(1, 0, 2));
  CHECK_FALSE(path.separates(0, 1, 2));
  UnrootedTree star = star4();
  CHECK(star.separates(0, 1, 2));
  CHECK_THROWS_AS((void)path.separates(1, 1, 2), Error);
}

TEST_CASE("separates agrees with component identity") {
  Rng rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    UnrootedTree space = gen_tree(TreeShape::random, 2 + bounded(rng, 12), rng());
    int n = space.size();
    for (NodeId z = 0; z < n; ++z)
      for (NodeId x = 0; x < n; ++x)
        for (NodeId y = 0; y < n; ++y) {
          if (x == z || y == z) continue;
          bool sep = space.separates(z, x, y);
          bool diff = space.component_with(z, x) != space.component_with(z, y);
          CHECK(sep == diff);
        }
  }
}

TEST_CASE("component_with matches the worked examples") {
  UnrootedTree path = path3();
  CHECK(path.component_with(1, 0) == NodeSet({0}));
  CHECK(path.component_with(0, 2) == NodeSet({1, 2}));
  UnrootedTree star = star4();
  CHECK(star.component_with(0, 2) == NodeSet({2}));
  CHECK_THROWS_AS((void)star.component_with(1, 1), Error);
}

TEST_CASE("components_of_induced splits and covers") {
  UnrootedTree path = path3();
  auto comps = path.components_of_induced(all_nodes(path), 1);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == NodeSet({0}));
  CHECK(comps[1] == NodeSet({2}));

  auto sub = path.components_of_induced(NodeSet({1, 2}), 2);
  REQUIRE(sub.size() == 1);
  CHECK(sub[0] == NodeSet({1}));

  UnrootedTree star = star4();
  auto leaves = star.components_of_induced(all_nodes(star), 0);
  REQUIRE(leaves.size() == 3);
  CHECK(leaves[2] == NodeSet({3}));

  CHECK_THROWS_AS((void)star.components_of_induced(NodeSet({1, 2}), 1), Error);

  Rng rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    UnrootedTree space = gen_tree(TreeShape::random, 2 + bounded(rng, 10), rng());
    NodeSet all = all_nodes(space);
    NodeId r = bounded(rng, space.size());
    std::vector<char> seen(space.size(), 0);
    std::size_t total = 0;
    for (const NodeSet& comp : space.components_of_induced(all, r)) {
      for (NodeId v : comp) {
        CHECK(v != r);
        CHECK(!seen[v]);
        seen[v] = 1;
      }
      total += comp.size();
    }
    CHECK(total == all.size() - 1);
  }
}

TEST_CASE("convex hull examples and properties") {
  UnrootedTree path = path3();
  CHECK(path.convex_hull(NodeSet({0, 2})) == NodeSet({0, 1, 2}));
  CHECK(path.convex_hull(NodeSet({1})) == NodeSet({1}));
  UnrootedTree star = star4();
  CHECK(star.convex_hull(NodeSet({1, 2})) == NodeSet({0, 1, 2}));
  CHECK_THROWS_AS((void)star.convex_hull(NodeSet{}), Error);

  Rng rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    UnrootedTree space = gen_tree(TreeShape::random, 1 + bounded(rng, 14), rng());
    std::vector<NodeId> a, b;
    for (NodeId v = 0; v < space.size(); ++v) {
      if (bounded(rng, 3) == 0) a.push_back(v);
      if (bounded(rng, 2) == 0) b.push_back(v);
    }
    if (a.empty()) a.push_back(0);
    for (NodeId v : a)
      if (!contains_sorted(b, v)) insert_sorted(b, v);
    NodeSet A(a), B(b);
    NodeSet hull_a = space.convex_hull(A);
    NodeSet hull_b = space.convex_hull(B);
    CHECK(space.convex_hull(hull_a) == hull_a);     // idempotent
    for (NodeId v : hull_a) CHECK(hull_b.contains(v));  // monotone
    for (NodeId v : A) CHECK(hull_a.contains(v));
    CHECK(space.induced_connected(hull_a));
  }
}

TEST_CASE("leaf centroid of a path is its midpoint under the descent rule") {
  UnrootedTree path = gen_tree(TreeShape::path, 5);
  CHECK(path.leaf_centroid(all_nodes(path)) == 2);
}

TEST_CASE("leaf centroid of a star is the hub") {
  UnrootedTree star = gen_tree(TreeShape::star, 5);
  CHECK(star.leaf_centroid(all_nodes(star)) == 0);
}

TEST_CASE("leaf centroid always passes the definitional check") {
  Rng rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    UnrootedTree space = gen_tree(trial % 2 ? TreeShape::random : TreeShape::caterpillar,
                                  3 + bounded(rng, 10), rng());
    NodeSet all = all_nodes(space);
    NodeId v = space.leaf_centroid(all);
    CHECK(passes_leaf_centroid_definition(space, all, v));

    NodeId seed_node = bounded(rng, space.size());
    NodeSet sub = all;
    if (space.size() > 4) {
      NodeId removed = bounded(rng, space.size());
      if (removed != seed_node) sub = space.component_with(removed, seed_node);
    }
    if (sub.size() >= 3) {
      NodeId w = space.leaf_centroid(sub);
      CHECK(passes_leaf_centroid_definition(space, sub, w));
    }
  }
}

TEST_CASE("leaf centroid rejects tiny sets") {
  UnrootedTree path = path3();
  CHECK_THROWS_AS((void)path.leaf_centroid(NodeSet({0, 1})), Error);
  CHECK_THROWS_AS((void)path.leaf_centroid(NodeSet({0})), Error);
}

TEST_CASE("tree text format round-trips and reports line numbers") {
  UnrootedTree star = star4();
  UnrootedTree again = UnrootedTree::parse_string(star.format());
  CHECK(again.format() == star.format());

  auto parse_fails_with = [](const std::string& text, const std::string& fragment) {
    try {
      (void)UnrootedTree::parse_string(text);
      return false;
    } catch (const Error& e) {
      return std::string(e.what()).find(fragment) != std::string::npos;
    }
  };
  CHECK(parse_fails_with("", "line 1"));
  CHECK(parse_fails_with("x\n", "line 1"));
  CHECK(parse_fails_with("3\n0 1\n", "line"));
  CHECK(parse_fails_with("3\n0 1\n1 two\n", "line 3"));
  CHECK(parse_fails_with("3\n0 1\n1 2 9\n", "line 3"));
}
