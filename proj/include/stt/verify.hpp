#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "stt/generators.hpp"
#include "stt/search_tree.hpp"

namespace stt::verify {

struct SuiteOptions {
  int size_cap = 12;
  long long trials = 200;
  std::uint32_t seed = 1;
  int threads = 0;  // 0: use all available when built with OpenMP; 1: serial
};

struct SuiteResult {
  std::string suite;
  long long checks = 0;
  long long failures = 0;
  std::vector<std::string> messages;

  bool ok() const { return failures == 0; }
};

std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts);

SuiteResult run_stt_suite(const SuiteOptions& opts);
SuiteResult run_kcut_suite(const SuiteOptions& opts);
SuiteResult run_steiner_suite(const SuiteOptions& opts);
SuiteResult run_rotdist_suite(const SuiteOptions& opts);
SuiteResult run_splay_suite(const SuiteOptions& opts);
SuiteResult run_potential_suite(const SuiteOptions& opts);

// Trial fan-out shared by the suites: runs `trial(index, out)` for every
// index, serially or across OpenMP threads, and merges outcomes by index.
struct TrialOutcome {
  long long checks = 0;
  long long failures = 0;
  std::vector<std::string> messages;

  void check(bool ok, const std::string& msg) {
    ++checks;
    if (!ok) {
      ++failures;
      messages.push_back(msg);
    }
  }
};

void run_trials(long long trials, int threads,
                const std::function<void(long long, TrialOutcome&)>& trial, SuiteResult& result);

// Reference bottom-up splay over keys 0..n-1, kept independent of the
// search-tree machinery; oracle for path-shaped spaces.
class ClassicSplayTree {
 public:
  ClassicSplayTree(int n, const std::vector<NodeId>& parents);
  int search(NodeId x);  // splays x to the root, returns the rotation count
  int depth(NodeId x) const;
  NodeId root() const { return root_; }
  const std::vector<NodeId>& parents() const { return parent_; }

 private:
  void rotate_up(NodeId x);

  NodeId root_;
  std::vector<NodeId> parent_, left_, right_;
};

// All non-isomorphic trees with exactly n nodes (canonical labeled
// representatives).
std::vector<UnrootedTree> all_tree_shapes(int n);

// Every search tree on the space, enumerated by recursive root choice.
void for_each_stt(const UnrootedTree& space,
                  const std::function<void(const SearchTree&)>& fn);

// All connected node subsets; bitmask sweep, small n only.
std::vector<NodeSet> all_connected_subsets(const UnrootedTree& space);

// A mixed random tree for trial-driven suites: shape cycles with the index.
UnrootedTree random_trial_tree(long long index, int max_n, Rng& rng);

}  // namespace stt::verify
