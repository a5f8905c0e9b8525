#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "stt/search_tree.hpp"

namespace stt {

// Per-node non-negative search frequencies.
class FrequencyMap {
 public:
  explicit FrequencyMap(int n) : counts_(n, 0) {}
  FrequencyMap(int n, const std::vector<long long>& counts);
  static FrequencyMap uniform(int n, long long c = 1);
  static FrequencyMap from_sequence(int n, const std::vector<NodeId>& seq);

  int size() const { return static_cast<int>(counts_.size()); }
  long long at(NodeId v) const { return counts_[v]; }
  void set(NodeId v, long long c);
  long long total() const;

  // File format: lines "node count".
  static FrequencyMap parse(std::istream& in, int n);
  std::string format() const;

 private:
  std::vector<long long> counts_;
};

// A connected node set with boundary size at most k, keyed by its cut.
struct AdmissibleSet {
  std::vector<std::pair<NodeId, NodeId>> cut;  // (outside, inside), sorted
  NodeSet nodes;

  std::vector<NodeId> boundary() const;
};

// All k-admissible subsets of the space, each exactly once (cuts with
// redundant or misdirected edges never arise). Ordered by size, then by node
// set; includes the full node set.
std::vector<AdmissibleSet> enumerate_admissible(const UnrootedTree& space, int k);

// The nodes whose removal from A leaves only k-admissible components:
// everything when the boundary is smaller than k, otherwise the hull of the
// boundary restricted to A. Requires k >= 2.
std::vector<NodeId> admissible_roots(const UnrootedTree& space, const AdmissibleSet& A, int k);

long long static_cost(const SearchTree& tree, const FrequencyMap& freq);

struct OptResult {
  SearchTree tree;
  long long cost;
};

struct DpStats {
  std::vector<int> component_lookups;  // per admissible set, across all roots
  std::vector<int> induced_edges;      // edge count of the induced subtree
};

// Minimum-cost k-cut search tree by dynamic programming over admissible
// sets, k >= 2. Ties among roots break toward the smallest id.
OptResult opt_kcut(const UnrootedTree& space, int k, const FrequencyMap& freq,
                   DpStats* stats = nullptr);

// Guaranteed (1 + 1/t)-approximation of the unrestricted optimum.
OptResult ptas(const UnrootedTree& space, int t, const FrequencyMap& freq);

// Exact optimum over all search trees; exponential-state oracle, capped.
OptResult brute_opt(const UnrootedTree& space, const FrequencyMap& freq, int cap = 10);

// Best rooted version of the space itself (the optimal 1-cut tree).
OptResult best_rooted(const UnrootedTree& space, const FrequencyMap& freq);

}  // namespace stt
