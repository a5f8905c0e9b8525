#pragma once

#include <string>
#include <vector>

#include "stt/opt.hpp"
#include "stt/search_tree.hpp"
#include "stt/splay.hpp"

namespace stt {

// Per-node potential against a fixed Steiner-closed reference tree R:
// phi(x) = -min over the subtree of x of depth_R, maintained incrementally
// under rotations (only the two rotated nodes change).
class PotentialTracker {
 public:
  PotentialTracker(const SearchTree& reference, int d = 4);

  void attach(const SearchTree& tree);  // full recompute
  // Call right after rotate(x); only x and its old parent change.
  void after_rotation(const SearchTree& tree, NodeId x, NodeId old_parent);

  int node_phi(NodeId x) const { return -min_depth_[x]; }
  long long unit_sum() const { return unit_sum_; }          // sum of phi(x), unscaled
  long long total() const { return d_ * unit_sum_; }        // Phi(T)
  int d() const { return d_; }
  int reference_depth(NodeId x) const { return ref_depth_[x]; }

  long long unit_sum_recomputed(const SearchTree& tree) const;  // oracle

 private:
  int d_;
  std::vector<int> ref_depth_;
  std::vector<int> min_depth_;
  long long unit_sum_ = 0;
};

// Phi(T) for reference R and scale d; exact integer.
long long potential(const SearchTree& tree, const SearchTree& reference, int d = 4);

struct AmortizedReport {
  long long searches = 0;
  long long steps = 0;
  long long search_violations = 0;  // depth + dPhi > 24 depth_R + slack
  long long step_violations = 0;    // elementary step above its 3*dphi bound
  long long phase_violations = 0;   // per-splay telescoped bound
  double max_ratio = 0.0;           // (depth + dPhi) / (24 depth_R + slack)
  std::string first_violation;

  bool ok() const {
    return search_violations == 0 && step_violations == 0 && phase_violations == 0;
  }
};

inline constexpr int kAmortizedConstant = 24;  // 6d with d = 4
inline constexpr int kAmortizedSlack = 4;      // the +d left by z >= depth/4 - 1

// Serves X with the self-adjusting search and checks, per search,
// depth_T(x) + Phi' - Phi <= 24 depth_R(x) + 4, plus the per-step and
// per-splay potential bounds. The initial tree defaults to the rooted
// space at node 0.
AmortizedReport amortized_check(const UnrootedTree& space, const std::vector<NodeId>& searches,
                                const SearchTree& reference, int d = 4,
                                const SearchTree* initial = nullptr);

struct ExperimentRow {
  std::string instance;
  int n = 0;
  long long m = 0;
  long long cost_splay = 0;  // dynamic model cost
  long long cost_reference = 0;
  long long opt = 0;
  double ratio = 0.0;
  double max_amortized_ratio = 0.0;
  long long violations = 0;
  bool bound_holds = false;          // cost_splay <= 24 cost_R + 4m + 4n^2
  bool tight_bound_checked = false;  // every node searched at least once
  bool tight_bound_holds = false;    // additive term 4 * sum depth_R instead
};

std::string experiment_csv_header();
std::string format_experiment_row(const ExperimentRow& row);

// Builds the reference tree from the exact optimum (steinerized) when the
// instance fits under the brute-force cap, otherwise from the 2-cut optimum,
// then serves X and reports cost and bound checks.
ExperimentRow static_optimality_experiment(const UnrootedTree& space,
                                           const std::vector<NodeId>& searches,
                                           const std::string& instance_label,
                                           int brute_cap = 10);

}  // namespace stt
