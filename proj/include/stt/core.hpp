#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace stt {

using NodeId = int;
inline constexpr NodeId kNone = -1;

enum class Errc {
  node_out_of_range,
  self_loop,
  duplicate_edge,
  cyclic,
  disconnected,
  bad_argument,
  parse,
  rotate_root,
  illegal_move,
  not_k_cut,
  non_separating_triple,
  space_mismatch,
  too_large,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

// Set of node ids with deterministic ascending iteration.
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(std::vector<NodeId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }

  static NodeSet single(NodeId v) { return NodeSet(std::vector<NodeId>{v}); }

  bool contains(NodeId v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
  }
  void insert(NodeId v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) ids_.insert(it, v);
  }

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  NodeId front() const { return ids_.front(); }

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  const std::vector<NodeId>& ids() const { return ids_; }

  bool operator==(const NodeSet& o) const { return ids_ == o.ids_; }
  bool operator!=(const NodeSet& o) const { return ids_ != o.ids_; }
  bool operator<(const NodeSet& o) const { return ids_ < o.ids_; }

 private:
  std::vector<NodeId> ids_;  // sorted, unique
};

inline void insert_sorted(std::vector<NodeId>& v, NodeId x) {
  v.insert(std::lower_bound(v.begin(), v.end(), x), x);
}

inline void erase_sorted(std::vector<NodeId>& v, NodeId x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it != v.end() && *it == x) v.erase(it);
}

inline bool contains_sorted(const std::vector<NodeId>& v, NodeId x) {
  return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace stt
