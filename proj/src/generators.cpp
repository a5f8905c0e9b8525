#include "stt/generators.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "stt/kcut.hpp"

namespace stt {

std::uint32_t bounded(Rng& rng, std::uint32_t n) {
  if (n == 0) throw Error(Errc::bad_argument, "bounded(0)");
  std::uint32_t limit = std::numeric_limits<std::uint32_t>::max() -
                        std::numeric_limits<std::uint32_t>::max() % n;
  std::uint32_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

double unit_interval(Rng& rng) {
  return static_cast<double>(rng()) / 4294967296.0;
}

TreeShape parse_tree_shape(const std::string& name) {
  if (name == "path") return TreeShape::path;
  if (name == "star") return TreeShape::star;
  if (name == "caterpillar") return TreeShape::caterpillar;
  if (name == "spider") return TreeShape::spider;
  if (name == "random") return TreeShape::random;
  throw Error(Errc::bad_argument, "unknown tree shape: " + name);
}

UnrootedTree gen_tree(TreeShape shape, int n, std::uint32_t seed) {
  if (n < 1) throw Error(Errc::bad_argument, "tree size must be positive");
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(n - 1);
  switch (shape) {
    case TreeShape::path:
      for (NodeId v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
      break;
    case TreeShape::star:
      for (NodeId v = 1; v < n; ++v) edges.emplace_back(0, v);
      break;
    case TreeShape::caterpillar: {
      int spine = (n + 1) / 2;
      for (NodeId v = 1; v < spine; ++v) edges.emplace_back(v - 1, v);
      for (NodeId v = spine; v < n; ++v) edges.emplace_back((v - spine) % spine, v);
      break;
    }
    case TreeShape::spider: {
      int legs = std::min(3, n - 1);
      std::vector<NodeId> tip(legs, 0);
      for (NodeId v = 1; v < n; ++v) {
        int leg = (v - 1) % legs;
        edges.emplace_back(tip[leg], v);
        tip[leg] = v;
      }
      break;
    }
    case TreeShape::random: {
      Rng rng(seed);
      for (NodeId v = 1; v < n; ++v)
        edges.emplace_back(static_cast<NodeId>(bounded(rng, v)), v);
      break;
    }
  }
  return UnrootedTree(n, edges);
}

SeqDist parse_seq_dist(const std::string& name) {
  if (name == "uniform") return SeqDist::uniform;
  if (name == "zipf") return SeqDist::zipf;
  if (name == "sequential") return SeqDist::sequential;
  if (name == "single") return SeqDist::single;
  throw Error(Errc::bad_argument, "unknown sequence distribution: " + name);
}

std::vector<NodeId> gen_sequence(SeqDist dist, int n, long long m, std::uint32_t seed,
                                 double param) {
  if (n < 1) throw Error(Errc::bad_argument, "domain must be positive");
  if (m < 0) throw Error(Errc::bad_argument, "sequence length must be non-negative");
  std::vector<NodeId> out;
  out.reserve(m);
  Rng rng(seed);
  switch (dist) {
    case SeqDist::uniform:
      for (long long i = 0; i < m; ++i) out.push_back(static_cast<NodeId>(bounded(rng, n)));
      break;
    case SeqDist::zipf: {
      if (param <= 0) throw Error(Errc::bad_argument, "zipf exponent must be positive");
      std::vector<double> cdf(n);
      double acc = 0;
      for (int i = 0; i < n; ++i) {
        acc += 1.0 / std::pow(static_cast<double>(i + 1), param);
        cdf[i] = acc;
      }
      for (long long i = 0; i < m; ++i) {
        double u = unit_interval(rng) * acc;
        int lo = 0, hi = n - 1;
        while (lo < hi) {
          int mid = (lo + hi) / 2;
          if (cdf[mid] >= u)
            hi = mid;
          else
            lo = mid + 1;
        }
        out.push_back(lo);
      }
      break;
    }
    case SeqDist::sequential:
      for (long long i = 0; i < m; ++i) out.push_back(static_cast<NodeId>(i % n));
      break;
    case SeqDist::single: {
      NodeId v = static_cast<NodeId>(param);
      if (v < 0 || v >= n) throw Error(Errc::bad_argument, "single node out of range");
      out.assign(m, v);
      break;
    }
  }
  return out;
}

std::string format_sequence(const std::vector<NodeId>& seq) {
  std::ostringstream out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out << " ";
    out << seq[i];
  }
  out << "\n";
  return out.str();
}

std::vector<NodeId> parse_sequence(const std::string& text, int n) {
  std::istringstream in(text);
  std::vector<NodeId> out;
  NodeId v;
  while (in >> v) {
    if (v < 0 || v >= n)
      throw Error(Errc::parse, "sequence node " + std::to_string(v) + " out of range");
    out.push_back(v);
  }
  if (!in.eof()) throw Error(Errc::parse, "sequence file contains a non-integer token");
  return out;
}

SearchTree random_stt(const UnrootedTree& space, Rng& rng) {
  int n = space.size();
  std::vector<NodeId> parents(n, kNone);
  struct Item {
    NodeSet nodes;
    NodeId parent;
  };
  std::vector<NodeId> all(n);
  for (NodeId v = 0; v < n; ++v) all[v] = v;
  std::vector<Item> work{{NodeSet(all), kNone}};
  while (!work.empty()) {
    Item item = std::move(work.back());
    work.pop_back();
    NodeId r = item.nodes.ids()[bounded(rng, static_cast<std::uint32_t>(item.nodes.size()))];
    parents[r] = item.parent;
    if (item.nodes.size() == 1) continue;
    for (NodeSet& comp : space.components_of_induced(item.nodes, r))
      work.push_back({std::move(comp), r});
  }
  return SearchTree::from_parents(space, parents);
}

SearchTree random_kcut_stt(const UnrootedTree& space, int k, Rng& rng) {
  return fix_improved(random_stt(space, rng), k);
}

}  // namespace stt
