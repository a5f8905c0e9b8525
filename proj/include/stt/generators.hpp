#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "stt/search_tree.hpp"

namespace stt {

using Rng = std::mt19937;

// Uniform integer in [0, n) with rejection; stable across platforms for a
// given seed, unlike the standard distributions.
std::uint32_t bounded(Rng& rng, std::uint32_t n);
double unit_interval(Rng& rng);

enum class TreeShape { path, star, caterpillar, spider, random };

TreeShape parse_tree_shape(const std::string& name);
UnrootedTree gen_tree(TreeShape shape, int n, std::uint32_t seed = 0);

enum class SeqDist { uniform, zipf, sequential, single };

SeqDist parse_seq_dist(const std::string& name);
// m node ids over [0, n). `param` is the zipf exponent, or the fixed node
// for `single`.
std::vector<NodeId> gen_sequence(SeqDist dist, int n, long long m, std::uint32_t seed = 0,
                                 double param = 1.0);

std::string format_sequence(const std::vector<NodeId>& seq);
std::vector<NodeId> parse_sequence(const std::string& text, int n);

// Uniformly recursive random search tree: random root, recurse on components.
SearchTree random_stt(const UnrootedTree& space, Rng& rng);
// Random k-cut tree (a random tree pushed through the depth-bounded
// transform).
SearchTree random_kcut_stt(const UnrootedTree& space, int k, Rng& rng);

}  // namespace stt
