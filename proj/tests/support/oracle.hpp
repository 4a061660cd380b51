// Test-only oracles, kept independent of the library's counting paths:
// explicit set enumeration, whole-subset masks, permutation isomorphism,
// and Prüfer-sequence tree generation.
#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "leafstars/counting.hpp"
#include "leafstars/graph.hpp"

namespace oracle {

using leafstars::BigCount;
using leafstars::Graph;
using leafstars::VertexId;

// Visits every independent set exactly once, as an explicit vertex list in
// ascending order.
void for_each_independent_set(const Graph& g,
                              const std::function<void(const std::vector<VertexId>&)>& visit);

// Counts by size via for_each_independent_set.
std::vector<BigCount> counts_by_size(const Graph& g);

// Counts by size by testing all 2^n subsets against adjacency masks (n <= 20).
std::vector<BigCount> counts_by_size_masks(const Graph& g);

// |I_G^(r)(v)| by direct enumeration and filtering.
BigCount star_count_direct(const Graph& g, VertexId v, int r);

// Isomorphism by trying all vertex permutations (n <= 8).
bool is_isomorphic_brute(const Graph& a, const Graph& b);

// Relabeled copy: vertex v becomes perm[v].
Graph permuted(const Graph& g, const std::vector<VertexId>& perm);

// Labeled tree on n >= 2 vertices from a Prüfer sequence (length n-2).
Graph prufer_decode(int n, const std::vector<int>& seq);

// Number of isomorphism classes among all n^(n-2) labeled trees, dedup by
// canonical code.
long long count_free_trees_prufer(int n);

// Uniform random labeled tree on n >= 2 vertices.
Graph random_tree(std::mt19937& rng, int n);

// Random forest: random tree with a random subset of edges removed.
Graph random_forest(std::mt19937& rng, int n);

std::vector<VertexId> random_permutation(std::mt19937& rng, int n);

}  // namespace oracle
