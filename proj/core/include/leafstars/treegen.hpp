#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leafstars/counting.hpp"
#include "leafstars/graph.hpp"

namespace leafstars {

inline constexpr int kFreeTreeCap = 18;

/// Streams every isomorphism class of free trees on n vertices exactly once,
/// via the WROM successor scheme on canonical level sequences (root at the
/// centroid, candidates visited in decreasing lexicographic order).
class FreeTreeGenerator {
public:
  // Requires 2 <= n <= cap.
  explicit FreeTreeGenerator(int n, int cap = kFreeTreeCap);

  // Next tree, or nullopt when the stream is exhausted.
  std::optional<Graph> next();

  int order() const { return n_; }

private:
  int n_;
  std::optional<std::vector<int>> candidate_;  // next rooted candidate
};

// Collects the whole stream. Requires 2 <= n <= cap.
std::vector<Graph> free_trees(int n, int cap = kFreeTreeCap);

/// One conjecture failure found by the search: a tree where no leaf attains
/// the maximum star size at this r.
struct Counterexample {
  int n = 0;
  long long tree_index = 0;  // generation order within its n
  int r = 0;
  std::string edge_list;     // interchange format of the graph module
  BigCount max_count;
  BigCount best_leaf_count;
  std::vector<VertexId> argmax_vertices;
};

struct SearchReport {
  std::pair<int, int> n_range{0, 0};
  std::pair<int, int> r_range{0, 0};
  std::vector<std::pair<int, long long>> trees_examined;  // (n, count)
  std::vector<Counterexample> counterexamples;            // ordered by n, index, r
  double elapsed_seconds = 0.0;  // not part of the serialized report

  long long total_trees() const;
};

// Runs conjecture_verdict over every free tree in n_range for every r in
// r_range. Trees are generated sequentially and handed to `workers` threads
// in fixed-size batches; results are merged back in generation order, so the
// report is deterministic regardless of worker count.
SearchReport search_counterexamples(std::pair<int, int> n_range,
                                    std::pair<int, int> r_range,
                                    int workers = 1,
                                    int cap = kFreeTreeCap);

// The r <= 4 confirmation run: all trees with 2 <= n <= n_max, r in
// [1, r_max]. The returned report is expected to contain no counterexamples.
SearchReport verify_hk_small(int n_max, int r_max = 4, int workers = 1);

}  // namespace leafstars
