#include "leafstars/treegen.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <numeric>
#include <string>
#include <thread>

#include "leafstars/errors.hpp"

namespace leafstars {

namespace {

using Levels = std::vector<int>;

// Successor in the Beyer-Hedetniemi ordering of rooted-tree level sequences
// (root at level 0, decreasing lexicographic order). With an explicit p the
// sequence is truncated at position p first.
std::optional<Levels> next_rooted(const Levels& pred, int p = -1) {
  if (p < 0) {
    p = static_cast<int>(pred.size()) - 1;
    while (pred[p] == 1) --p;
  }
  if (p == 0) return std::nullopt;
  int q = p - 1;
  while (pred[q] != pred[p] - 1) --q;
  Levels result(pred);
  for (std::size_t i = p; i < result.size(); ++i) result[i] = result[i - p + q];
  return result;
}

// Splits a layout into the root's first subtree (re-based to level 0) and
// the remainder including the root.
void split_tree(const Levels& layout, Levels& left, Levels& rest) {
  std::size_t m = layout.size();
  bool first_one_seen = false;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i] != 1) continue;
    if (first_one_seen) {
      m = i;
      break;
    }
    first_one_seen = true;
  }
  left.assign(layout.begin() + 1, layout.begin() + m);
  for (int& l : left) --l;
  rest.clear();
  rest.push_back(0);
  rest.insert(rest.end(), layout.begin() + m, layout.end());
}

// WROM free-tree condition plus the jump to the next valid candidate. A
// rooted layout encodes a free tree iff the root is the centroid, which the
// scheme enforces by comparing the first subtree against the rest: its
// height (then size, then sequence) must not dominate.
std::optional<Levels> next_free(Levels candidate) {
  Levels left, rest;
  split_tree(candidate, left, rest);
  int left_height = *std::max_element(left.begin(), left.end());
  int rest_height = *std::max_element(rest.begin(), rest.end());
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (left.size() > rest.size())
      valid = false;
    else if (left.size() == rest.size() && left > rest)
      valid = false;
  }
  if (valid) return candidate;

  int p = static_cast<int>(left.size());
  auto next = next_rooted(candidate, p);
  if (!next) return std::nullopt;
  if (candidate[p] > 2) {
    // after truncating inside a deep subtree, restore the canonical tail:
    // a path one longer than the new first subtree's height
    Levels new_left, new_rest;
    split_tree(*next, new_left, new_rest);
    int h = *std::max_element(new_left.begin(), new_left.end());
    std::size_t len = static_cast<std::size_t>(h) + 1;
    for (std::size_t i = 0; i < len; ++i)
      (*next)[next->size() - len + i] = static_cast<int>(i) + 1;
  }
  return next;
}

Graph layout_to_graph(const Levels& layout) {
  int n = static_cast<int>(layout.size());
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  std::vector<VertexId> last_at_level(n, -1);
  for (int i = 0; i < n; ++i) {
    int level = layout[i];
    if (level > 0) edges.emplace_back(last_at_level[level - 1], i);
    last_at_level[level] = i;
  }
  return Graph(n, std::move(edges));
}

}  // namespace

FreeTreeGenerator::FreeTreeGenerator(int n, int cap) : n_(n) {
  if (n < 2 || n > cap)
    throw PreconditionError("free tree generation requires 2 <= n <= " +
                            std::to_string(cap) + ", got n = " + std::to_string(n));
  // start from the path rooted at its center: the lexicographically largest
  // valid layout
  Levels init;
  init.reserve(n);
  for (int i = 0; i < n / 2 + 1; ++i) init.push_back(i);
  for (int i = 1; i < (n + 1) / 2; ++i) init.push_back(i);
  candidate_ = std::move(init);
}

std::optional<Graph> FreeTreeGenerator::next() {
  if (!candidate_) return std::nullopt;
  auto valid = next_free(std::move(*candidate_));
  if (!valid) {
    candidate_.reset();
    return std::nullopt;
  }
  Graph g = layout_to_graph(*valid);
  candidate_ = next_rooted(*valid);
  return g;
}

std::vector<Graph> free_trees(int n, int cap) {
  FreeTreeGenerator gen(n, cap);
  std::vector<Graph> trees;
  while (auto g = gen.next()) trees.push_back(std::move(*g));
  return trees;
}

long long SearchReport::total_trees() const {
  return std::accumulate(trees_examined.begin(), trees_examined.end(), 0LL,
                         [](long long acc, const auto& p) { return acc + p.second; });
}

namespace {

std::vector<Counterexample> check_batch(const std::vector<Graph>& batch,
                                        long long first_index, int n,
                                        std::pair<int, int> r_range) {
  std::vector<Counterexample> found;
  for (std::size_t i = 0; i < batch.size(); ++i) {
    const Graph& tree = batch[i];
    for (int r = r_range.first; r <= r_range.second; ++r) {
      ConjectureVerdict verdict = conjecture_verdict(tree, r);
      if (verdict.holds) continue;
      Counterexample cx;
      cx.n = n;
      cx.tree_index = first_index + static_cast<long long>(i);
      cx.r = r;
      cx.edge_list = to_edge_list(tree);
      cx.max_count = verdict.max_count;
      cx.argmax_vertices = verdict.argmax_vertices;
      cx.best_leaf_count = 0;
      for (VertexId z : leaves(tree))
        cx.best_leaf_count = std::max(cx.best_leaf_count, star_count(tree, z, r));
      found.push_back(std::move(cx));
    }
  }
  return found;
}

}  // namespace

SearchReport search_counterexamples(std::pair<int, int> n_range,
                                    std::pair<int, int> r_range, int workers, int cap) {
  if (n_range.first < 2 || n_range.second > cap || n_range.first > n_range.second)
    throw PreconditionError("search requires 2 <= n_lo <= n_hi <= " + std::to_string(cap));
  if (r_range.first < 1 || r_range.first > r_range.second)
    throw PreconditionError("search requires 1 <= r_lo <= r_hi");
  workers = std::max(1, workers);

  auto started = std::chrono::steady_clock::now();
  SearchReport report;
  report.n_range = n_range;
  report.r_range = r_range;

  constexpr std::size_t kBatchSize = 64;
  for (int n = n_range.first; n <= n_range.second; ++n) {
    FreeTreeGenerator gen(n, cap);
    long long count = 0;
    // batches are dispatched in generation order and joined in that same
    // order, so the merged report does not depend on the worker count
    std::vector<std::future<std::vector<Counterexample>>> pending;
    auto drain = [&](std::size_t keep) {
      while (pending.size() > keep) {
        auto found = pending.front().get();
        pending.erase(pending.begin());
        for (auto& cx : found) report.counterexamples.push_back(std::move(cx));
      }
    };
    std::vector<Graph> batch;
    batch.reserve(kBatchSize);
    long long batch_start = 0;
    auto flush = [&]() {
      if (batch.empty()) return;
      if (workers == 1) {
        for (auto& cx : check_batch(batch, batch_start, n, r_range))
          report.counterexamples.push_back(std::move(cx));
      } else {
        drain(static_cast<std::size_t>(workers));
        pending.push_back(std::async(std::launch::async, check_batch, std::move(batch),
                                     batch_start, n, r_range));
      }
      batch = {};
      batch.reserve(kBatchSize);
      batch_start = count;
    };
    while (auto tree = gen.next()) {
      batch.push_back(std::move(*tree));
      ++count;
      if (batch.size() == kBatchSize) flush();
    }
    flush();
    drain(0);
    report.trees_examined.emplace_back(n, count);
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

SearchReport verify_hk_small(int n_max, int r_max, int workers) {
  return search_counterexamples({2, n_max}, {1, r_max}, workers);
}

}  // namespace leafstars
