#include "leafstars/counting.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>

#include "leafstars/errors.hpp"

namespace leafstars {

BigCount binomial(long long n, long long t) {
  if (t < 0 || n < 0 || t > n) return 0;
  t = std::min(t, n - t);
  BigCount result = 1;
  for (long long i = 1; i <= t; ++i) {
    result *= n - t + i;
    result /= i;
  }
  return result;
}

const BigCount& SizeCountVector::at(int s) const {
  static const BigCount zero = 0;
  if (s < 0 || s >= static_cast<int>(counts.size())) return zero;
  return counts[s];
}

int SizeCountVector::max_size() const {
  for (int s = static_cast<int>(counts.size()) - 1; s >= 0; --s)
    if (counts[s] != 0) return s;
  return 0;
}

namespace {

// Independence polynomial coefficients; index = set size.
using Poly = std::vector<BigCount>;

Poly convolve(const Poly& a, const Poly& b) {
  Poly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) c[i + j] += a[i] * b[j];
  }
  return c;
}

Poly sum(const Poly& a, const Poly& b) {
  Poly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  return c;
}

}  // namespace

SizeCountVector independence_counts(const Graph& g) {
  if (!is_forest(g)) return brute_force_independence_counts(g);
  int n = g.vertex_count();
  std::vector<char> visited(n, 0);
  std::vector<VertexId> parent(n, -1), order;
  order.reserve(n);
  Poly total{1};
  for (VertexId root = 0; root < n; ++root) {
    if (visited[root]) continue;
    // preorder of the component, then the DP in reverse
    order.clear();
    std::vector<VertexId> stack{root};
    visited[root] = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (VertexId w : g.neighbors(v))
        if (!visited[w]) {
          visited[w] = 1;
          parent[w] = v;
          stack.push_back(w);
        }
    }
    std::vector<Poly> with(n), without(n);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      VertexId v = *it;
      with[v] = Poly{0, 1};  // just {v}
      without[v] = Poly{1};
      for (VertexId w : g.neighbors(v)) {
        if (parent[w] != v) continue;
        with[v] = convolve(with[v], without[w]);
        without[v] = convolve(without[v], sum(with[w], without[w]));
        with[w].clear();
        without[w].clear();
      }
    }
    total = convolve(total, sum(with[root], without[root]));
  }
  total.resize(n + 1, 0);
  return SizeCountVector{std::move(total)};
}

SizeCountVector brute_force_independence_counts(const Graph& g, int cap) {
  int n = g.vertex_count();
  if (n > cap)
    throw CapExceededError("brute-force independence counting capped at " +
                           std::to_string(cap) + " vertices, got " + std::to_string(n));
  std::vector<std::uint64_t> adj_mask(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adj_mask[u] |= std::uint64_t{1} << v;
    adj_mask[v] |= std::uint64_t{1} << u;
  }
  std::vector<BigCount> counts(n + 1, 0);
  // include/exclude over vertices in id order; `blocked` marks neighbors of
  // the chosen set, so every leaf of the recursion is one independent set
  auto rec = [&](auto&& self, int i, int size, std::uint64_t blocked) -> void {
    if (i == n) {
      ++counts[size];
      return;
    }
    self(self, i + 1, size, blocked);
    if (!((blocked >> i) & 1)) self(self, i + 1, size + 1, blocked | adj_mask[i]);
  };
  rec(rec, 0, 0, 0);
  return SizeCountVector{std::move(counts)};
}

BigCount star_count(const Graph& g, VertexId v, int r) {
  if (!g.valid_vertex(v)) throw PreconditionError("star_count: invalid vertex");
  if (r <= 0) return 0;
  auto rest = delete_closed_neighborhood(g, v);
  return independence_counts(rest.graph).at(r - 1);
}

StarTable star_table(const Graph& g, int r) {
  StarTable t;
  t.r = r;
  t.counts.reserve(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) t.counts.push_back(star_count(g, v, r));
  return t;
}

int max_nonempty_star_size(const Graph& g, VertexId v) {
  if (!g.valid_vertex(v)) throw PreconditionError("max_nonempty_star_size: invalid vertex");
  auto rest = delete_closed_neighborhood(g, v);
  return 1 + independence_counts(rest.graph).max_size();
}

namespace {

// Exact minimum maximal independent set by branch and bound: every maximal
// independent set meets the closed neighborhood of every vertex, so branch
// on which member of an undominated vertex's closed neighborhood joins.
class MuSolver {
public:
  explicit MuSolver(const Graph& g)
      : g_(g),
        n_(g.vertex_count()),
        in_set_(n_, 0),
        dominators_(n_, 0),
        adjacent_members_(n_, 0),
        undominated_(n_) {
    for (VertexId v = 0; v < n_; ++v) max_cover_ = std::max(max_cover_, g.degree(v) + 1);
  }

  int solve() {
    if (n_ == 0) return 0;
    best_ = greedy_upper_bound();
    search(0);
    return best_;
  }

private:
  int greedy_upper_bound() {
    std::vector<char> taken(n_, 0), blocked(n_, 0);
    int size = 0;
    for (VertexId v = 0; v < n_; ++v) {
      if (blocked[v]) continue;
      taken[v] = blocked[v] = 1;
      ++size;
      for (VertexId w : g_.neighbors(v)) blocked[w] = 1;
    }
    return size;
  }

  void add(VertexId v) {
    in_set_[v] = 1;
    ++size_;
    if (dominators_[v]++ == 0) --undominated_;
    for (VertexId w : g_.neighbors(v)) {
      ++adjacent_members_[w];
      if (dominators_[w]++ == 0) --undominated_;
    }
  }

  void remove(VertexId v) {
    in_set_[v] = 0;
    --size_;
    if (--dominators_[v] == 0) ++undominated_;
    for (VertexId w : g_.neighbors(v)) {
      --adjacent_members_[w];
      if (--dominators_[w] == 0) ++undominated_;
    }
  }

  bool addable(VertexId v) const { return !in_set_[v] && adjacent_members_[v] == 0; }

  void search(VertexId hint) {
    if (size_ + (undominated_ + max_cover_ - 1) / max_cover_ >= best_) return;
    if (undominated_ == 0) {
      best_ = size_;  // independent and dominating, hence maximal
      return;
    }
    VertexId v = hint;
    while (dominators_[v] > 0) ++v;
    add(v);
    search(v + 1);
    remove(v);
    for (VertexId w : g_.neighbors(v)) {
      if (!addable(w)) continue;
      add(w);
      search(v + 1);
      remove(w);
    }
  }

  const Graph& g_;
  int n_;
  std::vector<char> in_set_;
  std::vector<int> dominators_;        // members of N[v] in the set
  std::vector<int> adjacent_members_;  // members of N(v) in the set
  int undominated_;
  int size_ = 0;
  int best_ = 0;
  int max_cover_ = 1;  // max vertices a single member can dominate
};

}  // namespace

int mu(const Graph& g) {
  int cap = is_forest(g) ? kMuForestCap : kMuGeneralCap;
  if (g.vertex_count() > cap)
    throw CapExceededError("exact mu capped at " + std::to_string(cap) +
                           " vertices, got " + std::to_string(g.vertex_count()));
  return MuSolver(g).solve();
}

ConjectureVerdict conjecture_verdict(const Graph& g, int r) {
  if (!is_tree(g)) throw PreconditionError("conjecture_verdict requires a tree");
  if (r < 1) throw PreconditionError("conjecture_verdict requires r >= 1");
  ConjectureVerdict verdict;
  verdict.r = r;
  StarTable table = star_table(g, r);
  verdict.max_count = *std::max_element(table.counts.begin(), table.counts.end());
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (table.counts[v] == verdict.max_count) verdict.argmax_vertices.push_back(v);
  for (VertexId z : leaves(g)) {
    if (std::binary_search(verdict.argmax_vertices.begin(), verdict.argmax_vertices.end(), z)) {
      verdict.holds = true;
      verdict.witness_leaf = z;
      break;
    }
  }
  return verdict;
}

}  // namespace leafstars
