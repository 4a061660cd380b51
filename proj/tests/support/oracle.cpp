#include "oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <string>

#include "leafstars/errors.hpp"

namespace oracle {

void for_each_independent_set(const Graph& g,
                              const std::function<void(const std::vector<VertexId>&)>& visit) {
  std::vector<VertexId> chosen;
  std::vector<char> blocked(g.vertex_count(), 0);
  auto rec = [&](auto&& self, VertexId next) -> void {
    visit(chosen);
    for (VertexId v = next; v < g.vertex_count(); ++v) {
      if (blocked[v]) continue;
      std::vector<VertexId> newly_blocked;
      for (VertexId w : g.neighbors(v))
        if (!blocked[w]) {
          blocked[w] = 1;
          newly_blocked.push_back(w);
        }
      chosen.push_back(v);
      self(self, v + 1);
      chosen.pop_back();
      for (VertexId w : newly_blocked) blocked[w] = 0;
    }
  };
  rec(rec, 0);
}

std::vector<BigCount> counts_by_size(const Graph& g) {
  std::vector<BigCount> counts(g.vertex_count() + 1, 0);
  for_each_independent_set(g, [&](const std::vector<VertexId>& s) { ++counts[s.size()]; });
  return counts;
}

std::vector<BigCount> counts_by_size_masks(const Graph& g) {
  int n = g.vertex_count();
  if (n > 20) throw leafstars::CapExceededError("mask oracle limited to 20 vertices");
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= std::uint32_t{1} << v;
    adj[v] |= std::uint32_t{1} << u;
  }
  std::vector<BigCount> counts(n + 1, 0);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    bool independent = true;
    for (int v = 0; v < n && independent; ++v)
      if ((mask >> v) & 1) independent = (mask & adj[v]) == 0;
    if (independent) ++counts[std::popcount(mask)];
  }
  return counts;
}

BigCount star_count_direct(const Graph& g, VertexId v, int r) {
  BigCount total = 0;
  for_each_independent_set(g, [&](const std::vector<VertexId>& s) {
    if (static_cast<int>(s.size()) == r && std::binary_search(s.begin(), s.end(), v)) ++total;
  });
  return total;
}

bool is_isomorphic_brute(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  int n = a.vertex_count();
  if (n > 8) throw leafstars::CapExceededError("permutation isomorphism limited to 8 vertices");
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool match = true;
    for (const auto& [u, v] : a.edges())
      if (!b.has_edge(perm[u], perm[v])) {
        match = false;
        break;
      }
    if (match) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Graph permuted(const Graph& g, const std::vector<VertexId>& perm) {
  std::vector<leafstars::Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.vertex_count(), std::move(edges));
}

Graph prufer_decode(int n, const std::vector<int>& seq) {
  std::vector<int> degree(n, 1);
  for (int v : seq) ++degree[v];
  std::vector<leafstars::Edge> edges;
  std::vector<char> used(n, 0);
  for (int v : seq) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (degree[leaf] == 1 && !used[leaf]) {
        edges.emplace_back(leaf, v);
        used[leaf] = 1;
        --degree[v];
        break;
      }
    }
  }
  std::vector<int> rest;
  for (int v = 0; v < n; ++v)
    if (!used[v] && degree[v] == 1) rest.push_back(v);
  edges.emplace_back(rest.at(0), rest.at(1));
  return Graph(n, std::move(edges));
}

long long count_free_trees_prufer(int n) {
  if (n == 2) return 1;
  std::set<std::string> codes;
  std::vector<int> seq(n - 2, 0);
  while (true) {
    codes.insert(leafstars::canonical_code(prufer_decode(n, seq)));
    int i = n - 3;
    while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
  return static_cast<long long>(codes.size());
}

Graph random_tree(std::mt19937& rng, int n) {
  if (n == 2) return Graph(2, {{0, 1}});
  std::uniform_int_distribution<int> vertex(0, n - 1);
  std::vector<int> seq(n - 2);
  for (int& v : seq) v = vertex(rng);
  return prufer_decode(n, seq);
}

Graph random_forest(std::mt19937& rng, int n) {
  if (n < 2) return Graph(n, {});
  Graph tree = random_tree(rng, n);
  std::vector<leafstars::Edge> edges;
  std::bernoulli_distribution keep(0.7);
  for (const auto& e : tree.edges())
    if (keep(rng)) edges.push_back(e);
  return Graph(n, std::move(edges));
}

std::vector<VertexId> random_permutation(std::mt19937& rng, int n) {
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace oracle
