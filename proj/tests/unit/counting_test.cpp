#include <doctest.h>

#include <algorithm>
#include <random>

#include "leafstars/counting.hpp"
#include "leafstars/errors.hpp"
#include "leafstars/tk.hpp"
#include "oracle.hpp"

using namespace leafstars;

namespace {

Graph path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

std::vector<BigCount> big(std::initializer_list<long> values) {
  return std::vector<BigCount>(values.begin(), values.end());
}

}  // namespace

TEST_CASE("independence_counts on small graphs") {
  CHECK(independence_counts(path(3)).counts == big({1, 3, 1, 0}));
  CHECK(independence_counts(Graph(4, {})).counts == big({1, 4, 6, 4, 1}));
  CHECK(independence_counts(Graph(0, {})).counts == big({1}));
  // P7 = T_1 as a plain path
  CHECK(independence_counts(path(7)).counts == big({1, 7, 15, 10, 1, 0, 0, 0}));
}

TEST_CASE("independence_counts of T_3 matches whole-subset enumeration") {
  Graph t3 = construct_tk(3).graph;
  // frozen from the 2^15 mask oracle: [1,15,91,292,541,584,343,86,1]
  std::vector<BigCount> expected = big({1, 15, 91, 292, 541, 584, 343, 86, 1});
  expected.resize(16, 0);
  CHECK(independence_counts(t3).counts == expected);
  CHECK(oracle::counts_by_size_masks(t3) == expected);
}

TEST_CASE("non-forest inputs take the capped brute-force route") {
  Graph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(independence_counts(triangle).counts == big({1, 3, 0, 0}));
  CHECK(brute_force_independence_counts(triangle).counts == big({1, 3, 0, 0}));
  Graph big_cycle = [] {
    std::vector<Edge> edges;
    for (int i = 0; i < 30; ++i) edges.emplace_back(i, (i + 1) % 30);
    return Graph(30, std::move(edges));
  }();
  CHECK_THROWS_AS(independence_counts(big_cycle), CapExceededError);
  CHECK_THROWS_AS(brute_force_independence_counts(big_cycle), CapExceededError);
}

TEST_CASE("DP equals brute force on random forests") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = oracle::random_forest(rng, 2 + trial % 13);
    CHECK(independence_counts(g) == brute_force_independence_counts(g));
  }
}

TEST_CASE("SizeCountVector invariants on random trees") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + trial % 11;
    Graph g = oracle::random_tree(rng, n);
    SizeCountVector v = independence_counts(g);
    REQUIRE(static_cast<int>(v.counts.size()) == n + 1);
    CHECK(v.counts[0] == 1);
    CHECK(v.counts[1] == n);
    for (int s = v.max_size() + 1; s <= n; ++s) CHECK(v.counts[s] == 0);
  }
}

TEST_CASE("star_count basics") {
  Graph p3 = path(3);
  CHECK(star_count(p3, 0, 2) == 1);
  CHECK(star_count(p3, 1, 2) == 0);
  CHECK(star_count(p3, 0, 0) == 0);
  CHECK(star_count(p3, 0, 1) == 1);
  CHECK(star_count(p3, 0, 3) == 0);
  CHECK_THROWS_AS(star_count(p3, 5, 1), PreconditionError);
}

TEST_CASE("star_count matches direct enumeration of r-sets containing v") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + trial % 9;
    Graph g = oracle::random_forest(rng, n);
    for (VertexId v = 0; v < n; ++v)
      for (int r = 1; r <= n; ++r)
        CHECK(star_count(g, v, r) == oracle::star_count_direct(g, v, r));
  }
}

TEST_CASE("star_table on small graphs") {
  StarTable t = star_table(path(3), 2);
  CHECK(t.counts == big({1, 0, 1}));
  StarTable edgeless = star_table(Graph(3, {}), 2);
  CHECK(edgeless.counts == big({2, 2, 2}));
  // T_1 = P7 rooted as z1-y1-x1-x0-x2-y2-z2; leaf stars at r=3 count
  // 2-sets of the remaining P5
  StarTable p7 = star_table(path(7), 3);
  CHECK(p7.counts == big({6, 3, 4, 4, 4, 3, 6}));
}

TEST_CASE("handshake identity over all trees up to n=10") {
  // sum over vertices of |I^(r)(v)| counts each r-set r times
  std::mt19937 rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + trial % 9;
    Graph g = oracle::random_tree(rng, n);
    SizeCountVector counts = independence_counts(g);
    for (int r = 0; r <= n; ++r) {
      StarTable t = star_table(g, r);
      BigCount total = 0;
      for (const auto& c : t.counts) total += c;
      CHECK(total == r * counts.at(r));
    }
  }
}

TEST_CASE("max_nonempty_star_size") {
  CHECK(max_nonempty_star_size(path(3), 1) == 1);
  CHECK(max_nonempty_star_size(Graph(5, {}), 2) == 5);
  for (int k = 1; k <= 6; ++k) {
    TkTree tk = construct_tk(k);
    CHECK(max_nonempty_star_size(tk.graph, tk.labels.x0) == 2 * k + 1);
  }
}

TEST_CASE("stars stay nonempty up to the maximum size") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + trial % 9;
    Graph g = oracle::random_tree(rng, n);
    for (VertexId v = 0; v < n; ++v) {
      int top = max_nonempty_star_size(g, v);
      for (int s = 1; s <= top; ++s) CHECK(star_count(g, v, s) > 0);
      CHECK(star_count(g, v, top + 1) == 0);
    }
  }
}

TEST_CASE("mu on small graphs") {
  CHECK(mu(path(3)) == 1);
  CHECK(mu(Graph(4, {})) == 4);
  CHECK(mu(Graph(0, {})) == 0);
  CHECK(mu(Graph(3, {{0, 1}, {1, 2}, {0, 2}})) == 1);
  for (int k = 1; k <= 5; ++k) CHECK(mu(construct_tk(k).graph) == 2 * k + 1);
}

TEST_CASE("mu respects caps") {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < 41; ++i) edges.emplace_back(i, i + 1);
  CHECK_THROWS_AS(mu(Graph(41, std::move(edges))), CapExceededError);
}

TEST_CASE("mu lower bound n/(1+maxdeg)") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + trial % 11;
    Graph g = oracle::random_forest(rng, n);
    int max_degree = 0;
    for (VertexId v = 0; v < n; ++v) max_degree = std::max(max_degree, g.degree(v));
    CHECK(mu(g) * (1 + max_degree) >= n);
  }
}

TEST_CASE("mu matches enumeration of maximal independent sets") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + trial % 9;
    Graph g = oracle::random_forest(rng, n);
    int smallest = n + 1;
    oracle::for_each_independent_set(g, [&](const std::vector<VertexId>& s) {
      // maximal iff every vertex is in s or has a neighbor in s
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (std::binary_search(s.begin(), s.end(), v)) continue;
        bool dominated = false;
        for (VertexId w : g.neighbors(v))
          if (std::binary_search(s.begin(), s.end(), w)) {
            dominated = true;
            break;
          }
        if (!dominated) return;
      }
      smallest = std::min(smallest, static_cast<int>(s.size()));
    });
    CHECK(mu(g) == smallest);
  }
}

TEST_CASE("conjecture_verdict basics") {
  Graph p7 = path(7);
  SUBCASE("r=1 always holds") {
    ConjectureVerdict v = conjecture_verdict(p7, 1);
    CHECK(v.holds);
    CHECK(v.max_count == 1);
    CHECK(v.argmax_vertices.size() == 7);
    CHECK(v.witness_leaf == 0);
  }
  SUBCASE("P7 at r=3 holds with leaf maximum") {
    ConjectureVerdict v = conjecture_verdict(p7, 3);
    CHECK(v.holds);
    CHECK(v.max_count == 6);
    CHECK(v.argmax_vertices == std::vector<VertexId>{0, 6});
    CHECK(v.witness_leaf == 0);
  }
  SUBCASE("T_3 at r=5 fails") {
    TkTree t3 = construct_tk(3);
    ConjectureVerdict v = conjecture_verdict(t3.graph, 5);
    CHECK_FALSE(v.holds);
    CHECK(v.max_count == 240);
    CHECK(v.argmax_vertices == std::vector<VertexId>{t3.labels.x0});
    CHECK_FALSE(v.witness_leaf.has_value());
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(conjecture_verdict(Graph(4, {{0, 1}, {2, 3}}), 2), PreconditionError);
    CHECK_THROWS_AS(conjecture_verdict(p7, 0), PreconditionError);
  }
}

TEST_CASE("binomial convention") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 5) == 1);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(60, 30) == BigCount("118264581564861424"));
}
