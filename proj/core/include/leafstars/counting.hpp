#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <vector>

#include "leafstars/graph.hpp"

namespace leafstars {

// All cardinalities are exact. Counts grow combinatorially, so nothing in
// the counting core uses a fixed-width integer.
using BigCount = boost::multiprecision::cpp_int;

// C(n, t) with the vanishing convention: 0 whenever t < 0 or t > n.
BigCount binomial(long long n, long long t);

inline constexpr int kBruteForceCap = 25;  // vertices, brute-force enumeration
inline constexpr int kMuForestCap = 40;    // vertices, exact mu on forests
inline constexpr int kMuGeneralCap = 25;   // vertices, exact mu in general

/// Counts of independent sets by size s = 0..n (independence polynomial
/// coefficients). counts[0] = 1, counts[1] = n.
struct SizeCountVector {
  std::vector<BigCount> counts;

  // counts[s], or 0 for s outside the stored range.
  const BigCount& at(int s) const;

  // Largest s with counts[s] > 0, i.e. the independence number.
  int max_size() const;

  bool operator==(const SizeCountVector&) const = default;
};

/// Per-vertex star sizes |I_G^(r)(v)| for a fixed r, indexed by vertex id.
struct StarTable {
  int r = 0;
  std::vector<BigCount> counts;
};

/// Outcome of the leaf-star check for one (tree, r): does some leaf attain
/// the maximum star size?
struct ConjectureVerdict {
  int r = 0;
  bool holds = false;
  BigCount max_count;
  std::vector<VertexId> argmax_vertices;    // ascending
  std::optional<VertexId> witness_leaf;     // smallest argmax leaf, iff holds
};

// Exact counts of independent sets by size. Forests are handled by a rooted
// DP (one include/exclude polynomial pair per node, children combined by
// convolution). Anything else is routed to the brute-force path, which is
// capped.
SizeCountVector independence_counts(const Graph& g);

// Recursive include/exclude enumeration; refuses graphs above `cap` vertices.
SizeCountVector brute_force_independence_counts(const Graph& g, int cap = kBruteForceCap);

// |I_G^(r)(v)|, computed as the number of independent (r-1)-sets of
// G - N[v]. r <= 0 gives 0.
BigCount star_count(const Graph& g, VertexId v, int r);

StarTable star_table(const Graph& g, int r);

// Largest s with a nonempty star at v: 1 + independence number of G - N[v].
int max_nonempty_star_size(const Graph& g, VertexId v);

// Size of a smallest maximal independent set (independent domination
// number), by branch and bound over closed neighborhoods of undominated
// vertices. Capped: kMuForestCap vertices for forests, kMuGeneralCap else.
int mu(const Graph& g);

// Requires is_tree(g) and r >= 1.
ConjectureVerdict conjecture_verdict(const Graph& g, int r);

}  // namespace leafstars
