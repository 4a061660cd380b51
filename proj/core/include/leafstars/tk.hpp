#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "leafstars/counting.hpp"
#include "leafstars/graph.hpp"

namespace leafstars {

/// Role map for the constructed tree T_k: x0=0, x1=1, x2=2, y_i=2+i,
/// z_i=2k+2+i for i in 1..2k. y[i-1] and z[i-1] hold y_i and z_i.
struct TkLabels {
  int k = 0;
  VertexId x0 = 0, x1 = 1, x2 = 2;
  std::vector<VertexId> y;
  std::vector<VertexId> z;
};

struct TkTree {
  Graph graph;
  TkLabels labels;
};

// T_k: x0 adjacent to x1 and x2; x1 carries the pendant paths y_1..y_k,
// x2 carries y_{k+1}..y_{2k}; each y_i ends in the leaf z_i.
// 4k+3 vertices, 4k+2 edges. Requires k >= 1.
TkTree construct_tk(int k);

// Signed closed-form gap between the star at x0 and the star at a leaf:
//   sum_{i=1}^{k-1} sum_{j=1}^{k} C(k-1,i) C(k,j) C(2k-1-i-j, r-2-i-j)
//   - C(2k-1, r-2) - C(2k-1, r-3),
// with out-of-range binomials vanishing. May be negative (k <= 2 or r <= 4).
BigCount formula_a(int k, int r);

// Specialization at r = 2k+1: (2^(k-1) - 1)(2^k - 1) - 2k.
BigCount formula_a_top(int k);

/// Cardinalities of the star decomposition families for (T_k, r):
///   star_x0 = e + a1 + a2        star_z1 = e + b1 + b2 + b3 + b4
///   a2 = b4                      a1 - (b1 + b2 + b3) = formula_a(k, r)
/// star_x0 and star_z1 are computed independently via star_count; the family
/// counts come from independence counts on induced subforests.
struct Decomposition {
  int r = 0;
  BigCount e, a1, a2, b1, b2, b3, b4;
  BigCount star_x0, star_z1;
};

// Requires k >= 1 and 1 <= r <= 2k+1.
Decomposition decompose_star(int k, int r);

/// Structured pass/fail record for the three clauses of the main theorem.
struct TheoremReport {
  struct LeafGap {
    int r = 0;
    BigCount star_x0;
    BigCount max_leaf_count;  // max over all leaves
    bool pass = false;        // every leaf strictly below x0
  };

  int k = 0;
  std::pair<int, int> r_range{1, 0};  // empty when first > second

  bool clause_a_pass = false;  // tree with leaf set exactly {z_1..z_2k}
  bool clause_b_pass = false;  // max nonempty star size at x0 is 2k+1
  int b_value = 0;             // observed value for clause (b)
  std::vector<LeafGap> clause_c;
  bool clause_c_pass = false;  // vacuously true on an empty range

  bool all_pass() const { return clause_a_pass && clause_b_pass && clause_c_pass; }
};

// Checks clauses (a), (b), (c) for T_k. Default r range is [5, 2k+1] for
// k >= 3 and empty otherwise (clause (c) only claims k >= 3). Failures are
// report entries, not errors.
TheoremReport verify_theorem(int k,
                             std::optional<std::pair<int, int>> r_range = std::nullopt);

}  // namespace leafstars
