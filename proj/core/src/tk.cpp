#include "leafstars/tk.hpp"

#include <algorithm>
#include <string>

#include "leafstars/errors.hpp"

namespace leafstars {

TkTree construct_tk(int k) {
  if (k < 1) throw PreconditionError("construct_tk requires k >= 1");
  TkLabels labels;
  labels.k = k;
  labels.y.resize(2 * k);
  labels.z.resize(2 * k);
  for (int i = 1; i <= 2 * k; ++i) {
    labels.y[i - 1] = 2 + i;
    labels.z[i - 1] = 2 * k + 2 + i;
  }
  std::vector<Edge> edges{{labels.x0, labels.x1}, {labels.x0, labels.x2}};
  for (int i = 1; i <= k; ++i) edges.emplace_back(labels.x1, labels.y[i - 1]);
  for (int i = k + 1; i <= 2 * k; ++i) edges.emplace_back(labels.x2, labels.y[i - 1]);
  for (int i = 1; i <= 2 * k; ++i) edges.emplace_back(labels.y[i - 1], labels.z[i - 1]);
  return TkTree{Graph(4 * k + 3, std::move(edges)), std::move(labels)};
}

BigCount formula_a(int k, int r) {
  if (k < 1) throw PreconditionError("formula_a requires k >= 1");
  if (r < 0) throw PreconditionError("formula_a requires r >= 0");
  BigCount a = 0;
  for (int i = 1; i <= k - 1; ++i)
    for (int j = 1; j <= k; ++j)
      a += binomial(k - 1, i) * binomial(k, j) * binomial(2 * k - 1 - i - j, r - 2 - i - j);
  a -= binomial(2 * k - 1, r - 2);
  a -= binomial(2 * k - 1, r - 3);
  return a;
}

BigCount formula_a_top(int k) {
  if (k < 1) throw PreconditionError("formula_a_top requires k >= 1");
  BigCount p = (BigCount(1) << (k - 1)) - 1;
  BigCount q = (BigCount(1) << k) - 1;
  return p * q - 2 * k;
}

namespace {

BigCount counts_on_subforest(const Graph& g, std::vector<VertexId> keep, int size) {
  if (size < 0) return 0;
  auto sub = induced_subgraph(g, std::move(keep));
  return independence_counts(sub.graph).at(size);
}

}  // namespace

Decomposition decompose_star(int k, int r) {
  if (k < 1) throw PreconditionError("decompose_star requires k >= 1");
  if (r < 1 || r > 2 * k + 1)
    throw PreconditionError("decompose_star requires 1 <= r <= 2k+1, got r = " +
                            std::to_string(r));
  auto [graph, labels] = construct_tk(k);

  // Primed vertex sets from the proof: Y' = Y \ {y1}, Z' = Z \ {z1},
  // Y1 = {y_2..y_k}, Y2 = {y_{k+1}..y_{2k}}.
  std::vector<VertexId> yp(labels.y.begin() + 1, labels.y.end());
  std::vector<VertexId> zp(labels.z.begin() + 1, labels.z.end());
  std::vector<VertexId> y1(labels.y.begin() + 1, labels.y.begin() + k);
  std::vector<VertexId> y2(labels.y.begin() + k, labels.y.end());

  auto with_zp = [&zp](std::vector<VertexId> base) {
    base.insert(base.end(), zp.begin(), zp.end());
    return base;
  };

  Decomposition d;
  d.r = r;
  // Members of each family are forced on {x0, x1, x2, y1, z1}; what remains
  // is an independent set in one of three induced subforests.
  d.e = counts_on_subforest(graph, with_zp(yp), r - 2);
  d.a1 = counts_on_subforest(graph, with_zp(yp), r - 2);
  d.a2 = counts_on_subforest(graph, with_zp(yp), r - 1);
  d.b1 = counts_on_subforest(graph, with_zp(y2), r - 2);
  d.b2 = counts_on_subforest(graph, with_zp(y1), r - 2);
  d.b3 = binomial(2 * k - 1, r - 3);  // Z' is edgeless
  d.b4 = counts_on_subforest(graph, with_zp(yp), r - 1);
  d.star_x0 = star_count(graph, labels.x0, r);
  d.star_z1 = star_count(graph, labels.z[0], r);
  return d;
}

TheoremReport verify_theorem(int k, std::optional<std::pair<int, int>> r_range) {
  auto [graph, labels] = construct_tk(k);
  TheoremReport report;
  report.k = k;
  report.r_range = r_range.value_or(
      k >= 3 ? std::pair{5, 2 * k + 1} : std::pair{1, 0});

  std::vector<VertexId> expected_leaves(labels.z);
  std::sort(expected_leaves.begin(), expected_leaves.end());
  report.clause_a_pass = is_tree(graph) && leaves(graph) == expected_leaves;

  report.b_value = max_nonempty_star_size(graph, labels.x0);
  report.clause_b_pass = report.b_value == 2 * k + 1;

  report.clause_c_pass = true;
  for (int r = report.r_range.first; r <= report.r_range.second; ++r) {
    TheoremReport::LeafGap gap;
    gap.r = r;
    gap.star_x0 = star_count(graph, labels.x0, r);
    gap.max_leaf_count = 0;
    for (VertexId z : leaves(graph))
      gap.max_leaf_count = std::max(gap.max_leaf_count, star_count(graph, z, r));
    gap.pass = gap.max_leaf_count < gap.star_x0;
    report.clause_c_pass = report.clause_c_pass && gap.pass;
    report.clause_c.push_back(std::move(gap));
  }
  return report;
}

}  // namespace leafstars
