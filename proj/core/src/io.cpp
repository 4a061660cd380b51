#include "leafstars/io.hpp"

#include <algorithm>
#include <sstream>

#include "leafstars/errors.hpp"

namespace leafstars {

namespace {

std::string dec(const BigCount& c) { return c.str(); }

Json range_json(std::pair<int, int> r) {
  return Json{{"lo", r.first}, {"hi", r.second}};
}

}  // namespace

Json size_counts_json(const SizeCountVector& v) {
  Json counts = Json::array();
  for (const auto& c : v.counts) counts.push_back(dec(c));
  return Json{{"counts", std::move(counts)}};
}

SizeCountVector size_counts_from_json(const Json& j) {
  SizeCountVector v;
  for (const auto& item : j.at("counts"))
    v.counts.emplace_back(item.get<std::string>());
  return v;
}

Json star_table_json(const Graph& g, const StarTable& t) {
  Json rows = Json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    rows.push_back(Json{{"vertex", v}, {"count", dec(t.counts[v])}, {"leaf", g.degree(v) == 1}});
  return Json{{"r", t.r}, {"vertices", std::move(rows)}};
}

StarTable star_table_from_json(const Json& j) {
  StarTable t;
  t.r = j.at("r").get<int>();
  for (const auto& row : j.at("vertices"))
    t.counts.emplace_back(row.at("count").get<std::string>());
  return t;
}

std::string star_table_csv(const Graph& g, const StarTable& t) {
  std::ostringstream out;
  out << "vertex,count,leaf\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    out << v << "," << dec(t.counts[v]) << "," << (g.degree(v) == 1 ? "true" : "false") << "\n";
  return out.str();
}

std::string star_table_human(const Graph& g, const StarTable& t) {
  std::vector<VertexId> order(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return t.counts[a] > t.counts[b];
  });
  std::size_t width = 0;
  for (const auto& c : t.counts) width = std::max(width, dec(c).size());
  std::ostringstream out;
  out << "star sizes for r = " << t.r << " (descending)\n";
  for (VertexId v : order) {
    std::string c = dec(t.counts[v]);
    out << "  " << std::string(width - c.size(), ' ') << c << "  v" << v
        << (g.degree(v) == 1 ? "  (leaf)" : "") << "\n";
  }
  return out.str();
}

Json verdict_json(const ConjectureVerdict& v) {
  Json j{{"r", v.r},
         {"holds", v.holds},
         {"max_count", dec(v.max_count)},
         {"argmax_vertices", v.argmax_vertices}};
  if (v.witness_leaf)
    j["witness_leaf"] = *v.witness_leaf;
  else
    j["witness_leaf"] = nullptr;
  return j;
}

Json labels_json(const TkLabels& labels) {
  return Json{{"k", labels.k}, {"x0", labels.x0}, {"x1", labels.x1},
              {"x2", labels.x2}, {"y", labels.y}, {"z", labels.z}};
}

Json decomposition_json(int k, const Decomposition& d) {
  return Json{{"k", k},
              {"r", d.r},
              {"e", dec(d.e)},
              {"a1", dec(d.a1)},
              {"a2", dec(d.a2)},
              {"b1", dec(d.b1)},
              {"b2", dec(d.b2)},
              {"b3", dec(d.b3)},
              {"b4", dec(d.b4)},
              {"star_x0", dec(d.star_x0)},
              {"star_z1", dec(d.star_z1)}};
}

Json theorem_report_json(const TheoremReport& rep) {
  Json clause_c = Json::array();
  for (const auto& gap : rep.clause_c)
    clause_c.push_back(Json{{"r", gap.r},
                            {"star_x0", dec(gap.star_x0)},
                            {"max_leaf_count", dec(gap.max_leaf_count)},
                            {"pass", gap.pass}});
  return Json{{"k", rep.k},
              {"r_range", range_json(rep.r_range)},
              {"clause_a_pass", rep.clause_a_pass},
              {"clause_b_pass", rep.clause_b_pass},
              {"b_value", rep.b_value},
              {"clause_c", std::move(clause_c)},
              {"clause_c_pass", rep.clause_c_pass},
              {"all_pass", rep.all_pass()}};
}

Json search_report_json(const SearchReport& rep) {
  Json examined = Json::array();
  for (const auto& [n, count] : rep.trees_examined)
    examined.push_back(Json{{"n", n}, {"trees", count}});
  Json counterexamples = Json::array();
  for (const auto& cx : rep.counterexamples)
    counterexamples.push_back(Json{{"n", cx.n},
                                   {"tree_index", cx.tree_index},
                                   {"r", cx.r},
                                   {"edge_list", cx.edge_list},
                                   {"max_count", dec(cx.max_count)},
                                   {"best_leaf_count", dec(cx.best_leaf_count)},
                                   {"argmax_vertices", cx.argmax_vertices}});
  return Json{{"n_range", range_json(rep.n_range)},
              {"r_range", range_json(rep.r_range)},
              {"trees_examined", std::move(examined)},
              {"counterexamples", std::move(counterexamples)}};
}

std::string search_report_csv(const SearchReport& rep) {
  std::ostringstream out;
  out << "n,tree_index,r,max_count,best_leaf_count,edge_list\n";
  for (const auto& cx : rep.counterexamples) {
    std::string edges = cx.edge_list;
    std::replace(edges.begin(), edges.end(), '\n', ';');
    out << cx.n << "," << cx.tree_index << "," << cx.r << "," << dec(cx.max_count) << ","
        << dec(cx.best_leaf_count) << "," << edges << "\n";
  }
  return out.str();
}

}  // namespace leafstars
