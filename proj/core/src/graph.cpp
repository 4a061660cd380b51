#include "leafstars/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "leafstars/errors.hpp"

namespace leafstars {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 0) throw StructuralError("negative vertex count");
  for (auto& [u, v] : edges_) {
    if (u == v) throw StructuralError("self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw StructuralError("edge endpoint out of range: " + std::to_string(u) + " " +
                            std::to_string(v));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end())
    throw StructuralError("duplicate edge " + std::to_string(dup->first) + " " +
                          std::to_string(dup->second));
  adj_.resize(n_);
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (!valid_vertex(u) || !valid_vertex(v)) return false;
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

namespace {

long parse_nonnegative(const std::string& token, int line) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0)
    throw ParseError(line, "expected a nonnegative integer, got '" + token + "'");
  return value;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::set<Edge> seen;
  long header_n = -1;
  long max_id = -1;
  int line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string t; ls >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (tokens[0] == "n") {
      if (tokens.size() != 2) throw ParseError(line_no, "header must be 'n <count>'");
      if (header_n >= 0) throw ParseError(line_no, "duplicate 'n <count>' header");
      header_n = parse_nonnegative(tokens[1], line_no);
      continue;
    }
    if (tokens.size() != 2)
      throw ParseError(line_no, "expected two vertex ids, got " +
                                    std::to_string(tokens.size()) + " tokens");
    long u = parse_nonnegative(tokens[0], line_no);
    long v = parse_nonnegative(tokens[1], line_no);
    if (u == v) throw StructuralError("line " + std::to_string(line_no) +
                                      ": self-loop at vertex " + std::to_string(u));
    Edge e{static_cast<VertexId>(std::min(u, v)), static_cast<VertexId>(std::max(u, v))};
    if (!seen.insert(e).second)
      throw StructuralError("line " + std::to_string(line_no) + ": duplicate edge " +
                            std::to_string(e.first) + " " + std::to_string(e.second));
    max_id = std::max({max_id, u, v});
    edges.push_back(e);
  }
  if (header_n < 0 && max_id < 0) throw ParseError(0, "input contains no edges and no header");
  int n = static_cast<int>(std::max(header_n, max_id + 1));
  return Graph(n, std::move(edges));
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << "n " << g.vertex_count() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(g, out);
  return out.str();
}

bool is_connected(const Graph& g) {
  int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<char> visited(n, 0);
  std::vector<VertexId> stack{0};
  visited[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : g.neighbors(v)) {
      if (!visited[w]) {
        visited[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

bool is_forest(const Graph& g) {
  // union-find; an edge joining an already-joined pair closes a cycle
  std::vector<VertexId> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexId v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (const auto& [u, v] : g.edges()) {
    VertexId ru = find(u), rv = find(v);
    if (ru == rv) return false;
    parent[ru] = rv;
  }
  return true;
}

bool is_tree(const Graph& g) {
  return g.vertex_count() >= 2 && g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

std::vector<VertexId> leaves(const Graph& g) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 1) out.push_back(v);
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<VertexId>& keep) {
  InducedSubgraph result;
  result.old_to_new.assign(g.vertex_count(), -1);
  result.new_to_old = keep;
  std::sort(result.new_to_old.begin(), result.new_to_old.end());
  result.new_to_old.erase(
      std::unique(result.new_to_old.begin(), result.new_to_old.end()),
      result.new_to_old.end());
  for (VertexId v : result.new_to_old)
    if (!g.valid_vertex(v)) throw PreconditionError("induced_subgraph: invalid vertex id");
  for (std::size_t i = 0; i < result.new_to_old.size(); ++i)
    result.old_to_new[result.new_to_old[i]] = static_cast<VertexId>(i);
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    VertexId nu = result.old_to_new[u], nv = result.old_to_new[v];
    if (nu >= 0 && nv >= 0) edges.emplace_back(nu, nv);
  }
  result.graph = Graph(static_cast<int>(result.new_to_old.size()), std::move(edges));
  return result;
}

InducedSubgraph delete_closed_neighborhood(const Graph& g, VertexId v) {
  if (!g.valid_vertex(v)) throw PreconditionError("delete_closed_neighborhood: invalid vertex");
  std::vector<char> drop(g.vertex_count(), 0);
  drop[v] = 1;
  for (VertexId w : g.neighbors(v)) drop[w] = 1;
  std::vector<VertexId> keep;
  for (VertexId u = 0; u < g.vertex_count(); ++u)
    if (!drop[u]) keep.push_back(u);
  return induced_subgraph(g, keep);
}

namespace {

// AHU code of the tree containing `root`, rooted there: "(" + sorted child
// codes + ")".
std::string rooted_code(const Graph& g, VertexId root, VertexId parent) {
  std::vector<std::string> child_codes;
  for (VertexId w : g.neighbors(root))
    if (w != parent) child_codes.push_back(rooted_code(g, w, root));
  std::sort(child_codes.begin(), child_codes.end());
  std::string code = "(";
  for (const auto& c : child_codes) code += c;
  code += ")";
  return code;
}

// 1- or 2-vertex center of one tree component, by iterative leaf stripping.
std::vector<VertexId> component_centers(const Graph& g, const std::vector<VertexId>& comp) {
  if (comp.size() <= 2) return comp;
  std::vector<int> deg(g.vertex_count(), -1);
  for (VertexId v : comp) deg[v] = g.degree(v);
  std::vector<VertexId> frontier;
  for (VertexId v : comp)
    if (deg[v] <= 1) frontier.push_back(v);
  std::size_t removed = frontier.size();
  std::vector<VertexId> current = frontier;
  while (removed < comp.size()) {
    std::vector<VertexId> next;
    for (VertexId v : current) {
      deg[v] = 0;
      for (VertexId w : g.neighbors(v))
        if (deg[w] > 1 && --deg[w] == 1) next.push_back(w);
    }
    if (next.empty()) break;
    removed += next.size();
    current = std::move(next);
  }
  return current;
}

}  // namespace

std::string canonical_code(const Graph& g) {
  if (!is_forest(g)) throw UnsupportedInputError("canonical_code supports forests only");
  int n = g.vertex_count();
  std::vector<char> visited(n, 0);
  std::vector<std::string> component_codes;
  for (VertexId start = 0; start < n; ++start) {
    if (visited[start]) continue;
    std::vector<VertexId> comp;
    std::vector<VertexId> stack{start};
    visited[start] = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (VertexId w : g.neighbors(v))
        if (!visited[w]) {
          visited[w] = 1;
          stack.push_back(w);
        }
    }
    auto centers = component_centers(g, comp);
    std::string best;
    for (VertexId c : centers) {
      std::string code = rooted_code(g, c, -1);
      if (best.empty() || code < best) best = std::move(code);
    }
    component_codes.push_back(std::move(best));
  }
  std::sort(component_codes.begin(), component_codes.end());
  std::string out;
  for (const auto& c : component_codes) out += c;
  return out;
}

}  // namespace leafstars
