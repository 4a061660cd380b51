#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace leafstars {

using VertexId = int;
using Edge = std::pair<VertexId, VertexId>;  // stored normalized: first < second

/// Immutable undirected simple graph on dense vertex ids 0..n-1.
class Graph {
public:
  Graph() = default;

  // Normalizes and sorts the edge list; rejects self-loops, duplicates and
  // endpoints outside [0, n).
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[v]; }
  int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(VertexId u, VertexId v) const;
  bool valid_vertex(VertexId v) const { return 0 <= v && v < n_; }

private:
  int n_ = 0;
  std::vector<Edge> edges_;                 // lexicographically sorted
  std::vector<std::vector<VertexId>> adj_;  // sorted neighbor lists
};

// Edge-list text format: one "u v" pair per line, `#` starts a comment,
// an optional header line "n <count>" raises the vertex count beyond
// 1 + max id (for isolated vertices). This is the on-disk interchange
// format used everywhere in the project.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

void write_edge_list(const Graph& g, std::ostream& out);
std::string to_edge_list(const Graph& g);

bool is_connected(const Graph& g);
bool is_forest(const Graph& g);

// Tree = at least two vertices, connected, |E| = n - 1.
bool is_tree(const Graph& g);

// Degree-1 vertices, ascending.
std::vector<VertexId> leaves(const Graph& g);

// Induced subgraph together with the id remapping, for callers that must
// translate results back to the original vertex ids.
struct InducedSubgraph {
  Graph graph;
  std::vector<VertexId> old_to_new;  // -1 for vertices that were dropped
  std::vector<VertexId> new_to_old;
};

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<VertexId>& keep);

// Induced subgraph on V \ ({v} + neighbors of v).
InducedSubgraph delete_closed_neighborhood(const Graph& g, VertexId v);

// AHU canonical form rooted at the tree center; per-component codes sorted
// and concatenated. Equal codes iff isomorphic. Forests only.
std::string canonical_code(const Graph& g);

}  // namespace leafstars
