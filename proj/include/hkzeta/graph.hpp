#pragma once

// Graphs in Serre's formalism: every undirected edge is a pair of directed
// edges {y, inverse(y)} with origin(y) = terminus(inverse(y)) and
// inverse(y) != y. Multi-edges and loops are allowed; a loop at x contributes
// two directed edges x -> x and hence 2 to the degree of x.

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hkzeta {

using Vertex = int;
using EdgeId = int;

/// Malformed or unsupported graph input. Messages from parsed documents are
/// prefixed with "source:line".
class GraphError : public std::runtime_error {
 public:
  explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

class Graph {
 public:
  Graph() = default;

  /// Undirected edge list; edge i becomes directed edges 2i (u -> v) and
  /// 2i+1 (v -> u). Throws GraphError on out-of-range vertices or a
  /// disconnected result.
  static Graph from_edges(int num_vertices,
                          std::span<const std::pair<int, int>> edges,
                          std::string name = {});

  /// Raw Serre data. Validates the involution axioms and connectivity.
  static Graph from_serre(int num_vertices, std::vector<Vertex> origin,
                          std::vector<Vertex> terminus,
                          std::vector<EdgeId> inverse, std::string name = {});

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(origin_.size()); }
  Vertex origin(EdgeId e) const { return origin_[e]; }
  Vertex terminus(EdgeId e) const { return terminus_[e]; }
  EdgeId inverse(EdgeId e) const { return inverse_[e]; }
  std::span<const EdgeId> out_edges(Vertex v) const {
    return {out_.data() + out_offset_[v], out_.data() + out_offset_[v + 1]};
  }
  int degree(Vertex v) const { return out_offset_[v + 1] - out_offset_[v]; }

  /// q such that every vertex has degree q + 1 >= 2, if the graph is regular.
  std::optional<int> regular_q() const;
  /// regular_q() or throw GraphError naming the offending vertex.
  int require_regular() const;

  /// Number of directed edges from u to v (loops count twice at u).
  int multiplicity(Vertex u, Vertex v) const;

  const std::string& name() const { return name_; }

 private:
  void build_incidence();
  void validate() const;

  int num_vertices_ = 0;
  std::vector<Vertex> origin_, terminus_;
  std::vector<EdgeId> inverse_;
  std::vector<int> out_offset_;
  std::vector<EdgeId> out_;
  std::string name_;
};

/// Breadth-first distances from `source`; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// Parses either the line format ("u v" per line, '#' comments) or the JSON
/// form {"vertices": n, "edges": [[u, v], ...]}. `source` names the document
/// in diagnostics.
Graph parse_graph(const std::string& text, const std::string& source);

/// Reads and parses a graph file.
Graph load_graph(const std::string& path);

// Builtin constructors.
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph petersen_graph();
Graph hypercube_graph(int dim);
Graph complete_bipartite_graph(int a, int b);
/// Ball of radius `radius` in the (q+1)-regular tree, centred at vertex 0.
/// Not regular (leaves have degree 1) but its geodesic counts from the centre
/// agree with the infinite tree up to length `radius`.
Graph tree_ball(int q, int radius);

/// Resolves "k4", "c5", "petersen", "cube", "k33", "k<n>", "c<n>". Throws
/// GraphError for unknown names.
Graph builtin_graph(const std::string& name);
bool is_builtin_graph_name(const std::string& name);

}  // namespace hkzeta
