#include "hkzeta/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <queue>
#include <regex>
#include <sstream>

#include "json.hpp"

namespace hkzeta {

Graph Graph::from_edges(int num_vertices,
                        std::span<const std::pair<int, int>> edges,
                        std::string name) {
  if (num_vertices <= 0) throw GraphError("graph must have at least one vertex");
  std::vector<Vertex> origin, terminus;
  std::vector<EdgeId> inverse;
  origin.reserve(2 * edges.size());
  terminus.reserve(2 * edges.size());
  inverse.reserve(2 * edges.size());
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices) {
      throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") references a vertex outside [0, " +
                       std::to_string(num_vertices) + ")");
    }
    const EdgeId e = static_cast<EdgeId>(origin.size());
    origin.push_back(u);
    terminus.push_back(v);
    inverse.push_back(e + 1);
    origin.push_back(v);
    terminus.push_back(u);
    inverse.push_back(e);
  }
  return from_serre(num_vertices, std::move(origin), std::move(terminus),
                    std::move(inverse), std::move(name));
}

Graph Graph::from_serre(int num_vertices, std::vector<Vertex> origin,
                        std::vector<Vertex> terminus,
                        std::vector<EdgeId> inverse, std::string name) {
  Graph g;
  g.num_vertices_ = num_vertices;
  g.origin_ = std::move(origin);
  g.terminus_ = std::move(terminus);
  g.inverse_ = std::move(inverse);
  g.name_ = std::move(name);
  g.validate();
  g.build_incidence();
  const auto dist = bfs_distances(g, 0);
  const auto it = std::find(dist.begin(), dist.end(), -1);
  if (it != dist.end()) {
    throw GraphError("graph is disconnected: vertex " +
                     std::to_string(it - dist.begin()) +
                     " is unreachable from vertex 0");
  }
  return g;
}

void Graph::validate() const {
  if (num_vertices_ <= 0) throw GraphError("graph must have at least one vertex");
  const auto m = origin_.size();
  if (terminus_.size() != m || inverse_.size() != m) {
    throw GraphError("origin/terminus/inverse arrays differ in length");
  }
  for (std::size_t e = 0; e < m; ++e) {
    const EdgeId inv = inverse_[e];
    if (origin_[e] < 0 || origin_[e] >= num_vertices_ || terminus_[e] < 0 ||
        terminus_[e] >= num_vertices_) {
      throw GraphError("edge " + std::to_string(e) + " has an endpoint out of range");
    }
    if (inv < 0 || static_cast<std::size_t>(inv) >= m) {
      throw GraphError("edge " + std::to_string(e) + " has an invalid inverse");
    }
    if (static_cast<std::size_t>(inv) == e) {
      throw GraphError("edge " + std::to_string(e) +
                       " is its own inverse (half-loops are not allowed)");
    }
    if (static_cast<std::size_t>(inverse_[inv]) != e) {
      throw GraphError("inverse is not an involution at edge " + std::to_string(e));
    }
    if (origin_[e] != terminus_[inv]) {
      throw GraphError("origin(y) != terminus(inverse(y)) at edge " +
                       std::to_string(e));
    }
  }
}

void Graph::build_incidence() {
  out_offset_.assign(num_vertices_ + 1, 0);
  for (Vertex o : origin_) ++out_offset_[o + 1];
  for (int v = 0; v < num_vertices_; ++v) out_offset_[v + 1] += out_offset_[v];
  out_.resize(origin_.size());
  std::vector<int> fill(out_offset_.begin(), out_offset_.end() - 1);
  for (EdgeId e = 0; e < num_edges(); ++e) out_[fill[origin_[e]]++] = e;
}

std::optional<int> Graph::regular_q() const {
  const int d = degree(0);
  for (Vertex v = 1; v < num_vertices_; ++v) {
    if (degree(v) != d) return std::nullopt;
  }
  if (d < 2) return std::nullopt;
  return d - 1;
}

int Graph::require_regular() const {
  const int d = degree(0);
  for (Vertex v = 1; v < num_vertices_; ++v) {
    if (degree(v) != d) {
      throw GraphError("graph is not regular: deg(0) = " + std::to_string(d) +
                       " but deg(" + std::to_string(v) +
                       ") = " + std::to_string(degree(v)));
    }
  }
  if (d < 2) throw GraphError("regular graph must have degree >= 2 (q >= 1)");
  return d - 1;
}

int Graph::multiplicity(Vertex u, Vertex v) const {
  int count = 0;
  for (EdgeId e : out_edges(u)) count += terminus_[e] == v;
  return count;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.num_vertices(), -1);
  std::queue<Vertex> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const Vertex v = frontier.front();
    frontier.pop();
    for (EdgeId e : g.out_edges(v)) {
      const Vertex w = g.terminus(e);
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

namespace {

Graph parse_json(const std::string& text, const std::string& source) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw GraphError(source + ": invalid JSON: " + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges")) {
    throw GraphError(source + ": expected {\"vertices\": n, \"edges\": [[u, v], ...]}");
  }
  if (!doc["vertices"].is_number_integer()) {
    throw GraphError(source + ": \"vertices\" must be an integer");
  }
  const int n = doc["vertices"].get<int>();
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
    const auto& item = doc["edges"][i];
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer()) {
      throw GraphError(source + ": edges[" + std::to_string(i) +
                       "] is not a pair of integers");
    }
    edges.emplace_back(item[0].get<int>(), item[1].get<int>());
  }
  try {
    return Graph::from_edges(n, edges, source);
  } catch (const GraphError& e) {
    throw GraphError(source + ": " + e.what());
  }
}

bool parse_int(std::string_view token, int& out) {
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

Graph parse_lines(const std::string& text, const std::string& source) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int max_vertex = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    int u = 0, v = 0;
    if (tokens.size() != 2 || !parse_int(tokens[0], u) || !parse_int(tokens[1], v)) {
      throw GraphError(source + ":" + std::to_string(line_no) +
                       ": expected two vertex indices \"u v\"");
    }
    if (u < 0 || v < 0) {
      throw GraphError(source + ":" + std::to_string(line_no) +
                       ": vertex indices must be >= 0");
    }
    max_vertex = std::max({max_vertex, u, v});
    edges.emplace_back(u, v);
  }
  if (edges.empty()) throw GraphError(source + ": no edges");
  try {
    return Graph::from_edges(max_vertex + 1, edges, source);
  } catch (const GraphError& e) {
    throw GraphError(source + ": " + e.what());
  }
}

}  // namespace

Graph parse_graph(const std::string& text, const std::string& source) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_json(text, source);
  return parse_lines(text, source);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str(), path);
}

Graph complete_graph(int n) {
  if (n < 2) throw GraphError("complete graph needs n >= 2");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges, "k" + std::to_string(n));
}

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("cycle graph needs n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, edges, "c" + std::to_string(n));
}

Graph petersen_graph() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(i, i + 5);                // spokes
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  return Graph::from_edges(10, edges, "petersen");
}

Graph hypercube_graph(int dim) {
  if (dim < 2) throw GraphError("hypercube needs dimension >= 2");
  const int n = 1 << dim;
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < dim; ++b)
      if (int w = v ^ (1 << b); v < w) edges.emplace_back(v, w);
  return Graph::from_edges(n, edges, dim == 3 ? "cube" : "q" + std::to_string(dim));
}

Graph complete_bipartite_graph(int a, int b) {
  if (a < 1 || b < 1) throw GraphError("complete bipartite graph needs a, b >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return Graph::from_edges(a + b, edges,
                           "k" + std::to_string(a) + std::to_string(b));
}

Graph tree_ball(int q, int radius) {
  if (q < 1 || radius < 0) throw GraphError("tree_ball needs q >= 1 and radius >= 0");
  std::vector<std::pair<int, int>> edges;
  std::vector<Vertex> layer{0};
  int next = 1;
  for (int depth = 0; depth < radius; ++depth) {
    std::vector<Vertex> children;
    for (Vertex v : layer) {
      const int fanout = depth == 0 ? q + 1 : q;
      for (int i = 0; i < fanout; ++i) {
        edges.emplace_back(v, next);
        children.push_back(next++);
      }
    }
    layer = std::move(children);
  }
  if (edges.empty()) {
    // A single vertex has no edges; from_edges still accepts it.
    return Graph::from_edges(1, edges, "tree_ball");
  }
  return Graph::from_edges(next, edges,
                           "tree" + std::to_string(q) + "_r" + std::to_string(radius));
}

bool is_builtin_graph_name(const std::string& name) {
  static const std::regex pattern("k33|petersen|cube|[kc][0-9]+");
  return std::regex_match(name, pattern);
}

Graph builtin_graph(const std::string& name) {
  if (name == "k33") return complete_bipartite_graph(3, 3);
  if (name == "petersen") return petersen_graph();
  if (name == "cube") return hypercube_graph(3);
  if (is_builtin_graph_name(name)) {
    int n = 0;
    if (!parse_int(std::string_view(name).substr(1), n)) {
      throw GraphError("builtin graph size out of range in \"" + name + "\"");
    }
    return name[0] == 'k' ? complete_graph(n) : cycle_graph(n);
  }
  throw GraphError("unknown builtin graph \"" + name + "\"");
}

}  // namespace hkzeta
