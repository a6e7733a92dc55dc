#include "hkzeta/automorphism.hpp"

#include <algorithm>
#include <functional>

namespace hkzeta {
namespace {

struct SearchData {
  int n = 0;
  std::vector<std::vector<int>> dist;
  std::vector<std::vector<int>> mult;
  std::vector<std::vector<int>> profile;  // histogram of distances per vertex
};

SearchData prepare(const Graph& g) {
  SearchData d;
  d.n = g.num_vertices();
  d.mult.assign(d.n, std::vector<int>(d.n, 0));
  for (EdgeId e = 0; e < g.num_edges(); ++e) ++d.mult[g.origin(e)][g.terminus(e)];
  d.dist.resize(d.n);
  d.profile.resize(d.n);
  for (Vertex v = 0; v < d.n; ++v) {
    d.dist[v] = bfs_distances(g, v);
    d.profile[v].assign(d.n, 0);
    for (int x : d.dist[v]) ++d.profile[v][x];
  }
  return d;
}

std::optional<std::vector<Vertex>> search(const Graph& g, const SearchData& d,
                                          Vertex from, Vertex to) {
  if (g.degree(from) != g.degree(to) || d.profile[from] != d.profile[to] ||
      d.mult[from][from] != d.mult[to][to]) {
    return std::nullopt;
  }
  // Map vertices in BFS order from `from` so each new vertex has a mapped
  // neighbour and candidates are tightly constrained.
  std::vector<Vertex> order(d.n);
  for (Vertex v = 0; v < d.n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return d.dist[from][a] < d.dist[from][b];
  });

  std::vector<Vertex> image(d.n, -1);
  std::vector<char> used(d.n, 0);
  image[from] = to;
  used[to] = 1;

  std::function<bool(int)> extend = [&](int idx) -> bool {
    if (idx == d.n) return true;
    const Vertex w = order[idx];
    if (image[w] >= 0) return extend(idx + 1);
    for (Vertex c = 0; c < d.n; ++c) {
      if (used[c] || g.degree(c) != g.degree(w) || d.profile[c] != d.profile[w] ||
          d.mult[c][c] != d.mult[w][w]) {
        continue;
      }
      bool ok = true;
      for (int j = 0; j < idx && ok; ++j) {
        const Vertex u = order[j];
        const Vertex iu = image[u];
        ok = d.mult[w][u] == d.mult[c][iu] && d.dist[w][u] == d.dist[c][iu];
      }
      if (!ok) continue;
      image[w] = c;
      used[c] = 1;
      if (extend(idx + 1)) return true;
      image[w] = -1;
      used[c] = 0;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return image;
}

}  // namespace

bool is_automorphism(const Graph& g, const std::vector<Vertex>& perm) {
  const int n = g.num_vertices();
  if (static_cast<int>(perm.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (Vertex v : perm) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (g.multiplicity(u, v) != g.multiplicity(perm[u], perm[v])) return false;
  return true;
}

std::optional<std::vector<Vertex>> find_automorphism(const Graph& g, Vertex from,
                                                     Vertex to) {
  return search(g, prepare(g), from, to);
}

TransitivityResult check_vertex_transitive(const Graph& g, int vertex_cap) {
  TransitivityResult result;
  if (g.num_vertices() > vertex_cap) return result;
  const SearchData d = prepare(g);
  for (Vertex v = 0; v < d.n; ++v) {
    auto witness = search(g, d, 0, v);
    if (!witness) {
      result.verdict = TransitivityVerdict::not_transitive;
      result.witnesses.clear();
      return result;
    }
    result.witnesses.push_back(std::move(*witness));
  }
  result.verdict = TransitivityVerdict::transitive;
  return result;
}

}  // namespace hkzeta
