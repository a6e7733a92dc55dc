#include "hkzeta/counting.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "hkzeta/automorphism.hpp"

namespace hkzeta {
namespace {

void check_order(int K) {
  if (K < 0) throw std::invalid_argument("count order must be >= 0");
}

std::vector<BigInt> indicator(int n, Vertex x0) {
  std::vector<BigInt> v(n);
  v[x0] = 1;
  return v;
}

void check_vertex(const Graph& g, Vertex x0) {
  if (x0 < 0 || x0 >= g.num_vertices()) {
    throw std::invalid_argument("vertex " + std::to_string(x0) + " out of range");
  }
}

// (A f)(x) = sum over edges e with t(e) = x of f(o(e)).
std::vector<BigInt> apply_adjacency(const Graph& g, const std::vector<BigInt>& f) {
  std::vector<BigInt> out(g.num_vertices());
  for (EdgeId e = 0; e < g.num_edges(); ++e) out[g.terminus(e)] += f[g.origin(e)];
  return out;
}

}  // namespace

VertexTable path_counts(const Graph& g, Vertex x0, int K) {
  check_order(K);
  check_vertex(g, x0);
  VertexTable a;
  a.reserve(K + 1);
  a.push_back(indicator(g.num_vertices(), x0));
  for (int k = 1; k <= K; ++k) a.push_back(apply_adjacency(g, a.back()));
  return a;
}

VertexTable geodesic_counts(const Graph& g, Vertex x0, int K) {
  check_order(K);
  check_vertex(g, x0);
  const int n = g.num_vertices();
  const int m = g.num_edges();
  VertexTable c;
  c.reserve(K + 1);
  c.push_back(indicator(n, x0));
  if (K == 0) return c;

  // walks[e]: non-backtracking walks of the current length whose last edge is e.
  std::vector<BigInt> walks(m);
  for (EdgeId e : g.out_edges(x0)) walks[e] = 1;
  std::vector<BigInt> arriving(n);
  for (int k = 1;; ++k) {
    for (auto& v : arriving) v = 0;
    for (EdgeId e = 0; e < m; ++e) arriving[g.terminus(e)] += walks[e];
    c.push_back(arriving);
    if (k == K) break;
    // Walks continuing along f: everything arriving at o(f) except via inverse(f).
    std::vector<BigInt> next(m);
    for (EdgeId f = 0; f < m; ++f) next[f] = arriving[g.origin(f)] - walks[g.inverse(f)];
    walks = std::move(next);
  }
  return c;
}

VertexTable geodesic_counts_three_term(const Graph& g, Vertex x0, int K) {
  check_order(K);
  check_vertex(g, x0);
  const int n = g.num_vertices();
  VertexTable c;
  c.reserve(K + 1);
  c.push_back(indicator(n, x0));
  if (K >= 1) c.push_back(apply_adjacency(g, c[0]));
  for (int k = 1; k < K; ++k) {
    auto next = apply_adjacency(g, c[k]);
    for (Vertex x = 0; x < n; ++x) {
      const int back = k == 1 ? g.degree(x) : g.degree(x) - 1;
      next[x] -= back * c[k - 1][x];
    }
    c.push_back(std::move(next));
  }
  return c;
}

CountSequence diagonal(const VertexTable& table, Vertex x0) {
  CountSequence d;
  d.reserve(table.size());
  for (const auto& row : table) d.push_back(row.at(x0));
  return d;
}

CountSequence closed_from_loop_counts(const CountSequence& loops, int q) {
  if (q < 1) throw std::invalid_argument("q must be >= 1");
  const int K = static_cast<int>(loops.size()) - 1;
  CountSequence closed(loops.size());
  for (int k = 0; k <= K; ++k) {
    closed[k] = loops[k];
    if (k < 3) continue;
    BigInt tail = 0;
    for (int j = k - 2; j >= 1; j -= 2) tail += loops[j];
    closed[k] -= (q - 1) * tail;
  }
  return closed;
}

CountSequence closed_from_loop_counts_recursive(const CountSequence& loops, int q) {
  if (q < 1) throw std::invalid_argument("q must be >= 1");
  CountSequence closed(loops.size());
  for (std::size_t k = 0; k < loops.size(); ++k) {
    closed[k] = k < 3 ? loops[k] : closed[k - 2] + loops[k] - q * loops[k - 2];
  }
  return closed;
}

CountSequence closed_geodesics_at_vertex(const Graph& g, Vertex x0, int K,
                                         Transitivity mode) {
  check_order(K);
  const int q = g.require_regular();
  if (mode == Transitivity::verify) {
    const auto verdict = check_vertex_transitive(g).verdict;
    if (verdict == TransitivityVerdict::not_transitive) {
      throw GraphError("closed-geodesic formula needs a vertex-transitive graph; " +
                       g.name() + " is not");
    }
    if (verdict == TransitivityVerdict::unknown) {
      throw GraphError("transitivity of " + g.name() +
                       " could not be verified (vertex cap exceeded); "
                       "assert it explicitly");
    }
  }
  return closed_from_loop_counts(diagonal(geodesic_counts(g, x0, K), x0), q);
}

CountSequence geodesic_loop_totals(const Graph& g, int K, Exec exec) {
  check_order(K);
  const int n = g.num_vertices();
  std::vector<CountSequence> per_vertex(n);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (Vertex x0 = 0; x0 < n; ++x0) {
      per_vertex[x0] = diagonal(geodesic_counts(g, x0, K), x0);
    }
  } else {
    for (Vertex x0 = 0; x0 < n; ++x0) {
      per_vertex[x0] = diagonal(geodesic_counts(g, x0, K), x0);
    }
  }
  // Reduce in vertex order so the result never depends on scheduling.
  CountSequence total(K + 1);
  for (const auto& seq : per_vertex)
    for (int k = 0; k <= K; ++k) total[k] += seq[k];
  return total;
}

CountSequence closed_geodesics_total(const Graph& g, int K, Exec exec) {
  const int q = g.require_regular();
  return closed_from_loop_counts(geodesic_loop_totals(g, K, exec), q);
}

int moebius(int n) {
  if (n < 1) throw std::invalid_argument("moebius: n >= 1");
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

CountSequence prime_geodesic_counts(const CountSequence& closed, int K) {
  check_order(K);
  if (static_cast<int>(closed.size()) <= K) {
    throw std::invalid_argument("prime_geodesic_counts: need N_m for m <= K");
  }
  CountSequence primes(K + 1);
  for (int m = 1; m <= K; ++m) {
    BigInt sum = 0;
    for (int d = 1; d <= m; ++d) {
      if (m % d == 0) sum += moebius(m / d) * closed[d];
    }
    if (sum < 0 || sum % m != 0) {
      throw std::domain_error("closed-geodesic counts are inconsistent: pi_" +
                              std::to_string(m) + " = " + sum.str() + "/" +
                              std::to_string(m));
    }
    primes[m] = sum / m;
  }
  return primes;
}

std::vector<std::vector<EdgeId>> enumerate_closed_geodesics(const Graph& g, Vertex x0,
                                                            int k, int cap, Exec exec) {
  check_vertex(g, x0);
  if (k < 0) throw std::invalid_argument("enumerate_closed_geodesics: k >= 0");
  if (k > cap) {
    throw std::invalid_argument("enumerate_closed_geodesics: length " +
                                std::to_string(k) + " exceeds cap " +
                                std::to_string(cap));
  }
  if (k == 0) return {{}};  // the empty path is a closed geodesic

  const auto first_edges = g.out_edges(x0);
  std::vector<std::vector<std::vector<EdgeId>>> per_first(first_edges.size());

  auto explore = [&](std::size_t slot) {
    auto& found = per_first[slot];
    std::vector<EdgeId> path{first_edges[slot]};
    std::function<void()> dfs = [&] {
      const EdgeId last = path.back();
      if (static_cast<int>(path.size()) == k) {
        if (g.terminus(last) == x0 && path.front() != g.inverse(last)) {
          found.push_back(path);
        }
        return;
      }
      for (EdgeId f : g.out_edges(g.terminus(last))) {
        if (f == g.inverse(last)) continue;
        path.push_back(f);
        dfs();
        path.pop_back();
      }
    };
    dfs();
  };

  const int slots = static_cast<int>(first_edges.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int s = 0; s < slots; ++s) explore(s);
  } else {
    for (int s = 0; s < slots; ++s) explore(s);
  }
  std::vector<std::vector<EdgeId>> all;
  for (auto& chunk : per_first)
    for (auto& p : chunk) all.push_back(std::move(p));
  std::sort(all.begin(), all.end());
  return all;
}

VertexTable enumerate_geodesic_counts(const Graph& g, Vertex x0, int K) {
  check_order(K);
  check_vertex(g, x0);
  VertexTable c(K + 1, std::vector<BigInt>(g.num_vertices()));
  c[0][x0] = 1;
  std::function<void(EdgeId, int)> dfs = [&](EdgeId last, int len) {
    ++c[len][g.terminus(last)];
    if (len == K) return;
    for (EdgeId f : g.out_edges(g.terminus(last))) {
      if (f != g.inverse(last)) dfs(f, len + 1);
    }
  };
  if (K >= 1)
    for (EdgeId e : g.out_edges(x0)) dfs(e, 1);
  return c;
}

VertexTable enumerate_path_counts(const Graph& g, Vertex x0, int K) {
  check_order(K);
  check_vertex(g, x0);
  VertexTable a(K + 1, std::vector<BigInt>(g.num_vertices()));
  std::function<void(Vertex, int)> dfs = [&](Vertex v, int len) {
    ++a[len][v];
    if (len == K) return;
    for (EdgeId f : g.out_edges(v)) dfs(g.terminus(f), len + 1);
  };
  dfs(x0, 0);
  return a;
}

}  // namespace hkzeta
