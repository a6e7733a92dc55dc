#pragma once

// Exact path and geodesic counting on Serre graphs.
//
// Tables indexed [k][x] hold counts for lengths k = 0..K at every vertex x,
// relative to a fixed base vertex x0:
//   a_k(x)  paths of length k from x0 to x
//   c_k(x)  geodesics (non-backtracking paths) of length k from x0 to x
// Scalar sequences indexed [k]:
//   c_k^0   geodesic loops at x0 (= c_k(x0))
//   N_k^0   closed geodesics at x0 (no backtracking, no tail)
//   c_k, N_k, pi_k   totals over all starting points (finite graphs)
// All counts are arbitrary-precision integers.

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hkzeta/exec.hpp"
#include "hkzeta/graph.hpp"

namespace hkzeta {

using BigInt = boost::multiprecision::cpp_int;
using CountSequence = std::vector<BigInt>;
using VertexTable = std::vector<std::vector<BigInt>>;

/// How a caller vouches for vertex transitivity where a formula needs it.
enum class Transitivity { assume, verify };

/// a_k(x) for k = 0..K: powers of the adjacency operator applied to the
/// indicator of x0.
VertexTable path_counts(const Graph& g, Vertex x0, int K);

/// c_k(x) by the directed-edge transfer recursion: the state is the last
/// edge walked, and an edge f may follow e iff o(f) = t(e) and f != inverse(e).
VertexTable geodesic_counts(const Graph& g, Vertex x0, int K);

/// c_k(x) by the vertex recursion
///   c_1 = A c_0,  c_2 = A c_1 - D c_0,  c_{k+1} = A c_k - (D - I) c_{k-1},
/// which reduces to the three-term recursion with q on (q+1)-regular graphs.
VertexTable geodesic_counts_three_term(const Graph& g, Vertex x0, int K);

/// Diagonal of a vertex table: c_k^0 = table[k][x0].
CountSequence diagonal(const VertexTable& table, Vertex x0);

/// The alternating-tail map from geodesic-loop counts to closed-geodesic
/// counts: N_0 = c_0, N_1 = c_1, N_2 = c_2 and, for k >= 3,
///   N_k = c_k - (q-1)(c_{k-2} + c_{k-4} + ...)  ending at c_1 or c_2.
CountSequence closed_from_loop_counts(const CountSequence& loops, int q);

/// Same map via N_k - N_{k-2} = c_k - q c_{k-2} for k >= 3.
CountSequence closed_from_loop_counts_recursive(const CountSequence& loops, int q);

/// N_k^0 for k = 0..K on a vertex-transitive (q+1)-regular graph. With
/// Transitivity::verify runs the automorphism search first and throws
/// GraphError if the graph is not (or cannot be shown to be) transitive.
CountSequence closed_geodesics_at_vertex(const Graph& g, Vertex x0, int K,
                                         Transitivity mode = Transitivity::verify);

/// c_k = sum over x0 of c_k^0(x0), k = 0..K.
CountSequence geodesic_loop_totals(const Graph& g, int K, Exec exec = Exec::parallel);

/// N_k for k = 0..K on a finite (q+1)-regular graph, from geodesic_loop_totals.
CountSequence closed_geodesics_total(const Graph& g, int K,
                                     Exec exec = Exec::parallel);

/// pi_m = (1/m) sum_{d | m} mu(m/d) N_d for m = 1..K; entry 0 is 0. Throws
/// std::domain_error if some pi_m is negative or not an integer.
CountSequence prime_geodesic_counts(const CountSequence& closed, int K);

/// Moebius function.
int moebius(int n);

/// Exhaustive depth-first listing of the closed geodesics of length k at x0,
/// each as its edge sequence, in lexicographic order of edge ids. Throws
/// std::invalid_argument when k exceeds `cap`.
std::vector<std::vector<EdgeId>> enumerate_closed_geodesics(
    const Graph& g, Vertex x0, int k, int cap = 12, Exec exec = Exec::parallel);

/// Brute-force c_k(x) for k = 0..K by walking every non-backtracking path
/// from x0. Exponential; for oracles only.
VertexTable enumerate_geodesic_counts(const Graph& g, Vertex x0, int K);

/// Brute-force a_k(x) by walking every path from x0. For oracles only.
VertexTable enumerate_path_counts(const Graph& g, Vertex x0, int K);

}  // namespace hkzeta
