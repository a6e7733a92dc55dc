#pragma once

#include <optional>
#include <vector>

#include "hkzeta/graph.hpp"

namespace hkzeta {

enum class TransitivityVerdict { transitive, not_transitive, unknown };

struct TransitivityResult {
  TransitivityVerdict verdict = TransitivityVerdict::unknown;
  /// When transitive: witnesses[v] is an automorphism (as a vertex
  /// permutation) sending vertex 0 to v.
  std::vector<std::vector<Vertex>> witnesses;
};

inline constexpr int kTransitivityVertexCap = 64;

/// Backtracking search for an automorphism with perm[from] = to. Preserves
/// edge multiplicities (including loops). Candidates are pruned by degree,
/// distance profile, and distances to already-mapped vertices.
std::optional<std::vector<Vertex>> find_automorphism(const Graph& g, Vertex from,
                                                     Vertex to);

/// True iff every vertex is the image of vertex 0 under some automorphism.
/// Graphs above `vertex_cap` vertices give `unknown`.
TransitivityResult check_vertex_transitive(const Graph& g,
                                           int vertex_cap = kTransitivityVertexCap);

/// True iff perm is a bijection that preserves all edge multiplicities.
bool is_automorphism(const Graph& g, const std::vector<Vertex>& perm);

}  // namespace hkzeta
