#ifndef QUIVERMOD_GRAPH_OPS_HPP
#define QUIVERMOD_GRAPH_OPS_HPP

#include <utility>

#include "quivermod/core.hpp"

namespace quivermod {

/// Restriction of a pair (and an optional weight) to the support of alpha:
/// vertices with alpha > 0 and the arrows between them. The result is sincere.
/// Throws DomainError if alpha is identically zero.
std::pair<QuiverPair, std::optional<Weight>> support_restrict(
    const QuiverPair& pair, const std::optional<Weight>& theta = std::nullopt);

bool is_connected(const Quiver& q);

/// Directed reachability in both directions between every pair of vertices.
bool is_strongly_connected(const Quiver& q);

struct ComponentPair {
  QuiverPair pair;
  std::optional<Weight> theta;
  std::vector<int> original_vertices;  // indices into the input quiver
};

/// Components of the underlying undirected multigraph, with alpha and theta
/// restricted per component.
std::vector<ComponentPair> connected_components(const QuiverPair& pair,
                                                const std::optional<Weight>& theta = std::nullopt);

/// Full subquiver spanned by the given vertex indices (sorted, deduplicated
/// by the caller); alpha and theta restricted alongside.
QuiverPair induced_subpair(const QuiverPair& pair, const std::vector<int>& vertices);

/// Component labels of the underlying undirected multigraph, 0-based.
std::vector<int> undirected_component_labels(const Quiver& q);

}  // namespace quivermod

#endif
