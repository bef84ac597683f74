#ifndef QUIVERMOD_CLASSIFY_HPP
#define QUIVERMOD_CLASSIFY_HPP

#include <array>

#include "quivermod/core.hpp"

namespace quivermod {

/// Type of the underlying undirected graph. Orientation-independent.
struct GraphClass {
  enum class Family { DynkinA, DynkinD, DynkinE, AffineA, AffineD, AffineE, Wild };
  Family family = Family::Wild;
  int rank = 0;  // subscript: A_n, D_n, E_n, ~A_n, ~D_n, ~E_n

  bool dynkin() const {
    return family == Family::DynkinA || family == Family::DynkinD || family == Family::DynkinE;
  }
  bool extended_dynkin() const {
    return family == Family::AffineA || family == Family::AffineD || family == Family::AffineE;
  }
  bool wild() const { return family == Family::Wild; }
  std::string label() const;

  friend bool operator==(const GraphClass&, const GraphClass&) = default;
};

/// Exact ADE / affine-ADE pattern match on the underlying graph; everything
/// else is wild. Convention for loops: a single vertex with one loop is
/// classified ~A0 (its Tits form is the zero form); two or more loops is wild.
/// Throws DomainError on a disconnected quiver.
GraphClass classify_graph(const Quiver& q);

/// Membership in the fundamental set: alpha nonzero, (alpha, e_v) <= 0 at
/// every vertex, and supp(alpha) connected.
bool in_fundamental_set(const QuiverPair& pair);

/// Structure of a fundamental pair: the negative/zero vertex partition under
/// v -> (alpha, e_v), the Dynkin components of the zero part, tied/free
/// marking, and the component pieces obtained by splitting at tied vertices.
struct FundamentalAnalysis {
  std::vector<int> q_minus;  // vertices with (alpha, e_v) < 0
  struct Component {
    std::vector<int> vertices;
    GraphClass cls;
  };
  std::vector<Component> q_plus_components;
  std::vector<int> tied_vertices;  // in the zero part, adjacent to q_minus
  std::vector<int> free_vertices;
  std::vector<std::vector<int>> delta_subgraphs;  // pieces glued at tied vertices
  Int kappa = 0;                                  // number of pieces
  std::optional<Int> mu;                          // max alpha over all tied vertices
  std::vector<std::optional<Int>> mu_per_subgraph;
};

/// Requires: quiver connected and wild, alpha sincere and in the fundamental
/// set. Throws PreconditionError naming the failed condition otherwise.
FundamentalAnalysis analyze_fundamental(const QuiverPair& pair);

/// A full subgraph v1 - v2 - v3 - v4 isomorphic to A4 with equal alpha values
/// and deg(v2) = deg(v3) = 2 in the whole quiver, if one exists.
std::optional<std::array<int, 4>> find_constant_a4(const QuiverPair& pair);

/// Dispatch on the Tits-form value: 1, 0, negative, or none of the three.
/// Root-ness itself is not verified.
enum class RootType { RealCandidate, Isotropic, Nonisotropic, None };
RootType root_type(const QuiverPair& pair);
std::string root_type_label(RootType t);

}  // namespace quivermod

#endif
