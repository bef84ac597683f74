#ifndef QUIVERMOD_CANONICAL_HPP
#define QUIVERMOD_CANONICAL_HPP

#include <compare>

#include "quivermod/core.hpp"

namespace quivermod {

/// Opaque byte string identifying the isomorphism class of a pair: equal keys
/// iff there is a vertex bijection preserving arrow multiplicities and alpha.
/// The key is a deterministic serialization of the lexicographically minimal
/// relabeling and can be decoded back into a representative pair.
struct CanonicalKey {
  std::string bytes;
  auto operator<=>(const CanonicalKey&) const = default;
};

struct Canonicalized {
  CanonicalKey key;
  std::vector<int> order;  // order[p] = original vertex index at canonical position p
};

Canonicalized canonicalize(const QuiverPair& pair);
CanonicalKey canonical_key(const QuiverPair& pair);

/// Canonical vertex order of a bare quiver (alpha ignored).
std::vector<int> canonical_vertex_order(const Quiver& q);

/// Rebuild a representative pair from a key produced by canonicalize().
/// Vertices are named v1..vn and arrows a1..am in a fixed scheme.
QuiverPair pair_from_key(const CanonicalKey& key);

}  // namespace quivermod

#endif
