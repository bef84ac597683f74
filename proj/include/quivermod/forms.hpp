#ifndef QUIVERMOD_FORMS_HPP
#define QUIVERMOD_FORMS_HPP

#include <span>

#include "quivermod/core.hpp"

namespace quivermod {

// The bilinear forms are evaluated on raw integer vectors so that dimension
// vectors and weights can be mixed freely; both wrappers convert implicitly
// through .values().

/// Ringel form <a,b> = sum_v a(v)b(v) - sum_{arrows} a(source)b(target).
Int ringel_form(const Quiver& q, std::span<const Int> a, std::span<const Int> b);

/// Cartan form (a,b) = <a,b> + <b,a>; symmetric, orientation-independent.
Int cartan_form(const Quiver& q, std::span<const Int> a, std::span<const Int> b);

/// Tits form <a,a>.
Int tits_form(const Quiver& q, std::span<const Int> a);

/// Matrix of the Cartan form in the coordinate vertex basis.
std::vector<std::vector<Int>> cartan_matrix(const Quiver& q);

/// Number of arrow ends at v; a loop counts twice.
Int degree(const Quiver& q, int v);

/// cartan_form(q, a, e_v) without materializing the unit vector:
/// 2 a(v) - sum_{source=v} a(target) - sum_{target=v} a(source).
Int cartan_with_unit(const Quiver& q, std::span<const Int> a, int v);

/// ringel_form(q, a, e_v) and ringel_form(q, e_v, a).
Int ringel_with_unit_right(const Quiver& q, std::span<const Int> a, int v);
Int ringel_with_unit_left(const Quiver& q, int v, std::span<const Int> a);

/// sum_v theta(v) a(v).
Int pairing(const Weight& theta, const DimVector& a);

inline Int ringel_form(const Quiver& q, const DimVector& a, const DimVector& b) {
  return ringel_form(q, std::span<const Int>(a.values()), std::span<const Int>(b.values()));
}
inline Int cartan_form(const Quiver& q, const DimVector& a, const DimVector& b) {
  return cartan_form(q, std::span<const Int>(a.values()), std::span<const Int>(b.values()));
}
inline Int tits_form(const Quiver& q, const DimVector& a) {
  return tits_form(q, std::span<const Int>(a.values()));
}

}  // namespace quivermod

#endif
