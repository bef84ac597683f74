#include "quivermod/forms.hpp"

namespace quivermod {

namespace {

void check_sizes(const Quiver& q, std::span<const Int> a, const char* what) {
  if (static_cast<int>(a.size()) != q.vertex_count())
    throw DomainError(std::string(what) + ": vector is not defined on exactly the vertex set");
}

}  // namespace

Int ringel_form(const Quiver& q, std::span<const Int> a, std::span<const Int> b) {
  check_sizes(q, a, "ringel_form");
  check_sizes(q, b, "ringel_form");
  Int s = 0;
  for (int v = 0; v < q.vertex_count(); ++v)
    s = checked_add(s, checked_mul(a[static_cast<std::size_t>(v)], b[static_cast<std::size_t>(v)]));
  for (const Quiver::Arrow& ar : q.arrows())
    s = checked_sub(s, checked_mul(a[static_cast<std::size_t>(ar.source)],
                                   b[static_cast<std::size_t>(ar.target)]));
  return s;
}

Int cartan_form(const Quiver& q, std::span<const Int> a, std::span<const Int> b) {
  return checked_add(ringel_form(q, a, b), ringel_form(q, b, a));
}

Int tits_form(const Quiver& q, std::span<const Int> a) { return ringel_form(q, a, a); }

std::vector<std::vector<Int>> cartan_matrix(const Quiver& q) {
  const int n = q.vertex_count();
  std::vector<std::vector<Int>> c(static_cast<std::size_t>(n),
                                  std::vector<Int>(static_cast<std::size_t>(n), 0));
  for (int v = 0; v < n; ++v) c[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] = 2;
  for (const Quiver::Arrow& ar : q.arrows()) {
    c[static_cast<std::size_t>(ar.source)][static_cast<std::size_t>(ar.target)] -= 1;
    c[static_cast<std::size_t>(ar.target)][static_cast<std::size_t>(ar.source)] -= 1;
  }
  return c;
}

Int degree(const Quiver& q, int v) {
  if (v < 0 || v >= q.vertex_count()) throw DomainError("degree: unknown vertex index");
  return checked_add(q.out_arrow_count(v), q.in_arrow_count(v));
}

Int cartan_with_unit(const Quiver& q, std::span<const Int> a, int v) {
  check_sizes(q, a, "cartan_with_unit");
  if (v < 0 || v >= q.vertex_count()) throw DomainError("cartan_with_unit: unknown vertex index");
  Int s = checked_mul(2, a[static_cast<std::size_t>(v)]);
  for (const Quiver::Arrow& ar : q.arrows()) {
    if (ar.source == v) s = checked_sub(s, a[static_cast<std::size_t>(ar.target)]);
    if (ar.target == v) s = checked_sub(s, a[static_cast<std::size_t>(ar.source)]);
  }
  return s;
}

Int ringel_with_unit_right(const Quiver& q, std::span<const Int> a, int v) {
  check_sizes(q, a, "ringel_with_unit_right");
  if (v < 0 || v >= q.vertex_count()) throw DomainError("ringel_with_unit_right: unknown vertex index");
  Int s = a[static_cast<std::size_t>(v)];
  for (const Quiver::Arrow& ar : q.arrows())
    if (ar.target == v) s = checked_sub(s, a[static_cast<std::size_t>(ar.source)]);
  return s;
}

Int ringel_with_unit_left(const Quiver& q, int v, std::span<const Int> a) {
  check_sizes(q, a, "ringel_with_unit_left");
  if (v < 0 || v >= q.vertex_count()) throw DomainError("ringel_with_unit_left: unknown vertex index");
  Int s = a[static_cast<std::size_t>(v)];
  for (const Quiver::Arrow& ar : q.arrows())
    if (ar.source == v) s = checked_sub(s, a[static_cast<std::size_t>(ar.target)]);
  return s;
}

Int pairing(const Weight& theta, const DimVector& a) {
  if (theta.size() != a.size()) throw DomainError("pairing: mismatched vertex sets");
  Int s = 0;
  for (int v = 0; v < a.size(); ++v) s = checked_add(s, checked_mul(theta[v], a[v]));
  return s;
}

}  // namespace quivermod
