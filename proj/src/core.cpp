#include "quivermod/core.hpp"

#include <algorithm>
#include <unordered_set>

namespace quivermod {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

Quiver::Quiver(std::vector<std::string> vertex_names, std::vector<Arrow> arrows)
    : names_(std::move(vertex_names)), arrows_(std::move(arrows)) {
  index_.reserve(names_.size());
  for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
    auto [it, fresh] = index_.emplace(names_[static_cast<std::size_t>(i)], i);
    if (!fresh) throw DomainError("duplicate vertex name: " + names_[static_cast<std::size_t>(i)]);
  }
  check_invariants();
}

Quiver::Quiver(std::vector<std::string> vertex_names, const std::vector<ArrowSpec>& arrows)
    : names_(std::move(vertex_names)) {
  index_.reserve(names_.size());
  for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
    auto [it, fresh] = index_.emplace(names_[static_cast<std::size_t>(i)], i);
    if (!fresh) throw DomainError("duplicate vertex name: " + names_[static_cast<std::size_t>(i)]);
  }
  arrows_.reserve(arrows.size());
  for (const ArrowSpec& s : arrows) arrows_.push_back({s.id, index_of(s.source), index_of(s.target)});
  check_invariants();
}

void Quiver::check_invariants() const {
  if (names_.empty()) throw DomainError("quiver must have a non-empty vertex set");
  std::unordered_set<std::string> ids;
  for (const Arrow& a : arrows_) {
    if (a.source < 0 || a.source >= vertex_count() || a.target < 0 || a.target >= vertex_count())
      throw DomainError("arrow " + a.id + " has an endpoint outside the vertex set");
    if (!ids.insert(a.id).second) throw DomainError("duplicate arrow id: " + a.id);
  }
}

int Quiver::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) throw DomainError("unknown vertex: " + std::string(name));
  return it->second;
}

std::optional<int> Quiver::find_vertex(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Quiver::has_loop_at(int v) const { return loop_count(v) > 0; }

Int Quiver::loop_count(int v) const {
  Int n = 0;
  for (const Arrow& a : arrows_)
    if (a.source == v && a.target == v) ++n;
  return n;
}

Int Quiver::in_arrow_count(int v) const {
  Int n = 0;
  for (const Arrow& a : arrows_)
    if (a.target == v) ++n;
  return n;
}

Int Quiver::out_arrow_count(int v) const {
  Int n = 0;
  for (const Arrow& a : arrows_)
    if (a.source == v) ++n;
  return n;
}

std::vector<std::vector<Int>> Quiver::multiplicity_matrix() const {
  std::vector<std::vector<Int>> m(static_cast<std::size_t>(vertex_count()),
                                  std::vector<Int>(static_cast<std::size_t>(vertex_count()), 0));
  for (const Arrow& a : arrows_)
    ++m[static_cast<std::size_t>(a.source)][static_cast<std::size_t>(a.target)];
  return m;
}

DimVector::DimVector(std::vector<Int> values) : values_(std::move(values)) {
  for (Int x : values_)
    if (x < 0) throw DomainError("dimension vector entries must be nonnegative");
}

Int DimVector::total() const {
  Int s = 0;
  for (Int x : values_) s = checked_add(s, x);
  return s;
}

bool DimVector::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](Int x) { return x == 0; });
}

bool Weight::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](Int x) { return x == 0; });
}

QuiverPair::QuiverPair(Quiver q, DimVector a) : quiver(std::move(q)), alpha(std::move(a)) {
  if (alpha.size() != quiver.vertex_count())
    throw DomainError("dimension vector is not defined on exactly the vertex set");
}

bool QuiverPair::sincere() const {
  for (int v = 0; v < quiver.vertex_count(); ++v)
    if (alpha[v] <= 0) return false;
  return true;
}

}  // namespace quivermod
