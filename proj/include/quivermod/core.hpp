#ifndef QUIVERMOD_CORE_HPP
#define QUIVERMOD_CORE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace quivermod {

// All arithmetic is exact: 64-bit with overflow as a hard error, never floats.
using Int = std::int64_t;

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Bad input data: unknown vertex, mismatched index sets, malformed files.
class DomainError : public Error {
public:
  using Error::Error;
};

// An operation was invoked outside its contract (vertex not large, pair not
// stable, bounds not positive, ...).
class PreconditionError : public Error {
public:
  using Error::Error;
};

class OverflowError : public Error {
public:
  using Error::Error;
};

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

/// Finite directed multigraph. Loops and parallel arrows are permitted;
/// arrows carry identities so individual arrows can be paired and traced
/// through reductions. Immutable after construction.
class Quiver {
public:
  struct Arrow {
    std::string id;
    int source = 0;  // vertex indices
    int target = 0;
  };

  Quiver(std::vector<std::string> vertex_names, std::vector<Arrow> arrows);

  // Convenience constructor resolving arrow endpoints by vertex name.
  struct ArrowSpec {
    std::string id, source, target;
  };
  Quiver(std::vector<std::string> vertex_names, const std::vector<ArrowSpec>& arrows);

  int vertex_count() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::string& vertex_name(int v) const { return names_.at(static_cast<std::size_t>(v)); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  Int arrow_count() const { return static_cast<Int>(arrows_.size()); }

  int index_of(std::string_view name) const;  // throws DomainError on unknown name
  std::optional<int> find_vertex(std::string_view name) const;

  bool has_loop_at(int v) const;
  Int loop_count(int v) const;
  Int in_arrow_count(int v) const;   // loops count once here
  Int out_arrow_count(int v) const;  // loops count once here

  /// Multiplicity matrix m[i][j] = number of arrows i -> j (loops on the diagonal).
  std::vector<std::vector<Int>> multiplicity_matrix() const;

private:
  void check_invariants() const;

  std::vector<std::string> names_;
  std::vector<Arrow> arrows_;
  std::unordered_map<std::string, int> index_;
};

/// Total mapping vertex -> nonnegative integer, indexed like the quiver it
/// belongs to.
class DimVector {
public:
  DimVector() = default;
  explicit DimVector(std::vector<Int> values);

  int size() const { return static_cast<int>(values_.size()); }
  Int operator[](int v) const { return values_.at(static_cast<std::size_t>(v)); }
  const std::vector<Int>& values() const { return values_; }
  Int total() const;  // |alpha|
  bool is_zero() const;

  friend bool operator==(const DimVector&, const DimVector&) = default;

private:
  std::vector<Int> values_;
};

/// Total mapping vertex -> integer; entries may be negative.
class Weight {
public:
  Weight() = default;
  explicit Weight(std::vector<Int> values) : values_(std::move(values)) {}

  int size() const { return static_cast<int>(values_.size()); }
  Int operator[](int v) const { return values_.at(static_cast<std::size_t>(v)); }
  const std::vector<Int>& values() const { return values_; }
  bool is_zero() const;

  friend bool operator==(const Weight&, const Weight&) = default;

private:
  std::vector<Int> values_;
};

/// A quiver together with a dimension vector: the unit of reduction,
/// canonicalization and classification.
struct QuiverPair {
  Quiver quiver;
  DimVector alpha;

  QuiverPair(Quiver q, DimVector a);

  bool sincere() const;
};

}  // namespace quivermod

#endif
