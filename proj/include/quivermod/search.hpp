#ifndef QUIVERMOD_SEARCH_HPP
#define QUIVERMOD_SEARCH_HPP

#include <functional>

#include "quivermod/canonical.hpp"
#include "quivermod/classify.hpp"
#include "quivermod/core.hpp"
#include "quivermod/reductions.hpp"

namespace quivermod {

/// Membership predicate for the class the minimality search targets. Every
/// class consists of sincere pairs.
struct ClassPredicate {
  enum class Tag {
    AllSincere,
    FundamentalWildSincere,  // wild connected, alpha sincere and in the fundamental set
    Dim2Bounded,             // alpha(v) <= 2 everywhere
    ConstantN,               // alpha(v) == n everywhere
    AffineIrreducible,       // strongly connected, not the one-loop quiver,
                             // <alpha,e_v> < 0 and <e_v,alpha> < 0 everywhere
    Custom
  };
  Tag tag = Tag::AllSincere;
  Int n = 1;  // for ConstantN
  std::function<bool(const QuiverPair&)> custom;

  bool contains(const QuiverPair& pair) const;
  std::string label() const;

  static ClassPredicate all_sincere() { return {Tag::AllSincere, 1, nullptr}; }
  static ClassPredicate fundamental() { return {Tag::FundamentalWildSincere, 1, nullptr}; }
  static ClassPredicate dim2() { return {Tag::Dim2Bounded, 1, nullptr}; }
  static ClassPredicate constant(Int n) { return {Tag::ConstantN, n, nullptr}; }
  static ClassPredicate affine() { return {Tag::AffineIrreducible, 1, nullptr}; }
};

struct SearchOptions {
  Int max_depth = 8;
  Int max_total_dim = 0;  // 0: defaults to 8 * |alpha| of the start pair
  std::function<void(const QuiverPair&, Int depth)> observer;
};

/// Outcome of the bounded reduction search. Minimality is only
/// semi-decidable, so the negative verdict is explicitly bound-qualified.
struct SearchReport {
  enum class Verdict { NotMinimal, MinimalUpToBound };
  Verdict verdict = Verdict::MinimalUpToBound;
  std::vector<ReductionStep> witness;  // nonempty iff NotMinimal
  Int explored = 0;                    // canonical forms visited
  Int max_depth = 0;                   // bounds actually used
  Int max_total_dim = 0;
};

/// Breadth-first search over all admissible weight-free moves, deduplicated
/// by canonical key. Intermediate pairs need not lie in the class; success is
/// any in-class pair with fewer vertices than the start, or equally many and
/// smaller total dimension.
SearchReport is_tau_sigma_minimal(const QuiverPair& start, const ClassPredicate& cls,
                                  const SearchOptions& opts = {});

/// Replay a witness sequence on a pair (weight-free).
QuiverPair replay(const QuiverPair& start, const std::vector<ReductionStep>& witness);

struct ClassificationRow {
  CanonicalKey key;
  QuiverPair pair;
  Int d = 0;
  std::optional<SearchReport> minimal_verdict;
  std::optional<FundamentalAnalysis> analysis;
};

struct EnumerateLimits {
  Int max_vertices = 3;
  Int max_arrows = 5;
  Int max_entry = 3;
};

struct EnumerateOptions {
  int jobs = 1;
  bool force = false;
  SearchOptions search{/*max_depth=*/4, /*max_total_dim=*/0, nullptr};
};

/// All isomorphism classes of connected wild sincere pairs in the fundamental
/// set with moduli dimension d inside the given window, each with a bounded
/// minimality verdict. Requires d >= 2. Refuses windows whose candidate count
/// exceeds the guard unless forced.
std::vector<ClassificationRow> enumerate_fundamental(Int d, const EnumerateLimits& limits,
                                                     const EnumerateOptions& opts = {});

/// All strongly connected, non-one-loop, sincere pairs with <alpha,e_v> < 0
/// and <e_v,alpha> < 0 everywhere and moduli dimension d, inside the
/// enumeration envelope |Q0| <= d-1, |alpha| <= d-1, |Q1| <= 2(d-1)
/// intersected with the given window. Requires d >= 1.
std::vector<ClassificationRow> enumerate_affine(Int d, const EnumerateLimits& limits,
                                                const EnumerateOptions& opts = {});

/// Window a minimality-search survivor at moduli dimension d must fit in:
/// at most 2(d-1) + 36(d-1)^2(12d-11) vertices, 12(d-1)^2 more arrows than
/// that, and entries at most 18(d-1).
struct DimensionBounds {
  Int vertices = 0;
  Int arrows = 0;
  Int max_entry = 0;
};
DimensionBounds minimal_pair_bounds(Int d);

struct BoundsReport {
  struct Violation {
    CanonicalKey key;
    std::string check;
    std::string detail;
  };
  Int rows_seen = 0;
  Int minimal_rows = 0;
  std::vector<Violation> violations;
  bool pass() const { return violations.empty(); }
};

/// For every row with a MinimalUpToBound verdict, check the vertex/arrow/
/// entry bounds at its dimension d together with the numeric suite on the
/// negative part, the tied vertices and the zero-part sizes. A violation
/// indicates an implementation bug.
BoundsReport verify_bounds(const std::vector<ClassificationRow>& rows);

/// Whether the generic alpha-dimensional representation is simple:
/// supp(alpha) strongly connected and <alpha,e_v> <= 0, <e_v,alpha> <= 0 on
/// the support, except that on an oriented cycle only the constant-1 vector
/// qualifies.
bool is_simple_dimvector(const QuiverPair& pair);

/// The one-vertex contraction of affine quotients applies at v iff
/// <alpha,e_v> >= 0 or <e_v,alpha> >= 0.
bool affine_reduction_applicable(const QuiverPair& pair, int v);

}  // namespace quivermod

#endif
