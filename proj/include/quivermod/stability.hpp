#ifndef QUIVERMOD_STABILITY_HPP
#define QUIVERMOD_STABILITY_HPP

#include <map>
#include <shared_mutex>
#include <tuple>

#include "quivermod/core.hpp"

namespace quivermod {

/// Memo for the generic-embedding recursion. Entries are keyed on the
/// canonical form of the quiver together with the sub/complement vectors in
/// canonical coordinates, so the cache can be shared across queries on the
/// same quiver (and across isomorphic copies). Concurrent reads are safe;
/// writes take the exclusive lock.
class EmbedCache {
public:
  std::optional<bool> lookup(const std::string& qkey, const std::vector<Int>& beta,
                             const std::vector<Int>& gamma) const;
  void store(const std::string& qkey, const std::vector<Int>& beta,
             const std::vector<Int>& gamma, bool value);
  std::size_t size() const;

private:
  mutable std::shared_mutex mutex_;
  std::map<std::tuple<std::string, std::vector<Int>, std::vector<Int>>, bool> memo_;
};

/// Whether every (equivalently, the generic) alpha-dimensional representation
/// has a subrepresentation of dimension vector beta, in characteristic zero.
/// Decided by the recursion: beta embeds into alpha iff <beta', alpha - beta>
/// >= 0 for every beta' that embeds into beta; 0 and alpha always embed.
bool generically_embeds(const Quiver& q, const DimVector& beta, const DimVector& alpha,
                        EmbedCache* cache = nullptr);

struct StabilityVerdict {
  enum class Tag { NotSemistable, SemistableNotStable, Stable };
  Tag tag = Tag::Stable;
  // First violating subdimension vector in graded lexicographic order, when
  // one exists: theta-negative for NotSemistable, theta-null proper for
  // SemistableNotStable.
  std::optional<DimVector> witness;
};

struct StabilityOptions {
  bool force = false;  // bypass the candidate-count guard
  EmbedCache* cache = nullptr;
};

/// King's numerical criterion over generic subdimension vectors:
/// NotSemistable if theta.alpha != 0 or some embedding beta pairs negative;
/// SemistableNotStable if some proper nonzero embedding beta pairs to zero;
/// Stable otherwise. Refuses dimension vectors with more than 10^7 candidate
/// subvectors unless forced.
StabilityVerdict stability_verdict(const QuiverPair& pair, const Weight& theta,
                                   const StabilityOptions& opts = {});

/// 1 - <alpha, alpha>; defined when alpha is theta-stable, rejected otherwise.
Int moduli_dimension(const QuiverPair& pair, const Weight& theta,
                     const StabilityOptions& opts = {});

/// Number of candidate subvectors, prod(alpha(v) + 1), saturating at the
/// guard threshold.
Int subvector_count(const DimVector& alpha);

inline constexpr Int kStabilityGuard = 10'000'000;

std::string verdict_label(StabilityVerdict::Tag tag);

}  // namespace quivermod

#endif
