#ifndef QUIVERMOD_REDUCTIONS_HPP
#define QUIVERMOD_REDUCTIONS_HPP

#include "quivermod/core.hpp"

namespace quivermod {

struct ReductionStep {
  enum class Kind { TauLarge, SigmaSource, SigmaSink };
  Kind kind = Kind::TauLarge;
  std::string vertex;
  // Present iff kind == TauLarge and a weight was transported.
  std::optional<char> tau_case;  // 'a', 'b', or 'c'
};

struct ReductionResult {
  QuiverPair pair;
  std::optional<Weight> weight;
  ReductionStep step;
  // True iff the transported weight is identically zero while the input
  // weight was not.
  bool degenerate_weight = false;
};

/// u is large when it carries no loop, has positive degree, and alpha(u)
/// dominates both the incoming and the outgoing dimension sums.
bool is_large(const QuiverPair& pair, int u);

/// A source (no incoming arrows, loops included) whose outgoing dimension sum
/// strictly exceeds alpha(u); dually for a sink.
bool is_small_source(const QuiverPair& pair, int u);
bool is_small_sink(const QuiverPair& pair, int u);

/// Contract the large vertex u: delete it with its arrows and add one
/// composed arrow source(b) -> target(c) per incident pair (incoming b,
/// outgoing c), named d(b,c). When theta is given, the weight is transported
/// by case: theta(u) > 0 requires alpha(u) to equal the incoming sum,
/// theta(u) < 0 the outgoing sum; theta(u) = 0 restricts the weight.
/// A nonzero theta(u) with neither equality is rejected ("weight incompatible
/// with large vertex").
ReductionResult apply_tau(const QuiverPair& pair, int u,
                          const std::optional<Weight>& theta = std::nullopt);

/// Reflect the small source or sink u: reverse its arrows and replace
/// alpha(u) by (adjacent dimension sum) - alpha(u). The transported weight
/// negates at u and absorbs multiplicity * theta(u) at the neighbors.
ReductionResult apply_sigma(const QuiverPair& pair, int u,
                            const std::optional<Weight>& theta = std::nullopt);

/// Incoming / outgoing dimension sums at u (loops contribute to both).
Int incoming_dimension_sum(const QuiverPair& pair, int u);
Int outgoing_dimension_sum(const QuiverPair& pair, int u);

}  // namespace quivermod

#endif
