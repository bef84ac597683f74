#ifndef QUIVERMOD_TEST_ORACLE_HPP
#define QUIVERMOD_TEST_ORACLE_HPP

#include <cstdint>

#include "quivermod/core.hpp"

namespace qmtest {

// Independent oracle for the generic-embedding recursion, used only in tests.
// It samples random representation data over a large prime field and decides
// by an exact modular rank condition whether the projection from the
// incidence variety {(representation, sub-flag)} onto the representation
// space is dominant: with beta placed block-upper-triangularly inside alpha,
// the linear map
//     (sigma_v) -> (sigma_{target a} B_a - C_a sigma_{source a})_a
// is surjective at a generic point iff every representation has a
// beta-dimensional subrepresentation. Majority verdict over the samples.
// Requires |alpha| <= 6 (threshold exceeded otherwise).
bool brute_force_embeds(const quivermod::Quiver& q, const quivermod::DimVector& beta,
                        const quivermod::DimVector& alpha, std::uint64_t seed = 20240901);

}  // namespace qmtest

#endif
