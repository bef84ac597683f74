#ifndef QUIVERMOD_TESTUTIL_HPP
#define QUIVERMOD_TESTUTIL_HPP

#include <random>

#include "quivermod/core.hpp"

namespace qmtest {

using quivermod::DimVector;
using quivermod::Int;
using quivermod::Quiver;
using quivermod::QuiverPair;
using quivermod::Weight;

// The running examples: a three-vertex wild pair with a stable dimension
// vector outside the fundamental set, the four-vertex reduction showcase,
// multi-arrow Kronecker quivers, paths, and the decorated four-leaf star.
QuiverPair fig1_pair();
Weight fig1_theta();

QuiverPair defn23_pair();

QuiverPair kronecker_pair(int arrows, Int a, Int b);  // v1 =(arrows)=> v2
QuiverPair path_pair(const std::vector<Int>& alpha);  // v1 -> v2 -> ... -> vn
QuiverPair loop_pair(int loops, Int n);               // one vertex, `loops` loops
QuiverPair cycle_pair(int n, Int value);              // oriented n-cycle, constant alpha
QuiverPair dtilde4plus_pair();                        // 4-leaf star with one doubled leaf edge

// Relabeled copy: vertices renamed and reordered by perm (new position p holds
// old vertex perm[p]); arrow ids refreshed and the arrow list rotated.
QuiverPair relabel(const QuiverPair& pair, const std::vector<int>& perm,
                   const std::string& name_prefix);

std::vector<int> random_permutation(std::mt19937_64& rng, int n);

// Connected random pair: a spanning tree with random orientations plus a few
// extra arrows/loops; entries in [1, max_entry].
QuiverPair random_connected_pair(std::mt19937_64& rng, int max_vertices, int max_extra_arrows,
                                 Int max_entry);

// Integer weight with theta . alpha == 0, built from +alpha(j)/-alpha(i) bumps.
Weight random_orthogonal_weight(std::mt19937_64& rng, const QuiverPair& pair, int bumps);

struct Move {
  bool tau = false;
  int vertex = 0;
};

// All admissible moves; with a weight, contractions are kept only when the
// transport cases apply (zero weight at the vertex or the matching sum).
std::vector<Move> admissible_moves(const QuiverPair& pair,
                                   const std::optional<Weight>& theta = std::nullopt);

}  // namespace qmtest

#endif
