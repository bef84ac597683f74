#include <random>

#include "doctest.h"
#include "quivermod/canonical.hpp"
#include "quivermod/forms.hpp"
#include "quivermod/reductions.hpp"
#include "testutil.hpp"

using namespace quivermod;
using namespace qmtest;

TEST_CASE("large vertices") {
  QuiverPair path = path_pair({1, 1, 1});
  CHECK(is_large(path, 1));
  QuiverPair fig1 = fig1_pair();
  for (int v = 0; v < 3; ++v) CHECK_FALSE(is_large(fig1, v));
  CHECK(incoming_dimension_sum(fig1, fig1.quiver.index_of("v3")) == 4);
  CHECK(outgoing_dimension_sum(fig1, fig1.quiver.index_of("v3")) == 1);
  CHECK_FALSE(is_large(loop_pair(1, 5), 0));
  CHECK_THROWS_AS(is_large(path, 9), DomainError);
}

TEST_CASE("small sources and sinks") {
  QuiverPair fig1 = fig1_pair();
  CHECK(is_small_source(fig1, fig1.quiver.index_of("v1")));
  CHECK_FALSE(is_small_sink(fig1, fig1.quiver.index_of("v1")));
  CHECK(is_small_sink(fig1, fig1.quiver.index_of("v2")));
  CHECK_FALSE(is_small_source(fig1, fig1.quiver.index_of("v3")));
  CHECK_FALSE(is_small_sink(fig1, fig1.quiver.index_of("v3")));
  CHECK_FALSE(is_small_source(kronecker_pair(2, 3, 1), 0));
  CHECK_FALSE(is_small_source(loop_pair(1, 1), 0));
}

TEST_CASE("tau on a path") {
  QuiverPair path = path_pair({1, 1, 1});
  SUBCASE("zero weight at the vertex restricts") {
    ReductionResult r = apply_tau(path, 1, Weight({1, 0, -1}));
    CHECK(r.pair.quiver.vertex_names() == std::vector<std::string>{"v1", "v3"});
    REQUIRE(r.pair.quiver.arrow_count() == 1);
    CHECK(r.pair.quiver.arrows()[0].id == "d(a1,a2)");
    CHECK(r.pair.alpha.values() == std::vector<Int>{1, 1});
    CHECK(r.weight->values() == std::vector<Int>{1, -1});
    CHECK(r.step.tau_case == 'c');
    CHECK_FALSE(r.degenerate_weight);
  }
  SUBCASE("positive weight needs the incoming sum and can degenerate") {
    ReductionResult r = apply_tau(path, 1, Weight({-1, 1, 0}));
    CHECK(r.step.tau_case == 'a');
    CHECK(r.weight->values() == std::vector<Int>{0, 0});
    CHECK(r.degenerate_weight);
  }
  SUBCASE("incompatible weight is rejected") {
    QuiverPair wide = path_pair({1, 2, 1});
    CHECK(is_large(wide, 1));
    CHECK_THROWS_WITH_AS(apply_tau(wide, 1, Weight({0, 1, 0})),
                         "apply_tau: weight incompatible with large vertex v2", PreconditionError);
    CHECK_THROWS_WITH_AS(apply_tau(wide, 1, Weight({0, -1, 0})),
                         "apply_tau: weight incompatible with large vertex v2", PreconditionError);
    // Without a weight the contraction is unconditional.
    CHECK(apply_tau(wide, 1).pair.quiver.arrow_count() == 1);
  }
  SUBCASE("not-large vertices are rejected") {
    CHECK_THROWS_AS(apply_tau(fig1_pair(), 2), PreconditionError);
  }
}

TEST_CASE("tau on a large source deletes it") {
  QuiverPair pair = path_pair({2, 1});
  REQUIRE(is_large(pair, 0));
  ReductionResult r = apply_tau(pair, 0);
  CHECK(r.pair.quiver.vertex_names() == std::vector<std::string>{"v2"});
  CHECK(r.pair.quiver.arrow_count() == 0);
  CHECK_FALSE(r.step.tau_case.has_value());
  CHECK_FALSE(r.weight.has_value());
}

TEST_CASE("tau arrow count follows the pairing rule") {
  std::mt19937_64 rng(41);
  int seen = 0;
  while (seen < 60) {
    QuiverPair pair = random_connected_pair(rng, 4, 5, 4);
    for (int u = 0; u < pair.quiver.vertex_count() && seen < 60; ++u) {
      if (!is_large(pair, u)) continue;
      const Int k = pair.quiver.in_arrow_count(u);
      const Int l = pair.quiver.out_arrow_count(u);
      ReductionResult r = apply_tau(pair, u);
      CHECK(r.pair.quiver.arrow_count() == pair.quiver.arrow_count() - k - l + k * l);
      CHECK(r.pair.quiver.vertex_count() == pair.quiver.vertex_count() - 1);
      ++seen;
    }
  }
}

TEST_CASE("sigma on the running example") {
  QuiverPair fig1 = fig1_pair();
  const int v1 = fig1.quiver.index_of("v1");
  ReductionResult r = apply_sigma(fig1, v1, fig1_theta());
  CHECK(r.pair.alpha.values() == std::vector<Int>{5, 1, 3});
  CHECK(r.step.kind == ReductionStep::Kind::SigmaSource);
  for (const Quiver::Arrow& a : r.pair.quiver.arrows())
    if (a.id != "a4") CHECK(a.target == v1);
  // Applying the reflection twice restores the pair and the weight.
  ReductionResult back = apply_sigma(r.pair, v1, r.weight);
  CHECK(back.pair.alpha == fig1.alpha);
  CHECK(*back.weight == fig1_theta());
  CHECK(canonical_key(back.pair) == canonical_key(fig1));
  CHECK_THROWS_AS(apply_sigma(fig1, fig1.quiver.index_of("v3")), PreconditionError);
}

TEST_CASE("the four-vertex showcase reduces in two moves") {
  QuiverPair first = defn23_pair();
  const int u = first.quiver.index_of("u");
  ReductionResult second = apply_sigma(first, u);
  CHECK(second.pair.alpha[u] == 3);
  CHECK(second.pair.alpha.total() == 13);

  const int w = second.pair.quiver.index_of("w");
  REQUIRE(is_large(second.pair, w));
  ReductionResult third = apply_tau(second.pair, w);
  CHECK(third.pair.quiver.vertex_count() == 3);
  CHECK(third.pair.alpha.values() == std::vector<Int>{1, 3, 4});
  // Composed arrows t->r and u->r plus the three loops.
  CHECK(third.pair.quiver.arrow_count() == 5);
}

TEST_CASE("sigma involution and pairing conservation on random instances") {
  std::mt19937_64 rng(43);
  int conserved = 0, involutions = 0;
  while (conserved < 200) {
    QuiverPair pair = random_connected_pair(rng, 4, 4, 4);
    Weight theta = random_orthogonal_weight(rng, pair, 6);
    REQUIRE(pairing(theta, pair.alpha) == 0);
    for (const Move& move : admissible_moves(pair, theta)) {
      ReductionResult r = move.tau ? apply_tau(pair, move.vertex, theta)
                                   : apply_sigma(pair, move.vertex, theta);
      CHECK(pairing(*r.weight, r.pair.alpha) == 0);
      ++conserved;
      if (!move.tau) {
        ReductionResult back = apply_sigma(r.pair, move.vertex, r.weight);
        CHECK(back.pair.alpha == pair.alpha);
        CHECK(*back.weight == theta);
        CHECK(back.pair.quiver.multiplicity_matrix() == pair.quiver.multiplicity_matrix());
        ++involutions;
      }
    }
  }
  CHECK(involutions > 50);
}

TEST_CASE("reductions commute with canonicalization") {
  std::mt19937_64 rng(47);
  int seen = 0;
  while (seen < 60) {
    QuiverPair pair = random_connected_pair(rng, 4, 4, 3);
    auto moves = admissible_moves(pair);
    if (moves.empty()) continue;
    const Move move = moves[static_cast<std::size_t>(
        std::uniform_int_distribution<int>(0, static_cast<int>(moves.size()) - 1)(rng))];
    auto perm = random_permutation(rng, pair.quiver.vertex_count());
    QuiverPair relabeled = relabel(pair, perm, "y");
    int mapped = 0;
    for (int p = 0; p < pair.quiver.vertex_count(); ++p)
      if (perm[static_cast<std::size_t>(p)] == move.vertex) mapped = p;
    ReductionResult a = move.tau ? apply_tau(pair, move.vertex) : apply_sigma(pair, move.vertex);
    ReductionResult b = move.tau ? apply_tau(relabeled, mapped) : apply_sigma(relabeled, mapped);
    CHECK(canonical_key(a.pair) == canonical_key(b.pair));
    ++seen;
  }
}
