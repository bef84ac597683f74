#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "quivermod/forms.hpp"
#include "quivermod/stability.hpp"
#include "testutil.hpp"

using namespace quivermod;
using namespace qmtest;

TEST_CASE("generic embedding base cases and the double arrow") {
  QuiverPair k2 = kronecker_pair(2, 1, 1);
  CHECK(generically_embeds(k2.quiver, DimVector({0, 0}), DimVector({1, 1})));
  CHECK(generically_embeds(k2.quiver, DimVector({1, 1}), DimVector({1, 1})));
  CHECK(generically_embeds(k2.quiver, DimVector({0, 1}), DimVector({1, 1})));
  CHECK_FALSE(generically_embeds(k2.quiver, DimVector({1, 0}), DimVector({1, 1})));
  CHECK(generically_embeds(k2.quiver, DimVector({1, 1}), DimVector({2, 2})));
  CHECK_THROWS_AS(generically_embeds(k2.quiver, DimVector({2, 0}), DimVector({1, 1})), DomainError);
}

TEST_CASE("memoized and unmemoized runs agree") {
  std::mt19937_64 rng(53);
  EmbedCache cache;
  for (int trial = 0; trial < 40; ++trial) {
    QuiverPair pair = random_connected_pair(rng, 3, 3, 3);
    const int n = pair.quiver.vertex_count();
    std::vector<Int> beta(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
      beta[static_cast<std::size_t>(v)] = std::uniform_int_distribution<Int>(0, pair.alpha[v])(rng);
    const bool cached = generically_embeds(pair.quiver, DimVector(beta), pair.alpha, &cache);
    const bool fresh = generically_embeds(pair.quiver, DimVector(beta), pair.alpha);
    CHECK(cached == fresh);
  }
  CHECK(cache.size() > 0);
}

TEST_CASE("stability verdicts on the stock examples") {
  SUBCASE("three-vertex wild pair is stable") {
    StabilityVerdict v = stability_verdict(fig1_pair(), fig1_theta());
    CHECK(v.tag == StabilityVerdict::Tag::Stable);
    CHECK_FALSE(v.witness.has_value());
    CHECK(moduli_dimension(fig1_pair(), fig1_theta()) == 4);
  }
  SUBCASE("double arrow ladder") {
    CHECK(stability_verdict(kronecker_pair(2, 1, 1), Weight({-1, 1})).tag ==
          StabilityVerdict::Tag::Stable);
    for (Int n = 2; n <= 4; ++n) {
      StabilityVerdict v = stability_verdict(kronecker_pair(2, n, n), Weight({-1, 1}));
      CHECK(v.tag == StabilityVerdict::Tag::SemistableNotStable);
      REQUIRE(v.witness.has_value());
      CHECK(v.witness->values() == std::vector<Int>{1, 1});
    }
  }
  SUBCASE("nonzero pairing is never semistable") {
    CHECK(stability_verdict(kronecker_pair(2, 1, 1), Weight({1, 1})).tag ==
          StabilityVerdict::Tag::NotSemistable);
  }
  SUBCASE("negative pairing witness is the first violator") {
    // Reversed weight on the double arrow: the sink subrepresentation drops it.
    StabilityVerdict v = stability_verdict(kronecker_pair(2, 1, 1), Weight({1, -1}));
    CHECK(v.tag == StabilityVerdict::Tag::NotSemistable);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->values() == std::vector<Int>{0, 1});
  }
  SUBCASE("moduli dimensions") {
    CHECK(moduli_dimension(kronecker_pair(3, 1, 1), Weight({-1, 1})) == 2);
    CHECK(moduli_dimension(kronecker_pair(2, 1, 1), Weight({-1, 1})) == 1);
    CHECK_THROWS_AS(moduli_dimension(kronecker_pair(2, 2, 2), Weight({-1, 1})), PreconditionError);
  }
}

TEST_CASE("verdicts are invariant under scaling the weight") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 40; ++trial) {
    QuiverPair pair = random_connected_pair(rng, 3, 3, 3);
    Weight theta = random_orthogonal_weight(rng, pair, 5);
    std::vector<Int> tripled = theta.values();
    for (Int& x : tripled) x *= 3;
    StabilityVerdict a = stability_verdict(pair, theta);
    StabilityVerdict b = stability_verdict(pair, Weight(tripled));
    CHECK(a.tag == b.tag);
    CHECK(a.witness == b.witness);
  }
}

TEST_CASE("stable verdicts leave no null embedding witness") {
  std::mt19937_64 rng(61);
  int stables = 0;
  for (int trial = 0; trial < 600 && stables < 25; ++trial) {
    QuiverPair pair = random_connected_pair(rng, 3, 3, 2);
    Weight theta = random_orthogonal_weight(rng, pair, 5);
    if (stability_verdict(pair, theta).tag != StabilityVerdict::Tag::Stable) continue;
    ++stables;
    const int n = pair.quiver.vertex_count();
    std::vector<Int> beta(static_cast<std::size_t>(n), 0);
    for (;;) {
      int at = 0;
      while (at < n && beta[static_cast<std::size_t>(at)] == pair.alpha[at]) {
        beta[static_cast<std::size_t>(at)] = 0;
        ++at;
      }
      if (at == n) break;
      ++beta[static_cast<std::size_t>(at)];
      bool proper = DimVector(beta) != pair.alpha;
      if (!proper) continue;
      Int value = 0;
      for (int v = 0; v < n; ++v) value += theta[v] * beta[static_cast<std::size_t>(v)];
      if (value <= 0) CHECK_FALSE(generically_embeds(pair.quiver, DimVector(beta), pair.alpha));
    }
  }
  CHECK(stables >= 10);
}

TEST_CASE("the guard refuses oversized dimension vectors") {
  QuiverPair big = kronecker_pair(2, 100000, 100000);
  CHECK(subvector_count(big.alpha) > kStabilityGuard);
  CHECK_THROWS_AS(stability_verdict(big, Weight({-1, 1})), PreconditionError);
}

TEST_CASE("rank oracle agrees on the double arrow up to (2,2)") {
  QuiverPair k2 = kronecker_pair(2, 2, 2);
  for (Int b1 = 0; b1 <= 2; ++b1)
    for (Int b2 = 0; b2 <= 2; ++b2) {
      DimVector beta({b1, b2});
      CHECK(brute_force_embeds(k2.quiver, beta, k2.alpha) ==
            generically_embeds(k2.quiver, beta, k2.alpha));
    }
  CHECK_THROWS_AS(brute_force_embeds(k2.quiver, DimVector({1, 1}), DimVector({5, 5})),
                  PreconditionError);
}
