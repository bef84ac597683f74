#include <random>

#include "doctest.h"
#include "quivermod/forms.hpp"
#include "testutil.hpp"

using namespace quivermod;
using namespace qmtest;

namespace {

std::vector<Int> unit(int n, int v) {
  std::vector<Int> e(static_cast<std::size_t>(n), 0);
  e[static_cast<std::size_t>(v)] = 1;
  return e;
}

Quiver reversed(const Quiver& q) {
  std::vector<Quiver::Arrow> arrows;
  for (const Quiver::Arrow& a : q.arrows()) arrows.push_back({a.id, a.target, a.source});
  return Quiver(q.vertex_names(), std::move(arrows));
}

}  // namespace

TEST_CASE("ringel form on the stock examples") {
  CHECK(ringel_form(kronecker_pair(2, 1, 1).quiver, DimVector({1, 1}), DimVector({1, 1})) == 0);
  QuiverPair fig1 = fig1_pair();
  CHECK(ringel_form(fig1.quiver, fig1.alpha, fig1.alpha) == -3);
  // Diagonal unit value at a loop-free vertex.
  CHECK(ringel_form(fig1.quiver, std::span<const Int>(unit(3, 1)), std::span<const Int>(unit(3, 1))) == 1);
  CHECK_THROWS_AS(ringel_form(fig1.quiver, DimVector({1, 1}), fig1.alpha), DomainError);
}

TEST_CASE("cartan form values") {
  QuiverPair fig1 = fig1_pair();
  const int v3 = fig1.quiver.index_of("v3");
  CHECK(cartan_form(fig1.quiver, std::span<const Int>(fig1.alpha.values()),
                    std::span<const Int>(unit(3, v3))) == 1);
  CHECK(cartan_with_unit(fig1.quiver, fig1.alpha.values(), v3) == 1);

  for (Int n = 1; n <= 4; ++n) {
    QuiverPair loop = loop_pair(1, n);
    CHECK(cartan_with_unit(loop.quiver, loop.alpha.values(), 0) == 0);
  }

  QuiverPair a2 = path_pair({1, 1});
  CHECK(cartan_matrix(a2.quiver) == std::vector<std::vector<Int>>{{2, -1}, {-1, 2}});
}

TEST_CASE("degree") {
  CHECK(degree(loop_pair(0, 1).quiver, 0) == 0);
  CHECK(degree(loop_pair(1, 1).quiver, 0) == 2);
  QuiverPair fig1 = fig1_pair();
  CHECK(degree(fig1.quiver, fig1.quiver.index_of("v1")) == 3);
  CHECK_THROWS_AS(degree(fig1.quiver, 5), DomainError);
}

TEST_CASE("bilinearity and symmetry properties") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Int> entry(-5, 5);
  for (int trial = 0; trial < 60; ++trial) {
    QuiverPair pair = random_connected_pair(rng, 4, 5, 3);
    const int n = pair.quiver.vertex_count();
    auto randvec = [&] {
      std::vector<Int> v(static_cast<std::size_t>(n));
      for (Int& x : v) x = entry(rng);
      return v;
    };
    std::vector<Int> a = randvec(), b = randvec(), c = randvec();
    std::vector<Int> ab(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ab[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] + b[static_cast<std::size_t>(i)];

    CHECK(ringel_form(pair.quiver, std::span<const Int>(ab), std::span<const Int>(c)) ==
          ringel_form(pair.quiver, std::span<const Int>(a), std::span<const Int>(c)) +
              ringel_form(pair.quiver, std::span<const Int>(b), std::span<const Int>(c)));
    CHECK(cartan_form(pair.quiver, std::span<const Int>(a), std::span<const Int>(b)) ==
          ringel_form(pair.quiver, std::span<const Int>(a), std::span<const Int>(b)) +
              ringel_form(pair.quiver, std::span<const Int>(b), std::span<const Int>(a)));

    const int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
    // Cartan pairing against a unit vector, written out per arrow end.
    Int expected = 2 * a[static_cast<std::size_t>(v)];
    for (const Quiver::Arrow& ar : pair.quiver.arrows()) {
      if (ar.source == v) expected -= a[static_cast<std::size_t>(ar.target)];
      if (ar.target == v) expected -= a[static_cast<std::size_t>(ar.source)];
    }
    CHECK(cartan_with_unit(pair.quiver, a, v) == expected);
    CHECK(cartan_form(pair.quiver, std::span<const Int>(a), std::span<const Int>(unit(n, v))) == expected);

    auto matrix = cartan_matrix(pair.quiver);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        CHECK(matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
              matrix[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
    CHECK(cartan_matrix(reversed(pair.quiver)) == matrix);
    CHECK(tits_form(reversed(pair.quiver), std::span<const Int>(a)) ==
          tits_form(pair.quiver, std::span<const Int>(a)));
  }
}
