#include <doctest.h>

#include "oracles.hpp"

using namespace ladderlab;

TEST_CASE("subsets and tensor bases") {
  CHECK(subsets(4, 2).size() == 6);
  CHECK(subset_index(4, subsets(4, 2)[3]) == 3);
  CHECK(ell(0b001u, 0b110u) == 2);
  CHECK(ell(0b110u, 0b001u) == 0);
  TensorBasis B(3, {1, 2});
  CHECK(B.size() == 9);
  for (Index i = 0; i < B.size(); ++i) CHECK(B.index(B.masks(i)) == i);
  CHECK(B.masks(B.top_index()) == std::vector<unsigned>{0b001u, 0b011u});
  CHECK(tensor_dimension(4, {2, 2, 2}) == 216);
}

TEST_CASE("merge then split is the bigon scalar") {
  for (int n = 2; n <= 5; ++n)
    for (int a = 0; a <= n; ++a)
      for (int b = 0; a + b <= n; ++b) {
        auto M = merge_matrix(n, a, b) * split_matrix(n, a, b);
        auto s = scalar_of(M);
        REQUIRE(s);
        CHECK(RatFun(*s) == oracle::qbinom_product(a + b, a));
      }
}

TEST_CASE("identity ladder evaluates to the identity") {
  auto M = eval_ladder(Ladder::identity(3, {1, 2, 1}));
  CHECK(M == LaurentMatrix::identity(27));
  CHECK(eval_ladder(Ladder::identity(3, {})).rows() == 1);
}

TEST_CASE("relations hold exactly") {
  for (int n = 2; n <= 3; ++n)
    for (const auto& name : relation_names())
      for (const auto& c : relation_sweep(name, n)) CHECK_MESSAGE(c.passed, name, " ", int_list_to_string(c.labels), " ", c.detail);
  CHECK(relation_arity("r3") == 6);
  CHECK_THROWS_AS(check_relation("nope", {}, 3), Error);
  CHECK_THROWS_AS(check_relation("bigon", {1}, 3), Error);
}

TEST_CASE("circle equals qbinom(n,k)") {
  for (int n = 2; n <= 5; ++n)
    for (int k = 0; k <= n; ++k) {
      auto c = check_relation("circle", {k}, n);
      CHECK(c.passed);
      Ladder C = Ladder::identity(n, {0, n}).then(Rung{0, Tilt::NW, k}).then(Rung{0, Tilt::NE, k});
      auto s = scalar_of(eval_ladder(C));
      REQUIRE(s);
      CHECK(RatFun(*s) == oracle::qbinom_product(n, k));
    }
}

TEST_CASE("apply and compose agree with matrix products") {
  Ladder L = Ladder::identity(3, {1, 1, 2}).then(Rung{0, Tilt::NE, 1}).then(Rung{1, Tilt::NW, 1});
  EvalMatrix E = to_ratfun(eval_ladder(L));
  EvalMatrix X = to_ratfun(eval_ladder(flip(L)));
  CHECK(apply_ladder(L, X) == E * X);
  CHECK(compose_ladder(X, L) == X * E);
  CHECK(specialize(E, 1) == specialize(eval_ladder(L), 1));
}

TEST_CASE("triangularity") {
  for (int n = 2; n <= 4; ++n) {
    auto r = triangularity_report(n, {1, n - 1, 1});
    CHECK(r.passed());
    CHECK(r.checks > 0);
  }
}

TEST_CASE("hom ranks") {
  auto h = hom_rank(3, {1, 2, 1}, {1, 1, 2});
  CHECK(h.rank == oracle::brute_force_path_pairs(3, {1, 2, 1}, {1, 1, 2}));
  CHECK(h.conclusive);
  CHECK(h.ranks_per_point.size() >= 3);
  CHECK(hom_rank(3, {1}, {2}).rank == 0);
  CHECK(rational_rank({{{0, Rational(1)}}, {{0, Rational(2)}}}) == 1);
}
