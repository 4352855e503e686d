#include <doctest.h>

#include <filesystem>

#include "oracles.hpp"

using namespace ladderlab;
using oracle::qratio;

TEST_CASE("small clasps") {
  auto P = compute_clasp(SlWeight({2}));
  CHECK(P.sequence == std::vector<int>{1, 1});
  CHECK(P.rank == 3);
  CHECK(P.matrix.trace() == RatFun(3));
  CHECK(P.matrix * P.matrix == P.matrix);
  CHECK(check_clasp(P).passed());
  auto Q = compute_clasp(SlWeight({1, 1}));
  CHECK(Q.matrix.trace() == RatFun(8));
  CHECK(check_clasp(Q).passed());
  CHECK(compute_clasp(SlWeight({0, 0})).matrix.rows() == 1);
  CHECK_THROWS_AS(compute_clasp(SlWeight({-1, 1})), Error);
}

TEST_CASE("clasps agree with the linear solve") {
  for (int n = 2; n <= 3; ++n)
    for (const SlWeight& l : dominant_weights(n, 3)) CHECK(clasp_oracle(l) == default_engine().clasp(l)->matrix);
  CHECK(clasp_oracle(SlWeight({1, 0, 1})) == default_engine().clasp(SlWeight({1, 0, 1}))->matrix);
}

TEST_CASE("Jones-Wenzl projectors") {
  EvalMatrix jw = EvalMatrix::identity(2);
  for (int m = 2; m <= 5; ++m) {
    jw = oracle::wenzl_step(jw, m - 1);
    CHECK(default_engine().clasp(SlWeight({m}))->matrix == jw);
  }
}

TEST_CASE("kappa methods agree with the tables") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& [l, mu] : kappa_domain(n, n == 4 ? 1 : 2)) {
      auto expected = oracle::paper_kappa(l, mu);
      REQUIRE(expected);
      CHECK(kappa_matrix(l, mu) == *expected);
      CHECK(kappa_conjecture(l, mu) == *expected);
      CHECK(kappa_recursive(l, mu) == *expected);
      CHECK(default_engine().kappa_vector(l, mu) == *expected);
    }
  CHECK(kappa_matrix(SlWeight({2}), GlWeight::parse("01")) == qratio(3, 2));
  CHECK(kappa_conjecture(SlWeight({1, 1, 0, 1}), GlWeight::parse("01001")) ==
        kappa_conjecture_shifted(SlWeight({1, 1, 0, 1}), GlWeight::parse("01001")));
}

TEST_CASE("kappa preconditions") {
  CHECK_THROWS_AS(kappa_matrix(SlWeight({0}), GlWeight::parse("01")), Error);
  CHECK_THROWS_AS(kappa_matrix(SlWeight({1}), GlWeight::parse("011")), Error);
  try {
    kappa_recursive(SlWeight({1, 0, 0, 0}), GlWeight::parse("01000"));
    FAIL("rank 5 should be unsupported");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedRank);
  }
}

TEST_CASE("gamma values") {
  CHECK(gamma(SlWeight({1, 1, 1}), GlWeight::parse("0101"), GlWeight::parse("0111")) == qratio(2, 1));
  CHECK(gamma(SlWeight({2, 0, 1}), GlWeight::parse("0101"), GlWeight::parse("0111")) == qratio(3, 2));
  CHECK(gamma(SlWeight({1, 0, 2}), GlWeight::parse("0101"), GlWeight::parse("1101")) == RatFun(1));
  CHECK(gamma_sigma(GlWeight::parse("0101"), 3, GlWeight::parse("0111")).value().to_string() == "1100");
  CHECK(!gamma_sigma(GlWeight::parse("0101"), 3, GlWeight::parse("1011")));
  CHECK(mu_minus(GlWeight::parse("0101")).to_string() == "0100");
  for (const auto& [l, mu] : kappa_domain(3, 2)) CHECK(check_recursion(l, mu).holds);
}

TEST_CASE("uniform decomposition of P x id") {
  for (int n = 2; n <= 3; ++n)
    for (const SlWeight& l : dominant_weights(n, 2))
      for (int a = 1; a < n; ++a)
        CHECK(oracle::uniform_decomposition_holds(l, a, [](const SlWeight& x, const GlWeight& mu) {
          return oracle::paper_kappa(x, mu).value().inverse();
        }));
}

TEST_CASE("weyl dimensions") {
  CHECK(weyl_dim_at_one(SlWeight({1, 1})) == 8);
  CHECK(weyl_dim_at_one(SlWeight({1, 0, 1})) == 15);
  CHECK(weyl_dim(SlWeight({1})) == RatFun(qint(2)));
  for (int n = 2; n <= 5; ++n)
    for (const SlWeight& l : dominant_weights(n, 3)) {
      CHECK(weyl_dim_at_one(l) == oracle::weyl_dimension_product(l));
      CHECK(weyl_dim(l).specialize(1) == oracle::weyl_dimension_product(l));
    }
}

TEST_CASE("weight enumeration") {
  auto w = dominant_weights(3, 2);
  CHECK(w.size() == 6);
  CHECK(w.front() == SlWeight::zero(3));
  for (const auto& [l, mu] : kappa_domain(4, 2)) {
    CHECK(l.level() <= 2);
    CHECK(is_dominant_sum(l, mu));
  }
}

TEST_CASE("sweeps are deterministic under parallelism") {
  auto a = conjecture_sweep(3, 2, 1, true);
  auto b = conjecture_sweep(3, 2, 3, true);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].lambda == b[i].lambda);
    CHECK(a[i].mu == b[i].mu);
    CHECK(a[i].matrix == b[i].matrix);
    CHECK(a[i].agree);
  }
}

TEST_CASE("disk cache round trip") {
  auto dir = std::filesystem::temp_directory_path() / "ladderlab-cache-test";
  std::filesystem::remove_all(dir);
  SlWeight l({1, 2});
  GlWeight mu = GlWeight::parse("001");
  RatFun k1, k2;
  {
    ClaspEngine E(dir);
    k1 = E.kappa_matrix(l, mu);
    CHECK(E.memo_size() > 0);
  }
  CHECK(!std::filesystem::is_empty(dir));
  {
    ClaspEngine E(dir);
    k2 = E.kappa_matrix(l, mu);
    CHECK(E.clasp(l)->matrix == default_engine().clasp(l)->matrix);
  }
  CHECK(k1 == k2);
  std::filesystem::remove_all(dir);
}
