#include <doctest.h>

#include "oracles.hpp"

using namespace ladderlab;

TEST_CASE("fundamental weights") {
  CHECK(top_weight(4, 2).to_string() == "1100");
  CHECK(fundamental(4, 2).coords == std::vector<int>{0, 1, 0});
  CHECK(fundamental(4, 0) == SlWeight::zero(4));
  CHECK(fundamental(4, 4) == SlWeight::zero(4));
  auto w = omega(3, 1);
  REQUIRE(w.size() == 3);
  CHECK(w[0].to_string() == "100");
  CHECK(w[2].to_string() == "001");
  CHECK(sl_coords(GlWeight::parse("0101")).coords == std::vector<int>{-1, 1, -1});
  for (int n = 2; n <= 6; ++n)
    for (int a = 0; a <= n; ++a) CHECK(static_cast<long>(omega(n, a).size()) == qbinom(n, a).evaluate(1));
}

TEST_CASE("weight parsing and arithmetic") {
  SlWeight l = SlWeight::parse("1,0,2");
  CHECK(l.n() == 4);
  CHECK(l.level() == 3);
  CHECK(l[3] == 2);
  CHECK(l.to_string() == "1,0,2");
  CHECK(l.is_dominant());
  CHECK(!SlWeight::parse("1,-1").is_dominant());
  CHECK(GlWeight::parse("0110").mask() == 0b0110u);
  CHECK(GlWeight::from_mask(4, 0b0011u).to_string() == "1100");
  CHECK_THROWS_AS(GlWeight::parse("012"), Error);
  CHECK_THROWS_AS(SlWeight::parse(""), Error);
  CHECK(is_dominant_sum(SlWeight({1, 0}), GlWeight::parse("010")));
  CHECK(!is_dominant_sum(SlWeight({0, 1}), GlWeight::parse("010")));
  CHECK(dominates(SlWeight({2, 0}), SlWeight({0, 1})));
  CHECK(!dominates(SlWeight({0, 1}), SlWeight({2, 0})));
}

TEST_CASE("inversion sets count zeros before ones") {
  for (int n = 2; n <= 6; ++n)
    for (int a = 1; a < n; ++a)
      for (const GlWeight& mu : omega(n, a)) {
        std::size_t pairs = 0;
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) pairs += mu.bits[static_cast<std::size_t>(i)] == 0 && mu.bits[static_cast<std::size_t>(j)] == 1;
        CHECK(inversion_set(mu).size() == pairs);
      }
  CHECK(pairing_A(SlWeight({1, 2}), PositiveRoot{1, 3}) == 5);
  CHECK(positive_roots(4).size() == 6);
}

TEST_CASE("elementary data") {
  ElementaryData d = elementary_data(GlWeight::parse("0101"));
  CHECK(d.k == 2);
  CHECK(d.x == std::vector<int>{1, 3});
  CHECK(elementary_data(GlWeight::parse("1100")).k == 0);
  for (int n = 2; n <= 6; ++n)
    for (int a = 1; a <= n; ++a)
      for (const GlWeight& mu : omega(n, a)) {
        ElementaryData e = elementary_data(mu);
        CHECK(weight_from_elementary(n, e.y, e.x) == mu);
        CHECK(e.y.size() == e.x.size() + 1);
      }
}

TEST_CASE("paths") {
  auto p = enumerate_paths(2, {1, 1, 1, 1, 1, 1}, SlWeight({0}));
  CHECK(p.size() == 5);
  CHECK(enumerate_paths(3, {1, 1, 1}).size() == 4);
  Path f = full_path(3, {1, 2, 1});
  CHECK(f.is_full());
  CHECK(f.endpoint() == SlWeight({2, 1}));
  for (const Path& e : enumerate_paths(3, {1, 2, 1})) CHECK(path_dominates(f, e));
  CHECK_THROWS_AS(make_path(2, {1}, {GlWeight::parse("01")}), Error);
  for (int n = 2; n <= 4; ++n)
    for (const auto& w : std::vector<std::vector<int>>{{1, 1}, {1, n - 1, 1}, {n - 1, 1, 1, 1}})
      for (const auto& y : std::vector<std::vector<int>>{{}, {1}, {1, 1, n - 1}, {n - 1, n - 1}})
        CHECK(path_pair_count(n, w, y) == oracle::brute_force_path_pairs(n, w, y));
}

TEST_CASE("canonical sequences") {
  CHECK(canonical_sequence(SlWeight({2, 0, 1})) == std::vector<int>{1, 1, 3});
  CHECK(word_weight(4, {3, 1, 1}) == SlWeight({2, 0, 1}));
  CHECK(canonical_sequence(SlWeight::zero(3)).empty());
  CHECK(parse_int_list("1, 2,3") == std::vector<int>{1, 2, 3});
  CHECK(int_list_to_string({1, 2}) == "1,2");
  CHECK_THROWS_AS(parse_int_list("1,x"), Error);
}
