#include <doctest.h>

#include "oracles.hpp"

using namespace ladderlab;

TEST_CASE("rungs") {
  CHECK(rung_outputs(3, 2, 1, Rung{0, Tilt::NE, 1}) == std::pair{1, 2});
  CHECK(rung_outputs(3, 2, 1, Rung{0, Tilt::NW, 1}) == std::pair{3, 0});
  CHECK_THROWS_AS(rung_outputs(3, 0, 1, Rung{0, Tilt::NE, 1}), Error);
  CHECK(classify_rung(3, 2, 1, Rung{0, Tilt::NE, 1}) == RungClass::Neutral);
  CHECK(classify_rung(3, 2, 1, Rung{0, Tilt::NW, 1}) == RungClass::Outward);
  CHECK(classify_rung(3, 3, 0, Rung{0, Tilt::NE, 1}) == RungClass::Inward);
  CHECK(std::string(tilt_name(Tilt::NW)) == "NW");
}

TEST_CASE("ladder levels and validation") {
  Ladder L = Ladder::identity(4, {1, 3, 2});
  L.then(Rung{0, Tilt::NW, 1}).then(Rung{1, Tilt::NE, 2});
  CHECK(L.levels().size() == 3);
  CHECK(L.top() == std::vector<int>{2, 0, 4});
  CHECK(L.rung_count() == 2);
  CHECK(L.has_only_rungs());
  Ladder bad = Ladder::identity(2, {1, 1});
  bad.steps.push_back(Rung{0, Tilt::NE, 2});
  CHECK_THROWS_AS(bad.validate(), Error);
  Ladder outside = Ladder::identity(2, {1, 1});
  outside.steps.push_back(Rung{1, Tilt::NE, 1});
  CHECK_THROWS_AS(outside.top(), Error);
  CHECK(Ladder::identity(3, {1, 2}).top() == std::vector<int>{1, 2});
}

TEST_CASE("flip reverses a ladder") {
  Ladder L = Ladder::identity(4, {1, 3, 2});
  L.then(Rung{0, Tilt::NW, 1}).then(Rung{1, Tilt::NE, 2});
  Ladder F = flip(L);
  CHECK(F.bottom == L.top());
  CHECK(F.top() == L.bottom);
  CHECK(flip(F) == L);
}

TEST_CASE("neutral sort") {
  Ladder L = neutral_sort(4, {3, 1, 2}, {1, 2, 3});
  CHECK(L.top() == std::vector<int>{1, 2, 3});
  for (const auto& lv : L.levels()) {
    auto s = lv;
    std::sort(s.begin(), s.end());
    CHECK(s == std::vector<int>{1, 2, 3});
  }
  CHECK_THROWS_AS(neutral_sort(4, {1, 2}, {1, 3}), Error);
}

TEST_CASE("tier and light ladders") {
  for (int n = 2; n <= 4; ++n)
    for (const SlWeight& l : dominant_weights(n, 2))
      for (int a = 1; a < n; ++a)
        for (const GlWeight& mu : omega(n, a)) {
          if (!is_dominant_sum(l, mu)) continue;
          Ladder T = tier_ladder(l, a, mu);
          auto bottom = canonical_sequence(l);
          bottom.push_back(a);
          CHECK(T.bottom == bottom);
          CHECK(T.top() == canonical_sequence(l + mu));
        }
  CHECK_THROWS_AS(tier_ladder(SlWeight({0, 1}), 1, GlWeight::parse("010")), Error);
  for (const Path& p : enumerate_paths(3, {1, 2, 2, 1})) {
    Ladder L = light_ladder(p);
    CHECK(L.bottom == p.word);
    CHECK(L.top() == canonical_sequence(p.endpoint()));
  }
  auto paths = enumerate_paths(3, {1, 2});
  CHECK_THROWS_AS(double_ladder(paths.front(), paths.back()), Error);
  CHECK(double_ladder(paths.back(), paths.back()).top() == std::vector<int>{1, 2});
}

TEST_CASE("elementary ladders and identity padding") {
  Ladder E = elementary_ladder(GlWeight::parse("0101"));
  CHECK(E.bottom == std::vector<int>{1, 3, 2});
  CHECK_THROWS_AS(elementary_ladder(GlWeight::parse("0000")), Error);
  Ladder W = with_identity(E, {2}, {1});
  CHECK(W.bottom == std::vector<int>{2, 1, 3, 2, 1});
  CHECK(strip_labels(3, {0, 1, 3}).top() == std::vector<int>{1});
}
