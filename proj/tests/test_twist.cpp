#include <doctest.h>

#include <algorithm>

#include "pretzel/twist.hpp"

using namespace pretzel;

TEST_CASE("knot criterion") {
  CHECK(classify({3, 5, 7}).kind == Kind::Knot);
  CHECK(classify({3, 5, 7}).knot_type == KnotType::OddType);
  CHECK(classify({3, 5, 7}).positive);

  auto even = classify({2, 3, 3});
  CHECK(even.kind == Kind::Knot);
  CHECK(even.knot_type == KnotType::EvenType);
  CHECK_FALSE(even.positive);
  CHECK(even.even_entry_index == 0);

  auto link = classify({3, 3});
  CHECK(link.kind == Kind::Link);
  CHECK(link.component_count == 2);
  CHECK(link.knot_type == KnotType::NotApplicable);

  auto link2 = classify({2, 4, 3});
  CHECK(link2.kind == Kind::Link);
  CHECK(link2.component_count >= 2);

  CHECK(classify({7}).knot_type == KnotType::Trivial);
  CHECK(classify({0}).kind == Kind::Knot);
  CHECK(classify({0, 3, 3}).kind == Kind::Knot);
}

TEST_CASE("classification depends only on the parity multiset") {
  TwistVector v = {-2, 3, 1, 5};
  std::sort(v.begin(), v.end());
  Kind kind = classify(v).kind;
  do {
    CHECK(classify(v).kind == kind);
  } while (std::next_permutation(v.begin(), v.end()));
}

TEST_CASE("positivity by parameter shape") {
  CHECK(is_positive({3, 5, 7}));
  CHECK(is_positive({-2, 3, 3}));
  CHECK(is_positive({2, 3, 3, 3}));  // n even, even entry positive
  CHECK(is_positive({3, -2, 3}));    // even entry may sit anywhere
  CHECK_FALSE(is_positive({2, 3, 3}));
  CHECK_FALSE(is_positive({2, 1, 3}));
  CHECK_FALSE(is_positive({0, 3, 3}));
  CHECK_FALSE(is_positive({3, 5, -7}));
  CHECK_THROWS_AS(is_positive({3, 3}), std::invalid_argument);
}

TEST_CASE("mirror") {
  CHECK(mirror({3, 5, 7}) == TwistVector{-3, -5, -7});
  CHECK(mirror({-1, 3, 3}) == TwistVector{1, -3, -3});
  TwistVector v = {2, -3, -3, 1};
  CHECK(mirror(mirror(v)) == v);
  CHECK(classify(mirror(v)).kind == classify(v).kind);
}

TEST_CASE("cancel_unit_pair") {
  CHECK(cancel_unit_pair({-1, 1, 3, 3, 5}) == TwistVector{3, 3, 5});
  CHECK(cancel_unit_pair({-1, 1, 7}) == TwistVector{7});
  CHECK_FALSE(cancel_unit_pair({3, 5, 7}).has_value());

  TwistVector v = {1, -1, 3, 1, -1};
  auto w = cancel_unit_pair(v);
  REQUIRE(w.has_value());
  CHECK(w->size() == v.size() - 2);
  CHECK(is_knot_vector(*w) == is_knot_vector(v));
}

TEST_CASE("canonical_key sorts") {
  CHECK(canonical_key({5, 3, 7}) == TwistVector{3, 5, 7});
  CHECK(canonical_key({2, -3, -3, 1}) == TwistVector{-3, -3, 1, 2});
  CHECK(canonical_key({1}) == TwistVector{1});
}

TEST_CASE("symmetry enumeration") {
  auto sym = pretzel_symmetries({1, 2, 3});
  CHECK(sym.size() == 6);  // 3 rotations x 2 directions, all distinct
  CHECK(std::find(sym.begin(), sym.end(), TwistVector{2, 3, 1}) != sym.end());
  CHECK(std::find(sym.begin(), sym.end(), TwistVector{3, 2, 1}) != sym.end());
  CHECK(table_key({2, 3, 3}) == table_key({3, 3, 2}));
  CHECK(table_key({2, 3, 3}) == table_key({-2, -3, -3}));
}

TEST_CASE("parsing") {
  CHECK(parse_twists("-1,3,5") == TwistVector{-1, 3, 5});
  CHECK(parse_twists(" 2 ,\t-3 , -3, 1 ") == TwistVector{2, -3, -3, 1});
  CHECK(parse_twists("\xe2\x88\x92" "1,3,5") == TwistVector{-1, 3, 5});  // U+2212 minus
  CHECK(parse_twists("7") == TwistVector{7});
  CHECK_THROWS_AS(parse_twists(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_twists("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_twists("1,x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_twists("1,2,"), std::invalid_argument);
  CHECK(format_twists({-1, 3, 5}) == "-1,3,5");
}
