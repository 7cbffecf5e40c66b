#include "doctest.h"

#include <algorithm>
#include <vector>

#include "corpus.hpp"
#include "space.hpp"

using namespace ahcert;

TEST_CASE("dyadic points reduce and order like their values") {
  Point half = Point::dyadic(1, 1);
  Point half2 = Point::dyadic(4, 3);  // 4/8
  CHECK(half == half2);
  CHECK(Point::dyadic(1, 2) < half);
  CHECK(Point::dyadic(3, 2) > half);
  CHECK(Point::min_of(SpaceKind::interval) < half);
  CHECK(half < Point::max_of(SpaceKind::interval));
  CHECK_THROWS_AS(Point::dyadic(5, 2), std::invalid_argument);   // above 1
  CHECK_THROWS_AS(Point::dyadic(-1, 2), std::invalid_argument);  // below 0
}

TEST_CASE("ternary points normalize tail-adjacent digits") {
  // digits {1} with tail from 2 is all twos, i.e. the point 1
  Point p = Point::ternary({1}, 2);
  CHECK(p == Point::max_of(SpaceKind::cantor));
  // 1/3 = tail from position 2
  Point third = Point::ternary({}, 2);
  Point two_thirds = Point::ternary({1});
  CHECK(third < two_thirds);
  CHECK(third.value() == Rat(1, 3));
  CHECK(two_thirds.value() == Rat(2, 3));
  CHECK(Point::ternary({1, 2}).value() == Rat(8, 9));
}

TEST_CASE("ternary total order agrees with exact values on a corpus") {
  Rng rng(7);
  std::vector<Point> pts;
  for (int i = 0; i < 300; ++i) pts.push_back(random_point(SpaceKind::cantor, rng, 8, true));
  for (std::size_t i = 0; i < pts.size(); i += 3)
    for (std::size_t j = 0; j < pts.size(); j += 5) {
      int by_repr = Point::compare(pts[i], pts[j]);
      Rat vi = pts[i].value(), vj = pts[j].value();
      int by_value = vi < vj ? -1 : vi > vj ? 1 : 0;
      REQUIRE(by_repr == by_value);
    }
}

TEST_CASE("mixed-space comparison is rejected") {
  CHECK_THROWS_AS(Point::compare(Point::dyadic(1, 1), Point::ternary({1})),
                  std::invalid_argument);
}

TEST_CASE("chi is max, idempotent, and composes by maxima") {
  Point half = Point::dyadic(1, 1);
  Point quarter = Point::dyadic(1, 2);
  CHECK(chi_apply(half, quarter) == half);  // chi_{1/2}(1/4) = 1/2

  Rng rng(3);
  Point tmin = Point::min_of(SpaceKind::interval);
  for (int i = 0; i < 200; ++i) {
    Point t = random_point(SpaceKind::interval, rng, 6, true);
    Point s = random_point(SpaceKind::interval, rng, 6, true);
    Point u = random_point(SpaceKind::interval, rng, 6, true);
    CHECK(chi_apply(tmin, t) == t);                        // chi at min T is the identity
    CHECK(chi_apply(s, chi_apply(s, t)) == chi_apply(s, t));  // idempotent
    CHECK(chi_apply(s, chi_apply(u, t)) == chi_apply(point_max(s, u), t));
  }
  Point third = Point::ternary({}, 2);
  Point x = Point::ternary({2});
  CHECK(chi_apply(Point::ternary({1}), chi_apply(third, x)) ==
        chi_apply(Point::ternary({1}), x));
}

TEST_CASE("canonical dyadic sequence enumerates nested mesh blocks") {
  auto seq = DenseSequence::canonical(SpaceKind::interval);
  CHECK(seq.at(1) == Point::dyadic(1, 1));
  CHECK(seq.at(2) == Point::dyadic(1, 2));
  CHECK(seq.at(3) == Point::dyadic(1, 1));
  CHECK(seq.at(4) == Point::dyadic(3, 2));
  CHECK(seq.at(5) == Point::dyadic(1, 3));
  CHECK(seq.at(11) == Point::dyadic(7, 3));
  CHECK(seq.at(12) == Point::dyadic(1, 4));
}

TEST_CASE("canonical ternary sequence mirrors the dyadic one through lambda") {
  auto ternary = DenseSequence::canonical(SpaceKind::cantor);
  auto dyadic = DenseSequence::canonical(SpaceKind::interval);
  CHECK(ternary.at(1) == Point::ternary({1}));  // 2/3
  for (std::uint64_t n = 1; n <= 200; ++n)
    CHECK(lambda_map(ternary.at(n)) == dyadic.at(n));
}

TEST_CASE("explicit sequences cycle") {
  auto seq = DenseSequence::explicit_list({Point::dyadic(1, 1), Point::dyadic(1, 2)});
  CHECK(seq.at(2) == Point::dyadic(1, 2));
  CHECK(seq.at(3) == Point::dyadic(1, 1));
  CHECK(seq.at(4) == Point::dyadic(1, 2));
}

TEST_CASE("every canonical tail covers every finite mesh") {
  for (SpaceKind space : {SpaceKind::interval, SpaceKind::cantor}) {
    auto seq = DenseSequence::canonical(space);
    for (std::uint64_t start : {std::uint64_t{1}, std::uint64_t{9}, std::uint64_t{40}}) {
      auto ev = tail_mesh_coverage(seq, start, 4, 4000);
      CHECK(ev.covered);
    }
  }
}

TEST_CASE("lambda on digit sets, including tails") {
  CHECK(lambda_map(Point::ternary({1})) == Point::dyadic(1, 1));       // 2/3 -> 1/2
  CHECK(lambda_map(Point::ternary({})) == Point::dyadic(0, 0));        // 0 -> 0
  CHECK(lambda_map(Point::ternary({1, 2})) == Point::dyadic(3, 2));    // 8/9 -> 3/4
  CHECK(lambda_map(Point::ternary({}, 1)) == Point::dyadic(1, 0));     // 1 -> 1
  CHECK(lambda_map(Point::ternary({}, 2)) == Point::dyadic(1, 1));     // 1/3 -> 1/2
}

TEST_CASE("lambda is monotone on a large ternary corpus") {
  Rng rng(11);
  std::vector<Point> pts;
  for (int i = 0; i < 1100; ++i) pts.push_back(random_point(SpaceKind::cantor, rng, 10, true));
  std::sort(pts.begin(), pts.end());
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    REQUIRE(lambda_map(pts[i]) <= lambda_map(pts[i + 1]));
}

TEST_CASE("lambda_min_preimage is the least preimage and a section") {
  CHECK(lambda_min_preimage(Point::dyadic(1, 1)) == Point::ternary({}, 2));  // 1/2 -> 1/3
  CHECK(lambda_min_preimage(Point::dyadic(0, 0)) == Point::ternary({}));
  CHECK(lambda_min_preimage(Point::dyadic(1, 0)) == Point::ternary({}, 1));
  for (std::int64_t p = 0; p <= (1 << 12); ++p) {
    Point d = Point::dyadic(p, 12);
    REQUIRE(lambda_map(lambda_min_preimage(d)) == d);
  }
  // least: the finite representation maps to the same value but is larger
  CHECK(lambda_map(Point::ternary({1})) == Point::dyadic(1, 1));
  CHECK(lambda_min_preimage(Point::dyadic(1, 1)) < Point::ternary({1}));
}

TEST_CASE("lambda intertwines the threshold maps") {
  Rng rng(13);
  for (int i = 0; i < 300; ++i) {
    Point x = random_point(SpaceKind::cantor, rng, 8, true);
    Point t = random_point(SpaceKind::cantor, rng, 8);
    CHECK(lambda_map(chi_apply(t, x)) == chi_apply(lambda_map(t), lambda_map(x)));
  }
}

TEST_CASE("cantor gap utilities") {
  Point third = Point::ternary({}, 2);
  CHECK(cantor_gap_right(third) == Point::ternary({1}));
  CHECK(cantor_pred(Point::ternary({1})) == third);
  CHECK(!has_point_between(third, Point::ternary({1})));
  CHECK(has_point_between(Point::ternary({}), third));
  CHECK(has_point_between(Point::dyadic(1, 2), Point::dyadic(1, 1)));
}

TEST_CASE("point serialization round-trips") {
  Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    Point p = random_point(i % 2 ? SpaceKind::interval : SpaceKind::cantor, rng, 9, true);
    CHECK(Point::parse(p.to_string()) == p);
  }
  CHECK(Point::parse("d:3/2^2") == Point::dyadic(3, 2));
  CHECK(Point::parse("t:{1,3}+tail5") == Point::ternary({1, 3}, 5));
  auto seq = DenseSequence::explicit_list({Point::dyadic(1, 1), Point::dyadic(1, 2)});
  auto parsed = DenseSequence::parse_json(seq.to_json_string());
  CHECK(parsed.at(5) == seq.at(5));
}

TEST_CASE("mesh cells index points bottom-up") {
  CHECK(mesh_cell_of(Point::dyadic(0, 0), 3) == 0);
  CHECK(mesh_cell_of(Point::dyadic(1, 0), 3) == 7);
  CHECK(mesh_cell_of(Point::dyadic(3, 3), 3) == 3);
  CHECK(mesh_cell_of(Point::ternary({1}), 1) == 1);
  CHECK(mesh_cell_of(Point::ternary({}, 2), 2) == 1);  // 1/3 = 0.0222... -> cell 01
}
