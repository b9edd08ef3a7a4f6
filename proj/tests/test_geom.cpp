#include <doctest.h>

#include <random>

#include "pentalimit/geom.hpp"
#include "test_util.hpp"

using namespace pentalimit;
using namespace pentalimit::testutil;

namespace {

HPoint<Rat> hp(long a, long b, long c) { return {Rat(a), Rat(b), Rat(c)}; }

Rat random_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-30, 30);
  std::uniform_int_distribution<long> den(1, 9);
  return Rat(num(rng), den(rng));
}

HPoint<Rat> random_hpoint(std::mt19937_64& rng) {
  return {random_rat(rng), random_rat(rng), random_rat(rng)};
}

}  // namespace

TEST_CASE("det3 basics and cofactor oracle") {
  CHECK(det3(hp(1, 0, 0), hp(0, 1, 0), hp(0, 0, 1)) == Rat(1));
  const auto u = hp(3, -2, 5), w = hp(1, 7, -4);
  CHECK(det3(u, u, w) == Rat(0));

  // lifts of (2,0), (3,1), (3,2)
  const auto d = det3(lift(Point2<Rat>{Rat(2), Rat(0)}),
                      lift(Point2<Rat>{Rat(3), Rat(1)}),
                      lift(Point2<Rat>{Rat(3), Rat(2)}));
  CHECK(d == Rat(1));

  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_hpoint(rng), b = random_hpoint(rng),
               c = random_hpoint(rng);
    CHECK(det3(a, b, c) == det3_cofactor(a, b, c));
  }
}

TEST_CASE("det3 is alternating") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) {
    const auto a = random_hpoint(rng), b = random_hpoint(rng),
               c = random_hpoint(rng);
    const Rat d = det3(a, b, c);
    CHECK(det3(b, a, c) == -d);
    CHECK(det3(a, c, b) == -d);
    CHECK(det3(c, b, a) == -d);
  }
}

TEST_CASE("lift and project") {
  CHECK(lift(Point2<Rat>{Rat(2), Rat(0)}).a == Rat(2));
  CHECK(lift(Point2<Rat>{Rat(2), Rat(0)}).c == Rat(1));
  const Point2<Rat> half{Rat(-1, 2), Rat(3, 4)};
  const auto lifted = lift(half);
  CHECK(lifted.a == Rat(-1, 2));
  CHECK(lifted.b == Rat(3, 4));
  CHECK(lifted.c == Rat(1));

  CHECK(project(hp(2, 0, 1)) == Point2<Rat>{Rat(2), Rat(0)});
  CHECK(project(hp(4, 6, 2)) == Point2<Rat>{Rat(2), Rat(3)});
  CHECK(throws_code(ErrorCode::PointAtInfinity, [] { project(hp(1, 1, 0)); }));

  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    const Point2<Rat> p{random_rat(rng), random_rat(rng)};
    CHECK(project(lift(p)) == p);
  }
}

TEST_CASE("join and meet") {
  // join of (0,0) and (1,0) is the line y = 0
  const auto l1 = join(hp(0, 0, 1), hp(1, 0, 1));
  CHECK(proportional(l1, HLine<Rat>{Rat(0), Rat(1), Rat(0)}));
  // join of (1,0) and (1,1) is the line x = 1
  const auto l2 = join(hp(1, 0, 1), hp(1, 1, 1));
  CHECK(proportional(l2, HLine<Rat>{Rat(1), Rat(0), Rat(-1)}));
  // lifts of (0,1) and (3,1): the line y = 1, and the joined points lie on it
  const auto p = hp(0, 1, 1), q = hp(3, 1, 1);
  const auto l3 = join(p, q);
  CHECK(proportional(l3, HLine<Rat>{Rat(0), Rat(1), Rat(-1)}));
  CHECK(dot(p, l3) == Rat(0));
  CHECK(dot(q, l3) == Rat(0));

  CHECK(throws_code(ErrorCode::DegenerateJoin,
                    [] { join(hp(1, 2, 1), hp(2, 4, 2)); }));

  // y = 0 and x = 0 meet at the origin
  const HLine<Rat> y0{Rat(0), Rat(1), Rat(0)}, x0{Rat(1), Rat(0), Rat(0)};
  CHECK(project(meet(y0, x0)) == Point2<Rat>{Rat(0), Rat(0)});

  // y = 1 and x + y = 2 meet at (1,1); oracle: solve the 2x2 system directly
  const HLine<Rat> a{Rat(0), Rat(1), Rat(-1)}, b{Rat(1), Rat(1), Rat(-2)};
  CHECK(project(meet(a, b)) == Point2<Rat>{Rat(1), Rat(1)});

  // parallel lines y = 0, y = 1 meet at infinity
  const HLine<Rat> y1{Rat(0), Rat(1), Rat(-1)};
  const auto inf = meet(y0, y1);
  CHECK(inf.c == Rat(0));
  CHECK(throws_code(ErrorCode::PointAtInfinity, [&] { project(inf); }));
  CHECK(throws_code(ErrorCode::DegenerateMeet, [&] {
    meet(y0, HLine<Rat>{Rat(0), Rat(3), Rat(0)});
  }));
}

TEST_CASE("join/meet duality: meet of adjacent joins recovers the shared point") {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 100; ++t) {
    const auto p = random_hpoint(rng), q = random_hpoint(rng),
               r = random_hpoint(rng);
    if (cross(p, q).all_zero() || cross(q, r).all_zero() ||
        cross(p, r).all_zero())
      continue;
    if (det3(p, q, r) == Rat(0)) continue;
    CHECK(proportional(meet(join(p, q), join(q, r)), q));
  }
}

TEST_CASE("is_convex") {
  CHECK(is_convex(heptagon()));
  CHECK(is_convex(unit_square()));
  CHECK_FALSE(is_convex(Polygon<Rat>({{Rat(0), Rat(0)},
                                      {Rat(2), Rat(0)},
                                      {Rat(1), Rat(1)},
                                      {Rat(2), Rat(2)},
                                      {Rat(0), Rat(2)}})));
  // collinear triple is not strictly convex
  CHECK_FALSE(is_convex(Polygon<Rat>(
      {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(2), Rat(0)}, {Rat(1), Rat(1)}})));
}

TEST_CASE("is_convex invariances") {
  const auto A = heptagon();
  const long n = static_cast<long>(A.size());
  for (long s = 0; s < n; ++s) {
    std::vector<Point2<Rat>> rotated;
    for (long i = 0; i < n; ++i) rotated.push_back(A.at(i + s));
    CHECK(is_convex(Polygon<Rat>(rotated)));
  }
  // reflection keeps convexity but flips orientation
  std::vector<Point2<Rat>> mirrored;
  for (const auto& p : A.vertices()) mirrored.push_back({-p.x, p.y});
  const Polygon<Rat> M(mirrored);
  CHECK(is_convex(M));
  CHECK(orient(A.at(0), A.at(1), A.at(2)) ==
        -orient(M.at(0), M.at(1), M.at(2)));
}

TEST_CASE("is_generic") {
  const auto A = heptagon();
  CHECK(is_generic(A));
  CHECK(is_generic(A, GenericityMode::strict));

  // brute-force sweep over all 35 triples agrees with strict mode
  bool all_nonzero = true;
  for (long i = 0; i < 7; ++i)
    for (long j = i + 1; j < 7; ++j)
      for (long k = j + 1; k < 7; ++k)
        if (det3_cofactor(A.lift_at(i), A.lift_at(j), A.lift_at(k)) == Rat(0))
          all_nonzero = false;
  CHECK(all_nonzero);

  CHECK_FALSE(is_generic(Polygon<Rat>(
      {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(2), Rat(0)}, {Rat(1), Rat(1)}})));

  const auto H = axis_hexagon();
  CHECK(is_generic(H));  // consecutive mode

  // consecutive-generic but not strict-generic: vertices 0, 2, 4 on y = x
  const Polygon<Rat> P({{Rat(0), Rat(0)},
                        {Rat(2), Rat(0)},
                        {Rat(2), Rat(2)},
                        {Rat(3), Rat(4)},
                        {Rat(4), Rat(4)}});
  CHECK(is_generic(P));
  CHECK_FALSE(is_generic(P, GenericityMode::strict));

  CHECK(first_degenerate_triple(heptagon()) == -1);
}

TEST_CASE("in_hull") {
  const auto Hf = to_float_polygon(heptagon());
  CHECK(in_hull(Hf, Point2<double>{1.609, 1.838}));
  CHECK(in_hull(unit_square(), Point2<Rat>{Rat(1), Rat(1)}));  // vertex: weak
  CHECK_FALSE(in_hull(unit_square(), Point2<Rat>{Rat(2), Rat(2)}));
  CHECK(throws_code(ErrorCode::NotConvex, [] {
    in_hull(Polygon<Rat>({{Rat(0), Rat(0)},
                          {Rat(2), Rat(0)},
                          {Rat(1), Rat(1)},
                          {Rat(2), Rat(2)},
                          {Rat(0), Rat(2)}}),
            Point2<Rat>{Rat(1), Rat(1)});
  }));
}

TEST_CASE("polygon construction invariants") {
  CHECK(throws_code(ErrorCode::InvalidInput, [] {
    Polygon<Rat>({{Rat(0), Rat(0)}, {Rat(1), Rat(1)}});
  }));
  CHECK(throws_code(ErrorCode::InvalidInput, [] {
    Polygon<Rat>({{Rat(0), Rat(0)},
                  {Rat(0), Rat(0)},
                  {Rat(1), Rat(1)},
                  {Rat(2), Rat(0)}});
  }));
  const auto A = heptagon();
  CHECK(A.at(-1) == A.at(6));
  CHECK(A.at(7) == A.at(0));
}

TEST_CASE("scalar parsing") {
  CHECK(Rat::parse("3/4") == Rat(3, 4));
  CHECK(Rat::parse("-6/8") == Rat(-3, 4));
  CHECK(Rat::parse("7") == Rat(7));
  CHECK(Rat::parse("-1.25") == Rat(-5, 4));
  CHECK(Rat::parse("2e3") == Rat(2000));
  CHECK(Rat::parse("2.5e-1") == Rat(1, 4));
  CHECK(Rat::parse("3/4").str() == "3/4");
  CHECK(Rat::parse("8/4").str() == "2");
  CHECK(throws_code(ErrorCode::InvalidInput, [] { Rat::parse("1/0"); }));
  CHECK(throws_code(ErrorCode::InvalidInput, [] { Rat::parse("abc"); }));
  CHECK(Rat::from_double(0.5) == Rat(1, 2));
  CHECK(Rat::from_double(-0.375) == Rat(-3, 8));
}
