#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "latcov/lattice.hpp"

using namespace latcov;

namespace {

Vec vec(std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.push_back(Int(x));
  return v;
}

// Independent brute-force enumeration over a generous grid.
std::vector<Vec> brute_points(const Body& body, const Rat& t, long lim) {
  std::vector<Vec> out;
  int n = body.dim();
  std::vector<long> x(n, -lim);
  while (true) {
    Vec v;
    for (long c : x) v.push_back(Int(c));
    if (body.gauge(v).leq(t)) out.push_back(v);
    int i = n - 1;
    while (i >= 0 && x[i] == lim) x[i--] = -lim;
    if (i < 0) break;
    ++x[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("enumerate_points matches brute force and is lex sorted") {
  std::vector<Body> bodies = {Body::ball(2, Rat(5, 2)), Body::box({Rat(3), Rat(1)}),
                              Body::cross_polytope({Rat(3), Rat(2)}),
                              Body::ellipsoid({{Rat(1, 4), Rat(0)}, {Rat(0), Rat(1)}})};
  for (const auto& body : bodies) {
    for (Rat t : {Rat(1), Rat(3, 2)}) {
      auto pts = enumerate_points(body, t);
      auto ref = brute_points(body, t, 8);
      CHECK(pts == ref);
      CHECK(std::is_sorted(pts.begin(), pts.end()));
      // symmetric and contains the origin
      std::set<Vec> s(pts.begin(), pts.end());
      CHECK(s.count(Vec(body.dim(), Int(0))) == 1);
      for (const auto& p : pts) {
        Vec neg = vec_neg(p);
        CHECK(s.count(neg) == 1);
      }
    }
  }
}

TEST_CASE("enumerate_points counts known ball sizes") {
  CHECK(enumerate_points(Body::ball(2, Rat(1)), Rat(1)).size() == 5);
  CHECK(enumerate_points(Body::ball(2, Rat(2)), Rat(1)).size() == 13);
  CHECK(enumerate_points(Body::ball(3, Rat(2)), Rat(1)).size() == 33);
  CHECK(enumerate_points(Body::ball(2, Rat(2)), Rat(2)).size() == 49);  // 4B^2
}

TEST_CASE("enumeration budget guard") {
  EnumerationOptions opts;
  opts.max_grid_points = 10;
  CHECK_THROWS_AS(enumerate_points(Body::ball(2, Rat(50)), Rat(1), opts),
                  EnumerationBudgetExceeded);
  CHECK_THROWS_AS(enumerate_points(Body::ball(2, Rat(2)), Rat(-1)), PreconditionViolated);
}

TEST_CASE("successive minima of balls are exactly 1/r") {
  for (long r : {2L, 4L, 10L}) {
    for (int n : {2, 3, 4}) {
      auto profile = successive_minima(Body::ball(n, Rat(r)));
      REQUIRE(static_cast<int>(profile.minima.size()) == n);
      for (const auto& m : profile.minima) CHECK(m == GaugeValue::rational(Rat(1, r)));
      CHECK(rank_of(profile.witnesses, n) == n);
    }
  }
}

TEST_CASE("successive minima of boxes hit both scales") {
  for (long x : {2L, 5L, 10L}) {
    auto p2 = successive_minima(Body::box({Rat(x), Rat(1)}));
    CHECK(p2.minima[0] == GaugeValue::rational(Rat(1, x)));
    CHECK(p2.minima[1] == GaugeValue::rational(Rat(1)));
    auto p3 = successive_minima(Body::box({Rat(x), Rat(x), Rat(1)}));
    CHECK(p3.minima[0] == GaugeValue::rational(Rat(1, x)));
    CHECK(p3.minima[1] == GaugeValue::rational(Rat(1, x)));
    CHECK(p3.minima[2] == GaugeValue::rational(Rat(1)));
  }
}

TEST_CASE("witnesses achieve their minima") {
  std::vector<Body> bodies = {Body::ball(3, Rat(7, 2)), Body::box({Rat(4), Rat(1)}),
                              Body::cross_polytope({Rat(3), Rat(5), Rat(2)}),
                              Body::ellipsoid({{Rat(1, 9), Rat(0)}, {Rat(0), Rat(1, 25)}})};
  for (const auto& body : bodies) {
    auto profile = successive_minima(body);
    int n = body.dim();
    REQUIRE(static_cast<int>(profile.witnesses.size()) == n);
    for (int i = 0; i < n; ++i) CHECK(body.gauge(profile.witnesses[i]) == profile.minima[i]);
    CHECK(rank_of(profile.witnesses, n) == n);
    for (int i = 1; i < n; ++i) CHECK(profile.minima[i - 1] <= profile.minima[i]);
  }
}

TEST_CASE("no i independent vectors strictly inside the i-th minimum") {
  // brute-force check of the defining property on small bodies
  std::vector<Body> bodies = {Body::ball(2, Rat(5, 2)), Body::box({Rat(3), Rat(1)}),
                              Body::cross_polytope({Rat(3), Rat(2)})};
  for (const auto& body : bodies) {
    auto profile = successive_minima(body);
    int n = body.dim();
    for (int i = 0; i < n; ++i) {
      // all nonzero points with gauge strictly below minima[i]
      std::vector<Vec> inside;
      for (const auto& p : brute_points(body, Rat(2), 8)) {
        if (is_zero_vec(p)) continue;
        if (body.gauge(p) < profile.minima[i]) inside.push_back(p);
      }
      CHECK(rank_of(inside, n) <= i);
    }
  }
}

TEST_CASE("unimodular transforms preserve successive minima") {
  Mat u = {vec({1, 2, 0}), vec({0, 1, 0}), vec({1, 1, 1})};
  REQUIRE(is_unimodular(u));
  std::vector<Body> bodies = {Body::ball(3, Rat(3)), Body::box({Rat(2), Rat(3), Rat(1)})};
  for (const auto& body : bodies) {
    auto a = successive_minima(body);
    auto b = successive_minima(body.transform(u));
    REQUIRE(a.minima.size() == b.minima.size());
    for (std::size_t i = 0; i < a.minima.size(); ++i) CHECK(a.minima[i] == b.minima[i]);
  }
}

TEST_CASE("is_primitive") {
  CHECK(is_primitive(vec({1, 0})));
  CHECK(is_primitive(vec({2, 3})));
  CHECK_FALSE(is_primitive(vec({2, 4})));
  CHECK_FALSE(is_primitive(vec({0, 0, 4})));
  CHECK_THROWS_AS(is_primitive(vec({0, 0})), ZeroVector);
}

TEST_CASE("orthogonal_lattice basics") {
  auto ol = orthogonal_lattice(vec({1, 1, 1}));
  CHECK(ol.det_sq == 3);  // det L(v) = |v|, squared
  REQUIRE(ol.basis.size() == 2);
  for (const auto& b : ol.basis) CHECK(dot(b, vec({1, 1, 1})) == 0);
  Mat g = gram(ol.basis);
  CHECK(det(g) == ol.det_sq);
  CHECK_THROWS_AS(orthogonal_lattice(vec({2, 4, 6})), NotPrimitive);
}

TEST_CASE("minima_of_sublattice matches direct enumeration") {
  // v = (1,1,1): shortest vectors of the orthogonal lattice have |w|^2 = 2
  auto ol = orthogonal_lattice(vec({1, 1, 1}));
  auto minima = minima_of_sublattice(ol);
  REQUIRE(minima.size() == 2);
  CHECK(minima[0] == GaugeValue::sqrt_of(Rat(2)));
  CHECK(minima[1] == GaugeValue::sqrt_of(Rat(2)));

  // independent check for several primitive v: brute-force the shortest
  // nonzero lattice vector orthogonal to v
  std::mt19937_64 rng(31);
  for (int t = 0; t < 20; ++t) {
    Vec v = {Int(static_cast<long>(rng() % 7) - 3), Int(static_cast<long>(rng() % 7) - 3),
             Int(static_cast<long>(rng() % 7) - 3)};
    if (is_zero_vec(v)) continue;
    v = primitive_canonical(v);
    auto lat = orthogonal_lattice(v);
    auto mins = minima_of_sublattice(lat);
    Int best = -1;
    for (long x = -6; x <= 6; ++x)
      for (long y = -6; y <= 6; ++y)
        for (long z = -6; z <= 6; ++z) {
          Vec w = vec({x, y, z});
          if (is_zero_vec(w) || dot(w, v) != 0) continue;
          Int q = norm_sq(w);
          if (best < 0 || q < best) best = q;
        }
    REQUIRE(best > 0);
    CHECK(mins[0] == GaugeValue::sqrt_of(Rat(best)));
  }
}
