#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "doctest.h"
#include "latcov/census.hpp"

using namespace latcov;

namespace {

Vec vec(std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.push_back(Int(x));
  return v;
}

// Straightforward reference: all canonical normals of hyperplanes spanned by
// n-1 independent points of rB^n, via every (n-1)-subset, no shortcuts.
std::set<Vec> brute_normals(int n, long r) {
  std::vector<Vec> pts;
  std::vector<long> x(n, -r);
  while (true) {
    Int q = 0;
    for (long c : x) q += Int(c) * Int(c);
    if (q <= Int(r) * Int(r)) {
      bool zero = true;
      for (long c : x) zero = zero && c == 0;
      if (!zero) {
        Vec v;
        for (long c : x) v.push_back(Int(c));
        pts.push_back(v);
      }
    }
    int i = n - 1;
    while (i >= 0 && x[i] == r) x[i--] = -r;
    if (i < 0) break;
    ++x[i];
  }
  std::set<Vec> normals;
  std::vector<int> idx(n - 1);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == n - 1) {
      std::vector<Vec> rows;
      for (int i : idx) rows.push_back(pts[i]);
      Vec c = generalized_cross(rows, n);
      if (!is_zero_vec(c)) normals.insert(primitive_canonical(c));
      return;
    }
    for (int i = start; i < static_cast<int>(pts.size()); ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return normals;
}

}  // namespace

TEST_CASE("enumerate_hyperplanes matches the subset-scan reference") {
  for (auto [n, r] : {std::pair<int, long>{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}}) {
    auto hs = enumerate_hyperplanes(n, Rat(r));
    auto ref = brute_normals(n, r);
    CHECK(hs.size() == ref.size());
    std::set<Vec> got;
    for (const auto& h : hs) got.insert(h.normal);
    CHECK(got == ref);
    CHECK(std::is_sorted(hs.begin(), hs.end()));
  }
}

TEST_CASE("census frozen values at small radii") {
  auto check = [](int n, long r, long h, const Rat& s, long pts) {
    auto c = census(n, Rat(r));
    CHECK(c.h_count == h);
    CHECK(c.s_r == s);
    CHECK(c.point_count == pts);
  };
  check(2, 1, 2, Rat(3), 5);
  check(2, 2, 4, Rat(4), 13);
  check(2, 3, 8, Rat(9, 2), 29);
  check(2, 4, 16, Rat(4), 49);
  check(2, 5, 24, Rat(13, 3), 81);
  check(3, 1, 3, Rat(5), 7);
  check(3, 2, 25, Rat(193, 25), 33);
  check(3, 3, 349, Rat(2557, 349), 123);
  check(4, 1, 4, Rat(7), 9);
  check(4, 2, 680, Rat(864, 85), 89);
}

TEST_CASE("census at rational and larger radii") {
  auto c = census(2, Rat(5, 2));
  CHECK(c.point_count == 21);  // |x|^2 <= 25/4
  auto c100 = census(2, Rat(100));
  CHECK(c100.h_count == 9544);
  CHECK(c100.ratio == doctest::Approx(0.9544).epsilon(1e-9));
}

TEST_CASE("census is identical across thread counts") {
  for (int threads : {2, 3, 5}) {
    auto a = census(3, Rat(3), 1);
    auto b = census(3, Rat(3), threads);
    CHECK(a.h_count == b.h_count);
    CHECK(a.s_r == b.s_r);
    CHECK(a.point_count == b.point_count);
  }
}

TEST_CASE("census monotone and bounded") {
  Int prev = 0;
  for (long r = 1; r <= 6; ++r) {
    auto c = census(2, Rat(r));
    CHECK(c.h_count >= prev);
    prev = c.h_count;
    // every spanned line holds at least 0 and a +-primitive pair
    CHECK(c.s_r >= 3);
    // cannot exceed the number of point pairs
    Int half = (c.point_count - 1) / 2;
    CHECK(c.h_count <= half * (half - 1) / 2 + half);
  }
}

TEST_CASE("census input guards") {
  CHECK_THROWS_AS(census(5, Rat(2)), PreconditionViolated);
  CHECK_THROWS_AS(census(1, Rat(2)), PreconditionViolated);
  CHECK_THROWS_AS(census(2, Rat(2000000)), InstanceTooLarge);  // radius cap
  CHECK_THROWS_AS(census(3, Rat(10001)), InstanceTooLarge);
  CHECK_THROWS_AS(census(4, Rat(2001)), InstanceTooLarge);
  CHECK_THROWS_AS(census(2, Rat(0)), PreconditionViolated);
}

TEST_CASE("linear_fit recovers exact lines") {
  auto [slope, intercept] = linear_fit({1, 2, 3, 4}, {3, 5, 7, 9});
  CHECK(slope == doctest::Approx(2.0));
  CHECK(intercept == doctest::Approx(1.0));
  CHECK_THROWS_AS(linear_fit({1}, {2}), InsufficientData);
  CHECK_THROWS_AS(linear_fit({2, 2}, {1, 5}), InsufficientData);  // degenerate x
}

TEST_CASE("scaling_fit slope windows at desk scale") {
  auto fit2 = scaling_fit(2, {Rat(5), Rat(10), Rat(15), Rat(20)});
  CHECK(fit2.slope > 1.8);
  CHECK(fit2.slope < 2.2);
  REQUIRE(fit2.reports.size() == 4);
  CHECK(fit2.reports[0].r == Rat(5));
  CHECK(fit2.reports[3].h_count == 384);
}

TEST_CASE("scaling_fit input guards") {
  CHECK_THROWS_AS(scaling_fit(2, {Rat(10), Rat(20), Rat(40)}), InsufficientData);
  CHECK_THROWS_AS(scaling_fit(2, {Rat(10), Rat(11), Rat(12), Rat(13)}), InsufficientData);
}

TEST_CASE("claim_stats frozen values and quantile ordering") {
  auto cs = claim_stats(3, Rat(4), Rat(2));
  CHECK(cs.samples == 109);
  CHECK(cs.exceed_count == 0);
  CHECK(cs.min_sq == Rat(1));
  CHECK(cs.median_sq == Rat(2));
  CHECK(cs.max_sq == Rat(3));
  CHECK(cs.lambda1_sq.size() == 109);
  CHECK(std::is_sorted(cs.lambda1_sq.begin(), cs.lambda1_sq.end()));
  CHECK(cs.min_sq <= cs.q25_sq);
  CHECK(cs.q25_sq <= cs.median_sq);
  CHECK(cs.median_sq <= cs.q75_sq);
  CHECK(cs.q75_sq <= cs.max_sq);
  // negative threshold counts every sample
  auto all = claim_stats(3, Rat(4), Rat(-1));
  CHECK(all.exceed_count == all.samples);
}

TEST_CASE("unit_ball_volume known values") {
  auto v2 = unit_ball_volume(2);
  CHECK(v2.decimal.substr(0, 16) == "3.14159265358979");
  CHECK(v2.enclosure.lo < v2.enclosure.hi);
  CHECK(v2.enclosure.lo > Rat(314159, 100000));
  CHECK(v2.enclosure.hi < Rat(314160, 100000));
  auto v3 = unit_ball_volume(3);
  CHECK(v3.decimal.substr(0, 7) == "4.18879");  // 4 pi / 3
  auto v4 = unit_ball_volume(4);
  CHECK(v4.decimal.substr(0, 7) == "4.93480");  // pi^2 / 2
  auto v1 = unit_ball_volume(1);
  CHECK(v1.enclosure.exact());
  CHECK(v1.enclosure.lo == Rat(2));
  // enclosures are tight
  CHECK(v4.enclosure.hi - v4.enclosure.lo < Rat(1, pow_int(Int(10), 30)));
}

TEST_CASE("minkowski bound holds for sampled primitive vectors") {
  CHECK(minkowski_bound_holds(vec({1, 1, 1})));
  CHECK(minkowski_bound_holds(vec({1, 0, 0})));
  CHECK(minkowski_bound_holds(vec({2, 3, 5})));
  int checked = 0;
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b)
      for (long c = 1; c <= 3; ++c) {
        Vec v = vec({a, b, c});
        if (gcd_vec(v) != 1) continue;
        CHECK(minkowski_bound_holds(v));
        ++checked;
      }
  CHECK(checked > 50);
}

TEST_CASE("decomposition identity holds exactly") {
  for (auto [n, r] : {std::pair<int, long>{2, 6}, {2, 10}, {3, 2}, {3, 3}}) {
    auto d = corollary_decomposition(n, Rat(r));
    CHECK(d.lhs == d.rhs);
    CHECK(d.h_count == census(n, Rat(r)).h_count);
    CHECK(d.lhs > d.h_count);  // every hyperplane holds at least the origin plus a pair
  }
}

TEST_CASE("decomposition right side recounted independently") {
  int n = 2;
  long r = 5;
  auto hs = enumerate_hyperplanes(n, Rat(r));
  auto d = corollary_decomposition(n, Rat(r));
  // hyperplane-major recount of the left side
  Int lhs = 0;
  std::vector<Vec> pts;
  for (long x = -r; x <= r; ++x)
    for (long y = -r; y <= r; ++y)
      if (Int(x) * x + Int(y) * y <= Int(r) * r) pts.push_back(vec({x, y}));
  for (const auto& h : hs)
    for (const auto& p : pts)
      if (h.contains(p)) lhs += 1;
  CHECK(d.lhs == lhs);
  // point-major recount of the right side
  Int rhs = Int(static_cast<long>(hs.size()));
  for (const auto& p : pts) {
    if (is_zero_vec(p)) continue;
    for (const auto& h : hs)
      if (h.contains(p)) rhs += 1;
  }
  CHECK(d.rhs == rhs);
}
