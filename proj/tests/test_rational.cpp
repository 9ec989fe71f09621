#include <random>

#include "doctest.h"
#include "latcov/rational.hpp"

using namespace latcov;

TEST_CASE("parse_rational accepts integers and fractions") {
  CHECK(parse_rational("3") == Rat(3));
  CHECK(parse_rational("-7") == Rat(-7));
  CHECK(parse_rational("3/4") == Rat(3, 4));
  CHECK(parse_rational("-6/8") == Rat(-3, 4));  // canonicalized
  CHECK(parse_rational("0/5") == Rat(0));
  CHECK(format_rational(parse_rational("22/7")) == "22/7");
  CHECK(format_rational(Rat(5)) == "5");
  CHECK(format_rational(Rat(-1, 2)) == "-1/2");
}

TEST_CASE("parse_rational rejects garbage") {
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/"), ParseError);
  CHECK_THROWS_AS(parse_rational("/2"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
}

TEST_CASE("floor and ceil on negatives") {
  CHECK(floor_rat(Rat(7, 2)) == 3);
  CHECK(ceil_rat(Rat(7, 2)) == 4);
  CHECK(floor_rat(Rat(-7, 2)) == -4);
  CHECK(ceil_rat(Rat(-7, 2)) == -3);
  CHECK(floor_rat(Rat(6)) == 6);
  CHECK(ceil_rat(Rat(6)) == 6);
}

TEST_CASE("isqrt_floor squares bracket the argument") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    Int n = Int(static_cast<long>(rng() % 1000000));
    Int s = isqrt_floor(n);
    CHECK(s * s <= n);
    CHECK((s + 1) * (s + 1) > n);
  }
  CHECK(isqrt_floor(Int(0)) == 0);
  CHECK(isqrt_floor(Int(1)) == 1);
  CHECK(isqrt_floor(Int(99)) == 9);
  CHECK(isqrt_floor(Int(100)) == 10);
}

TEST_CASE("is_prime agrees with trial division below 10000") {
  auto trial = [](long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  };
  for (long n = 0; n < 10000; ++n) CHECK(is_prime(Int(n)) == trial(n));
}

TEST_CASE("powers and factorials") {
  CHECK(pow_int(Int(3), 0) == 1);
  CHECK(pow_int(Int(3), 4) == 81);
  CHECK(pow_int(Int(-2), 3) == -8);
  CHECK(pow_rat(Rat(2, 3), 3) == Rat(8, 27));
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
}

TEST_CASE("interval arithmetic stays conservative") {
  RatInterval a{Rat(1, 3), Rat(1, 2)};
  RatInterval b{Rat(2), Rat(3)};
  auto m = interval_mul(a, b);
  CHECK(m.lo == Rat(2, 3));
  CHECK(m.hi == Rat(3, 2));
  auto s = interval_scale(a, Rat(6));
  CHECK(s.lo == Rat(2));
  CHECK(s.hi == Rat(3));
  CHECK(RatInterval{Rat(1), Rat(1)}.exact());
  CHECK_FALSE(a.exact());
}

TEST_CASE("kth_root_enclosure is exact on perfect powers") {
  auto r = kth_root_enclosure(Rat(8), 3);
  CHECK(r.exact());
  CHECK(r.lo == Rat(2));
  r = kth_root_enclosure(Rat(27, 64), 3);
  CHECK(r.exact());
  CHECK(r.lo == Rat(3, 4));
  r = kth_root_enclosure(Rat(625), 4);
  CHECK(r.exact());
  CHECK(r.lo == Rat(5));
  r = kth_root_enclosure(Rat(0), 5);
  CHECK(r.exact());
  CHECK(r.lo == Rat(0));
}

TEST_CASE("kth_root_enclosure brackets non-perfect powers tightly") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    Rat a(static_cast<long>(rng() % 5000 + 2), static_cast<long>(rng() % 50 + 1));
    a.canonicalize();
    unsigned k = 2 + static_cast<unsigned>(rng() % 4);
    auto r = kth_root_enclosure(a, k);
    CHECK(pow_rat(r.lo, k) <= a);
    CHECK(pow_rat(r.hi, k) >= a);
    CHECK(r.lo > 0);
    // relative width within the documented tolerance
    Rat tol = r.lo / Rat(Int(1) << 40);
    CHECK(r.hi - r.lo <= tol);
  }
}

TEST_CASE("sqrt_enclosure") {
  auto r = sqrt_enclosure(Rat(49, 4));
  CHECK(r.exact());
  CHECK(r.lo == Rat(7, 2));
  r = sqrt_enclosure(Rat(2));
  CHECK(r.lo * r.lo <= 2);
  CHECK(r.hi * r.hi >= 2);
  CHECK(r.lo > Rat(14142, 10000));
  CHECK(r.hi < Rat(14143, 10000));
}

TEST_CASE("ln_enclosure brackets known logarithms") {
  auto l2 = ln_enclosure(2);
  CHECK(l2.lo < l2.hi);
  CHECK(l2.lo > Rat(693147, 1000000));
  CHECK(l2.hi < Rat(693148, 1000000));
  auto l3 = ln_enclosure(3);
  CHECK(l3.lo > Rat(1098612, 1000000));
  CHECK(l3.hi < Rat(1098613, 1000000));
  auto l1 = ln_enclosure(1);
  CHECK(l1.lo == Rat(0));
  CHECK(l1.hi == Rat(0));
  CHECK_THROWS_AS(ln_enclosure(0), PreconditionViolated);
}
