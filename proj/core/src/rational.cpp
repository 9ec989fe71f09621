#include "latcov/rational.hpp"

#include <mpfr.h>

#include <cctype>
#include <cmath>

namespace latcov {

namespace {

Int parse_int(const std::string& s) {
  if (s.empty()) throw ParseError("empty integer literal");
  mpz_class z;
  if (mpz_set_str(z.get_mpz_t(), s.c_str(), 10) != 0)
    throw ParseError("bad integer literal: '" + s + "'");
  return z;
}

}  // namespace

Rat parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    Rat q(parse_int(text));
    return q;
  }
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + text + "'");
  Rat q;
  q = Rat(num) / Rat(den);  // canonical, sign moved to numerator
  return q;
}

std::string format_rational(const Rat& q) { return q.get_str(); }

Int floor_rat(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

Int ceil_rat(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

Int isqrt_floor(const Int& n) {
  if (n < 0) throw PreconditionViolated("isqrt of negative value");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_prime(const Int& n) {
  static const long kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (n < 2) return false;
  for (long b : kBases) {
    if (n == b) return true;
    if (n % b == 0) return false;
  }
  Int d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  d >>= s;
  for (long b : kBases) {
    Int a(b), x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned long i = 0; i + 1 < s; ++i) {
      x = (x * x) % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Int pow_int(const Int& base, unsigned k) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), k);
  return r;
}

Rat pow_rat(const Rat& base, unsigned k) {
  Rat r;
  mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), k);
  mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), k);
  return r;  // canonical since base was
}

Int factorial(unsigned k) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

RatInterval interval_mul(const RatInterval& a, const RatInterval& b) {
  if (a.lo < 0 || b.lo < 0)
    throw PreconditionViolated("interval_mul expects nonnegative intervals");
  return {a.lo * b.lo, a.hi * b.hi};
}

RatInterval interval_scale(const RatInterval& a, const Rat& c) {
  if (c < 0) throw PreconditionViolated("interval_scale expects c >= 0");
  return {a.lo * c, a.hi * c};
}

RatInterval kth_root_enclosure(const Rat& a, unsigned k, const Rat& rel_tol) {
  if (a < 0) throw PreconditionViolated("kth_root_enclosure of negative value");
  if (k == 0) throw PreconditionViolated("kth_root_enclosure with k = 0");
  if (a == 0) return {Rat(0), Rat(0)};
  if (k == 1) return {a, a};

  // Exact when numerator and denominator are both perfect k-th powers
  // (they are coprime, so this is iff a is a perfect k-th power).
  Int rn, rd;
  int exact_n = mpz_root(rn.get_mpz_t(), a.get_num().get_mpz_t(), k);
  int exact_d = mpz_root(rd.get_mpz_t(), a.get_den().get_mpz_t(), k);
  if (exact_n != 0 && exact_d != 0) {
    Rat r(rn);
    r /= Rat(rd);
    return {r, r};
  }

  // Seed a bracket from double arithmetic, then repair and bisect with the
  // exact predicate mid^k <= a.
  Rat lo, hi;
  double ad = a.get_d();
  if (std::isfinite(ad) && ad > 0) {
    double x0 = std::pow(ad, 1.0 / static_cast<double>(k));
    if (std::isfinite(x0) && x0 > 0) {
      lo = Rat(x0 * (1.0 - 1e-9));
      hi = Rat(x0 * (1.0 + 1e-9));
    }
  }
  if (lo <= 0) {
    lo = a < 1 ? a : Rat(1);
    hi = a < 1 ? Rat(1) : a;
  }
  while (pow_rat(lo, k) > a) lo /= 2;
  while (pow_rat(hi, k) < a) hi *= 2;

  while (hi - lo > rel_tol * lo) {
    Rat mid = (lo + hi) / 2;
    if (pow_rat(mid, k) <= a)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

RatInterval kth_root_enclosure(const Rat& a, unsigned k) {
  static const Rat kDefaultTol(1, 1099511627776L);  // 2^-40
  return kth_root_enclosure(a, k, kDefaultTol);
}

RatInterval sqrt_enclosure(const Rat& s) { return kth_root_enclosure(s, 2); }

RatInterval ln_enclosure(unsigned n) {
  if (n == 0) throw PreconditionViolated("ln_enclosure: argument must be positive");
  if (n == 1) return {Rat(0), Rat(0)};
  mpfr_t x;
  mpq_t q;
  mpq_init(q);
  RatInterval out;
  mpfr_init2(x, 128);
  mpfr_set_ui(x, n, MPFR_RNDN);
  mpfr_log(x, x, MPFR_RNDD);
  mpfr_get_q(q, x);
  out.lo = Rat(q);
  mpfr_set_ui(x, n, MPFR_RNDN);
  mpfr_log(x, x, MPFR_RNDU);
  mpfr_get_q(q, x);
  out.hi = Rat(q);
  mpfr_clear(x);
  mpq_clear(q);
  return out;
}

}  // namespace latcov
