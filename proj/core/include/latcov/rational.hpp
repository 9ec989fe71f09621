#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "latcov/errors.hpp"

namespace latcov {

using Int = mpz_class;
using Rat = mpq_class;

// Parses "p", "-p" or "p/q" into a canonical rational (q > 0).
Rat parse_rational(const std::string& text);
std::string format_rational(const Rat& q);

Int floor_rat(const Rat& q);
Int ceil_rat(const Rat& q);

Int isqrt_floor(const Int& n);  // floor(sqrt(n)), n >= 0

// Deterministic Miller-Rabin (12 fixed bases, valid far beyond 64 bits).
bool is_prime(const Int& n);

Int pow_int(const Int& base, unsigned k);
Rat pow_rat(const Rat& base, unsigned k);
Int factorial(unsigned k);

// Closed interval [lo, hi] with exact rational endpoints.
struct RatInterval {
  Rat lo;
  Rat hi;
  bool exact() const { return lo == hi; }
};

// Interval arithmetic for nonnegative operands only.
RatInterval interval_mul(const RatInterval& a, const RatInterval& b);
RatInterval interval_scale(const RatInterval& a, const Rat& c);

// Certified enclosure of a^(1/k) for a >= 0, k >= 1. Degenerate (lo == hi)
// when a is a perfect k-th power of a rational; otherwise relative width
// below rel_tol. Conservative: lo^k <= a <= hi^k always holds.
RatInterval kth_root_enclosure(const Rat& a, unsigned k, const Rat& rel_tol);
RatInterval kth_root_enclosure(const Rat& a, unsigned k);

RatInterval sqrt_enclosure(const Rat& s);

// Certified enclosure of the natural logarithm of a positive integer.
RatInterval ln_enclosure(unsigned n);

}  // namespace latcov
