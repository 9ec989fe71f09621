#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "latcov/lattice.hpp"

namespace latcov {

// Evaluation of the general-position lower bound
//   (1 - lambda_n) / (16 n^2) * min_{0<m<n} (lambda_m ... lambda_n)^{-1/(n-m)}
// together with the prime-admissibility bound (same shape, 8 n^2).
// Roots are certified rational enclosures; degenerate when rational.
struct LowerBoundReport {
  int dim = 0;
  int m_star = 0;            // argmin m (smallest on ties)
  RatInterval min_term;      // min_m (lambda_m ... lambda_n)^{-1/(n-m)}
  RatInterval bound;         // 16 n^2 version (general-position count)
  RatInterval p_bound;       // 8 n^2 version (strict upper bound for p)
};

LowerBoundReport lower_bound(const MinimaProfile& profile);

// Largest prime p with 1 < p < p_bound (conservative: uses the enclosure's
// lower end). Empty when no such prime exists.
std::optional<Int> largest_admissible_prime(const LowerBoundReport& report);

// The p+1 vectors (1, i, i^2, ..., i^{n-1}) for 0 <= i < p, then e_n.
std::vector<Vec> moment_curve(const Int& p, int n);

struct Lift {
  Int j;      // multiplier, 1 <= j < p
  Vec w;      // integer shift
  Vec point;  // j*v + p*w, inside the body
};

// Finds (j, w) with gauge(j*v + p*w) <= 1 by exhaustive search over the
// integer box covering (C - j*v)/p per j. Canonical order: smallest j, then
// smallest |w|^2, then lexicographic w. Throws NoLiftFound when the search
// space is empty of solutions.
Lift lemma_lift(const Body& body, const Vec& v, const Int& p,
                const EnumerationOptions& opts = {});

struct CertLift {
  std::int64_t curve_index;  // 0..p-1, or -1 for the point at infinity e_n
  Int j;
  Vec w;
};

struct GenPosCertificate {
  Int p;
  Body body;
  std::vector<Vec> points;      // p+1 lattice points of C, n-wise independent
  std::vector<CertLift> lifts;  // parallel to points
};

// Lifts every moment-curve point into C; the results are n-wise linearly
// independent, so |points| = p + 1 > p certifies that many points of C's
// lattice in general position.
GenPosCertificate build_general_position(const Body& body,
                                         const EnumerationOptions& opts = {});

// As above, but with the prime supplied by the caller.
GenPosCertificate build_general_position_with_prime(
    const Body& body, const Int& p, const EnumerationOptions& opts = {});

// True iff every n-subset of the points is linearly independent.
bool verify_general_position(const std::vector<Vec>& points, int n);

struct TrialOutcome {
  std::string family;
  int dim = 0;
  Int p;
  Vec v;
  bool found = false;
};

struct TrialsReport {
  std::uint64_t seed = 0;
  int trials = 0;
  int failures = 0;
  std::vector<TrialOutcome> outcomes;
};

// Randomized completeness check: bodies with lambda_n < 1 and admissible
// primes, random targets v; counts lifts that could not be found (expected
// zero by the underlying density argument).
TrialsReport run_lemma_trials(int count, std::uint64_t seed);

}  // namespace latcov
