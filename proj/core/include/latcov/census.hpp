#pragma once

#include <string>
#include <utility>
#include <vector>

#include "latcov/cover.hpp"
#include "latcov/lattice.hpp"

namespace latcov {

// All hyperplanes through the origin spanned by n-1 linearly independent
// lattice points of the radius-r ball (canonical primitive normals).
std::vector<Hyperplane> enumerate_hyperplanes(int n, const Rat& r,
                                              const EnumerationOptions& opts = {});

struct CensusReport {
  int n = 0;
  Rat r;
  Int h_count;      // |H_r|
  Rat s_r;          // average lattice-point load over H_r
  double ratio = 0; // h_count / r^{n(n-1)}, diagnostic
  Int point_count;  // |rB^n cap Z^n|
};

CensusReport census(int n, const Rat& r, int threads = 1,
                    const EnumerationOptions& opts = {});

// Least-squares line through (xs, ys); returns {slope, intercept}.
std::pair<double, double> linear_fit(const std::vector<double>& xs,
                                     const std::vector<double>& ys);

struct ScalingFit {
  double slope = 0;
  double intercept = 0;
  std::vector<CensusReport> reports;
};

// log-log fit of h_count against r; needs >= 4 radii spanning a factor 2.
ScalingFit scaling_fit(int n, const std::vector<Rat>& radii, int threads = 1,
                       const EnumerationOptions& opts = {});

struct ClaimStats {
  int n = 0;
  Rat rho;
  Rat threshold;
  // Exact lambda_1(v)^2 of the lattice Z^n cap v-perp, sorted ascending, one
  // entry per canonical primitive v with |v| <= rho.
  std::vector<Rat> lambda1_sq;
  Int samples;
  Int exceed_count;  // lambda_1(v) >= threshold
  Rat min_sq, q25_sq, median_sq, q75_sq, max_sq;
};

ClaimStats claim_stats(int n, const Rat& rho, const Rat& threshold,
                       const EnumerationOptions& opts = {});

struct VolumeReport {
  std::string decimal;   // >= 30 significant digits
  RatInterval enclosure; // certified rational bounds; .hi for exact checks
};

// Volume of the n-dimensional Euclidean unit ball.
VolumeReport unit_ball_volume(int n);

// lambda_1(v)...lambda_{n-1}(v) <= 2^{n-1} |v| / omega_{n-1}, checked exactly
// against the rational upper bound for omega (conservative direction).
bool minkowski_bound_holds(const Vec& v, const std::vector<GaugeValue>& minima);
bool minkowski_bound_holds(const Vec& v);

struct DecompositionReport {
  Int lhs;      // sum over H of |H cap rB^n cap Z^n|
  Int rhs;      // |H_r| + sum over nonzero v of |{H : v in H}|
  Int h_count;
};

// Both sides of the load-decomposition identity, accumulated independently
// (hyperplane-major vs point-major); they must agree exactly.
DecompositionReport corollary_decomposition(int n, const Rat& r,
                                            const EnumerationOptions& opts = {});

}  // namespace latcov
