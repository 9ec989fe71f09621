#pragma once

#include <vector>

#include "latcov/genpos.hpp"
#include "latcov/lattice.hpp"

namespace latcov {

// Linear hyperplane {x : normal.x = 0}; the normal is primitive with the
// first nonzero coordinate positive, so equal sets compare equal.
struct Hyperplane {
  Vec normal;

  bool contains(const Vec& x) const { return dot(normal, x) == 0; }
  bool operator==(const Hyperplane& o) const { return normal == o.normal; }
  bool operator<(const Hyperplane& o) const { return normal < o.normal; }
};

Hyperplane hyperplane_through(const Vec& normal);  // canonicalizes

struct PolarMinimaProfile {
  int dim = 0;
  std::vector<GaugeValue> mu;  // mu_1 <= ... <= mu_n
  std::vector<Vec> witnesses;  // independent, support(C, w_i) = mu_i
};

// Successive minima of the polar body: the gauge of the polar is the
// support function of the body itself.
PolarMinimaProfile polar_minima(const Body& body,
                                const EnumerationOptions& opts = {});

struct AlphaChoice {
  Rat alpha;
  Int f_alpha;  // prod(floor(alpha/nu_i) + 1)
};

// Minimal jump point alpha of f(alpha) = prod(floor(alpha/nu_i)+1) with
//   f(alpha) >= 16 k^{k/(k-1)} (nu_1...nu_k)^{1/(k-1)},   k = n-m+1,
// decided by the equivalent exact predicate f^{k-1} >= 16^{k-1} k^k prod(nu).
AlphaChoice choose_alpha(const std::vector<Rat>& nu, int m, int n);

// All integer combinations sum a_i w_i with |a_i| <= floor(alpha/nu_i).
std::vector<Vec> build_D_alpha(const std::vector<Vec>& witnesses,
                               const std::vector<Rat>& nu, const Rat& alpha);

struct CoverFamily {
  std::vector<Hyperplane> hyperplanes;  // sorted, deduplicated
  int m = 0;
  std::vector<Rat> nu;
  Rat alpha;
  std::vector<Vec> witnesses;
  Int f_alpha;
};

inline constexpr int kAutoM = 0;

// Covering family of hyperplanes for the lattice points of the body: normals
// are the nonzero digit combinations of polar-minima witnesses. Coverage is
// verified exhaustively against every lattice point of the body; a gap
// throws (the threshold inequality rules one out).
CoverFamily build_cover(const Body& body, int m = kAutoM,
                        const EnumerationOptions& opts = {});

// Diagnostic evaluation of c * 2^n n^2 log(n) * min_m (l_m...l_n)^{-1/(n-m)}
// (the covering-number upper bound with its unspecified absolute constant).
RatInterval theorem2_bound(const MinimaProfile& profile, int n,
                           const Rat& c = Rat(1));

}  // namespace latcov
