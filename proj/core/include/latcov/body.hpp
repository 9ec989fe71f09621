#pragma once

#include <vector>

#include "latcov/gauge_value.hpp"
#include "latcov/linalg.hpp"

namespace latcov {

enum class BodyFamily { Ball, Ellipsoid, Box, CrossPolytope, HPolytope };

const char* family_name(BodyFamily f);

// One slab |a.x| <= b of a symmetric H-polytope.
struct HRow {
  QVec a;
  Rat b;
};

// A 0-symmetric convex body with nonempty interior, dim in [2, 8].
// Gauge (Minkowski functional) and support function are evaluated exactly;
// both always take values representable as q or sqrt(q), q rational.
class Body {
 public:
  static Body ball(int dim, const Rat& r);
  static Body ellipsoid(const QMat& a);  // {x : x^T A x <= 1}, A SPD rational
  static Body box(const std::vector<Rat>& h);             // |x_i| <= h_i
  static Body cross_polytope(const std::vector<Rat>& s);  // conv{+-s_i e_i}
  static Body hpolytope(int dim, const std::vector<HRow>& rows);

  BodyFamily family() const { return family_; }
  int dim() const { return dim_; }
  // Support function (hence polar machinery) is implemented for every family
  // except general H-polytopes.
  bool polar_capable() const { return family_ != BodyFamily::HPolytope; }

  GaugeValue gauge(const QVec& x) const;
  GaugeValue gauge(const Vec& x) const;
  GaugeValue support(const QVec& x) const;
  GaugeValue support(const Vec& x) const;

  // Per-axis bounds M with t*C intersect Z^n inside [-M_i, M_i]; exact for
  // Ball/Box/CrossPolytope, conservative for Ellipsoid/HPolytope.
  std::vector<Int> bounding_box(const Rat& t) const;
  // Same for the polar body {x : support(x) <= t}.
  std::vector<Int> polar_bounding_box(const Rat& t) const;

  // Body whose point set is U^{-1} * (this body), U unimodular integer.
  // Lattice data is preserved: gauge'(x) = gauge(U x).
  Body transform(const Mat& u) const;

  const Rat& ball_radius() const;
  const QMat& ellipsoid_matrix() const;
  const QMat& ellipsoid_inverse() const;
  const std::vector<Rat>& box_halfwidths() const;
  const std::vector<Rat>& cross_scales() const;
  const std::vector<HRow>& hpolytope_rows() const;

 private:
  Body() : family_(BodyFamily::Ball), dim_(0) {}

  BodyFamily family_;
  int dim_;
  Rat radius_;            // Ball
  QMat a_, ainv_;         // Ellipsoid
  std::vector<Rat> h_;    // Box
  std::vector<Rat> s_;    // CrossPolytope
  std::vector<HRow> rows_;  // HPolytope
  QMat qinv_;             // HPolytope: inverse of Q = sum a_i a_i^T / b_i^2
};

}  // namespace latcov
