#pragma once

#include <string>

#include "latcov/rational.hpp"

namespace latcov {

// Exact nonnegative value of the form q or sqrt(q) with q rational.
// Gauge and support functions of the supported body families always land in
// this set, so all comparisons the toolkit needs are decidable exactly.
class GaugeValue {
 public:
  enum class Kind { Rational, SqrtRational };

  GaugeValue() : kind_(Kind::Rational), stored_(0) {}

  static GaugeValue rational(const Rat& v);
  static GaugeValue sqrt_of(const Rat& square);

  Kind kind() const { return kind_; }
  // The stored payload: the value itself (Rational) or its square.
  const Rat& stored() const { return stored_; }
  Rat square() const;
  bool is_zero() const { return stored_ == 0; }

  // Exact three-way comparison (-1, 0, +1); kinds may differ.
  int cmp(const GaugeValue& o) const;
  int cmp(const Rat& r) const;

  bool operator==(const GaugeValue& o) const { return cmp(o) == 0; }
  bool operator!=(const GaugeValue& o) const { return cmp(o) != 0; }
  bool operator<(const GaugeValue& o) const { return cmp(o) < 0; }
  bool operator<=(const GaugeValue& o) const { return cmp(o) <= 0; }
  bool operator>(const GaugeValue& o) const { return cmp(o) > 0; }
  bool operator>=(const GaugeValue& o) const { return cmp(o) >= 0; }

  GaugeValue operator*(const GaugeValue& o) const;

  bool leq(const Rat& t) const { return cmp(t) <= 0; }

  // [lo, hi] rational bounds; degenerate for Rational kind and for
  // SqrtRational whose square is a perfect square.
  RatInterval enclosure() const;

  // "p/q", or "sqrt(p/q)" when the value is irrational. Perfect squares are
  // displayed in rational form regardless of kind.
  std::string str() const;

 private:
  Kind kind_;
  Rat stored_;
};

// Exact test of c <= a + b for nonnegative GaugeValues (sums of square roots
// are not representable, but the comparison is still decidable).
bool triangle_leq(const GaugeValue& c, const GaugeValue& a, const GaugeValue& b);

}  // namespace latcov
