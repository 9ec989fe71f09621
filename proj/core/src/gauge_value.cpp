#include "latcov/gauge_value.hpp"

namespace latcov {

namespace {

int cmp_rat(const Rat& a, const Rat& b) {
  int c = ::cmp(a, b);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

// If s = (p/q)^2 for a rational p/q, returns true and sets root.
bool perfect_square_root(const Rat& s, Rat* root) {
  if (mpz_perfect_square_p(s.get_num().get_mpz_t()) &&
      mpz_perfect_square_p(s.get_den().get_mpz_t())) {
    Int rn = isqrt_floor(s.get_num());
    Int rd = isqrt_floor(s.get_den());
    *root = Rat(rn) / Rat(rd);
    return true;
  }
  return false;
}

}  // namespace

GaugeValue GaugeValue::rational(const Rat& v) {
  if (v < 0) throw PreconditionViolated("GaugeValue must be nonnegative");
  GaugeValue g;
  g.kind_ = Kind::Rational;
  g.stored_ = v;
  return g;
}

GaugeValue GaugeValue::sqrt_of(const Rat& square) {
  if (square < 0) throw PreconditionViolated("GaugeValue square must be nonnegative");
  GaugeValue g;
  g.kind_ = Kind::SqrtRational;
  g.stored_ = square;
  return g;
}

Rat GaugeValue::square() const {
  return kind_ == Kind::Rational ? stored_ * stored_ : stored_;
}

int GaugeValue::cmp(const GaugeValue& o) const {
  if (kind_ == Kind::Rational && o.kind_ == Kind::Rational)
    return cmp_rat(stored_, o.stored_);
  // Both values are nonnegative, so comparing squares is equivalent.
  return cmp_rat(square(), o.square());
}

int GaugeValue::cmp(const Rat& r) const {
  if (kind_ == Kind::Rational) return cmp_rat(stored_, r);
  if (r < 0) return 1;  // value >= 0 > r
  int c = cmp_rat(stored_, r * r);
  if (c != 0) return c;
  return 0;
}

GaugeValue GaugeValue::operator*(const GaugeValue& o) const {
  if (kind_ == Kind::Rational && o.kind_ == Kind::Rational)
    return rational(stored_ * o.stored_);
  return sqrt_of(square() * o.square());
}

RatInterval GaugeValue::enclosure() const {
  if (kind_ == Kind::Rational) return {stored_, stored_};
  Rat root;
  if (perfect_square_root(stored_, &root)) return {root, root};
  return sqrt_enclosure(stored_);
}

std::string GaugeValue::str() const {
  if (kind_ == Kind::Rational) return format_rational(stored_);
  Rat root;
  if (perfect_square_root(stored_, &root)) return format_rational(root);
  return "sqrt(" + format_rational(stored_) + ")";
}

bool triangle_leq(const GaugeValue& c, const GaugeValue& a, const GaugeValue& b) {
  if (c.kind() == GaugeValue::Kind::Rational &&
      a.kind() == GaugeValue::Kind::Rational &&
      b.kind() == GaugeValue::Kind::Rational)
    return c.stored() <= a.stored() + b.stored();
  // sqrt(C) <= sqrt(A) + sqrt(B)  <=>  C - A - B <= 2 sqrt(A B).
  Rat C = c.square(), A = a.square(), B = b.square();
  Rat t = C - A - B;
  if (t <= 0) return true;
  return t * t <= 4 * A * B;
}

}  // namespace latcov
