#include "latcov/body.hpp"

#include <algorithm>

namespace latcov {

namespace {

constexpr int kMaxDim = 8;

void check_dim(int dim) {
  if (dim < 2 || dim > kMaxDim)
    throw InvalidBody("body dimension must be in [2, 8]");
}

Rat abs_rat(const Rat& q) { return q < 0 ? Rat(-q) : q; }

Rat quad_form(const QMat& m, const QVec& x) {
  size_t n = x.size();
  Rat s = 0;
  for (size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    Rat row = 0;
    for (size_t j = 0; j < n; ++j) row += m[i][j] * x[j];
    s += x[i] * row;
  }
  return s;
}

QMat transpose(const QMat& m) {
  size_t r = m.size(), c = m.empty() ? 0 : m[0].size();
  QMat t(c, QVec(r));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j) t[j][i] = m[i][j];
  return t;
}

QMat qmat_mul(const QMat& a, const QMat& b) {
  size_t r = a.size(), k = b.size(), c = b[0].size();
  QMat m(r, QVec(c, Rat(0)));
  for (size_t i = 0; i < r; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (size_t j = 0; j < c; ++j) m[i][j] += a[i][l] * b[l][j];
    }
  return m;
}

QMat mat_to_qmat(const Mat& m) {
  QMat q(m.size());
  for (size_t i = 0; i < m.size(); ++i) q[i] = to_qvec(m[i]);
  return q;
}

// Clears denominators so rational rows can go through integer rank machinery.
Vec qvec_to_int_direction(const QVec& q) {
  Int l = 1;
  for (const auto& x : q) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  Vec v(q.size());
  for (size_t i = 0; i < q.size(); ++i) {
    Rat scaled = q[i] * Rat(l);
    v[i] = scaled.get_num();
  }
  return v;
}

void check_spd(const QMat& a) {
  size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw InvalidBody("ellipsoid matrix must be square");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < i; ++j)
      if (a[i][j] != a[j][i]) throw InvalidBody("ellipsoid matrix must be symmetric");
  // Sylvester's criterion, exact.
  for (size_t k = 1; k <= n; ++k) {
    QMat lead(k, QVec(k));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) lead[i][j] = a[i][j];
    if (det_q(std::move(lead)) <= 0)
      throw InvalidBody("ellipsoid matrix must be positive definite");
  }
}

// Conservative integer bound: largest M with M <= sqrt(s); any |x_i| bounded
// by sqrt(s) then satisfies |x_i| <= M ... we need M >= true bound, so use
// the upper end of the enclosure and round down (integers only).
Int axis_bound_from_square(const Rat& s) {
  if (s < 0) return Int(-1);
  return floor_rat(sqrt_enclosure(s).hi);
}

}  // namespace

const char* family_name(BodyFamily f) {
  switch (f) {
    case BodyFamily::Ball: return "ball";
    case BodyFamily::Ellipsoid: return "ellipsoid";
    case BodyFamily::Box: return "box";
    case BodyFamily::CrossPolytope: return "crosspolytope";
    case BodyFamily::HPolytope: return "hpolytope";
  }
  return "?";
}

Body Body::ball(int dim, const Rat& r) {
  check_dim(dim);
  if (r <= 0) throw InvalidBody("ball radius must be positive");
  Body b;
  b.family_ = BodyFamily::Ball;
  b.dim_ = dim;
  b.radius_ = r;
  return b;
}

Body Body::ellipsoid(const QMat& a) {
  int dim = static_cast<int>(a.size());
  check_dim(dim);
  check_spd(a);
  Body b;
  b.family_ = BodyFamily::Ellipsoid;
  b.dim_ = dim;
  b.a_ = a;
  b.ainv_ = inverse_q(a);
  return b;
}

Body Body::box(const std::vector<Rat>& h) {
  int dim = static_cast<int>(h.size());
  check_dim(dim);
  for (const auto& x : h)
    if (x <= 0) throw InvalidBody("box half-widths must be positive");
  Body b;
  b.family_ = BodyFamily::Box;
  b.dim_ = dim;
  b.h_ = h;
  return b;
}

Body Body::cross_polytope(const std::vector<Rat>& s) {
  int dim = static_cast<int>(s.size());
  check_dim(dim);
  for (const auto& x : s)
    if (x <= 0) throw InvalidBody("cross-polytope scales must be positive");
  Body b;
  b.family_ = BodyFamily::CrossPolytope;
  b.dim_ = dim;
  b.s_ = s;
  return b;
}

Body Body::hpolytope(int dim, const std::vector<HRow>& rows) {
  check_dim(dim);
  if (rows.empty()) throw InvalidBody("hpolytope needs at least one row");
  std::vector<Vec> dirs;
  for (const auto& r : rows) {
    if (static_cast<int>(r.a.size()) != dim)
      throw InvalidBody("hpolytope row size mismatch");
    if (r.b <= 0) throw InvalidBody("hpolytope offsets must be positive");
    Vec d = qvec_to_int_direction(r.a);
    if (is_zero_vec(d)) throw InvalidBody("hpolytope row normal is zero");
    dirs.push_back(std::move(d));
  }
  if (rank_of(dirs, dim) != dim)
    throw InvalidBody("hpolytope is unbounded: row normals do not span R^n");
  Body b;
  b.family_ = BodyFamily::HPolytope;
  b.dim_ = dim;
  b.rows_ = rows;
  // Bounding ellipsoid Q = sum a_i a_i^T / b_i^2: every x in t*C satisfies
  // x^T Q x <= m t^2 (m rows), giving conservative per-axis bounds.
  QMat q(dim, QVec(dim, Rat(0)));
  for (const auto& r : rows) {
    Rat w = 1 / (r.b * r.b);
    for (int i = 0; i < dim; ++i) {
      if (r.a[i] == 0) continue;
      for (int j = 0; j < dim; ++j) q[i][j] += r.a[i] * r.a[j] * w;
    }
  }
  b.qinv_ = inverse_q(q);
  return b;
}

GaugeValue Body::gauge(const QVec& x) const {
  if (static_cast<int>(x.size()) != dim_)
    throw DimensionMismatch("gauge: vector dimension mismatch");
  switch (family_) {
    case BodyFamily::Ball:
      return GaugeValue::sqrt_of(dot(x, x) / (radius_ * radius_));
    case BodyFamily::Ellipsoid:
      return GaugeValue::sqrt_of(quad_form(a_, x));
    case BodyFamily::Box: {
      Rat m = 0;
      for (int i = 0; i < dim_; ++i) m = std::max(m, Rat(abs_rat(x[i]) / h_[i]));
      return GaugeValue::rational(m);
    }
    case BodyFamily::CrossPolytope: {
      Rat s = 0;
      for (int i = 0; i < dim_; ++i) s += abs_rat(x[i]) / s_[i];
      return GaugeValue::rational(s);
    }
    case BodyFamily::HPolytope: {
      Rat m = 0;
      for (const auto& r : rows_) m = std::max(m, Rat(abs_rat(dot(r.a, x)) / r.b));
      return GaugeValue::rational(m);
    }
  }
  throw InternalCheckFailed("gauge: unknown family");
}

GaugeValue Body::gauge(const Vec& x) const { return gauge(to_qvec(x)); }

GaugeValue Body::support(const QVec& x) const {
  if (static_cast<int>(x.size()) != dim_)
    throw DimensionMismatch("support: vector dimension mismatch");
  switch (family_) {
    case BodyFamily::Ball:
      return GaugeValue::sqrt_of(radius_ * radius_ * dot(x, x));
    case BodyFamily::Ellipsoid:
      return GaugeValue::sqrt_of(quad_form(ainv_, x));
    case BodyFamily::Box: {
      Rat s = 0;
      for (int i = 0; i < dim_; ++i) s += h_[i] * abs_rat(x[i]);
      return GaugeValue::rational(s);
    }
    case BodyFamily::CrossPolytope: {
      Rat m = 0;
      for (int i = 0; i < dim_; ++i) m = std::max(m, Rat(s_[i] * abs_rat(x[i])));
      return GaugeValue::rational(m);
    }
    case BodyFamily::HPolytope:
      throw UnsupportedFamily("support function not available for hpolytope");
  }
  throw InternalCheckFailed("support: unknown family");
}

GaugeValue Body::support(const Vec& x) const { return support(to_qvec(x)); }

std::vector<Int> Body::bounding_box(const Rat& t) const {
  if (t < 0) throw PreconditionViolated("bounding_box: negative dilate");
  std::vector<Int> m(dim_);
  switch (family_) {
    case BodyFamily::Ball:
      for (int i = 0; i < dim_; ++i) m[i] = floor_rat(t * radius_);
      break;
    case BodyFamily::Box:
      for (int i = 0; i < dim_; ++i) m[i] = floor_rat(t * h_[i]);
      break;
    case BodyFamily::CrossPolytope:
      for (int i = 0; i < dim_; ++i) m[i] = floor_rat(t * s_[i]);
      break;
    case BodyFamily::Ellipsoid:
      for (int i = 0; i < dim_; ++i)
        m[i] = axis_bound_from_square(t * t * ainv_[i][i]);
      break;
    case BodyFamily::HPolytope: {
      Rat rows_count(static_cast<long>(rows_.size()));
      for (int i = 0; i < dim_; ++i)
        m[i] = axis_bound_from_square(t * t * rows_count * qinv_[i][i]);
      break;
    }
  }
  return m;
}

std::vector<Int> Body::polar_bounding_box(const Rat& t) const {
  if (t < 0) throw PreconditionViolated("polar_bounding_box: negative dilate");
  std::vector<Int> m(dim_);
  switch (family_) {
    case BodyFamily::Ball:
      for (int i = 0; i < dim_; ++i) m[i] = floor_rat(t / radius_);
      break;
    case BodyFamily::Box:
      for (int i = 0; i < dim_; ++i) m[i] = floor_rat(t / h_[i]);
      break;
    case BodyFamily::CrossPolytope:
      for (int i = 0; i < dim_; ++i) m[i] = floor_rat(t / s_[i]);
      break;
    case BodyFamily::Ellipsoid:
      for (int i = 0; i < dim_; ++i)
        m[i] = axis_bound_from_square(t * t * a_[i][i]);
      break;
    case BodyFamily::HPolytope:
      throw UnsupportedFamily("polar bounding box not available for hpolytope");
  }
  return m;
}

Body Body::transform(const Mat& u) const {
  if (static_cast<int>(u.size()) != dim_)
    throw DimensionMismatch("transform: matrix dimension mismatch");
  for (const auto& row : u)
    if (static_cast<int>(row.size()) != dim_)
      throw DimensionMismatch("transform: matrix dimension mismatch");
  if (!is_unimodular(u)) throw NonUnimodular("transform requires |det U| = 1");

  QMat uq = mat_to_qmat(u);
  switch (family_) {
    case BodyFamily::Ball: {
      // {x : |Ux| <= r} = ellipsoid with A = U^T U / r^2.
      QMat a = qmat_mul(transpose(uq), uq);
      Rat r2 = radius_ * radius_;
      for (auto& row : a)
        for (auto& x : row) x /= r2;
      return ellipsoid(a);
    }
    case BodyFamily::Ellipsoid:
      return ellipsoid(qmat_mul(transpose(uq), qmat_mul(a_, uq)));
    case BodyFamily::Box: {
      std::vector<HRow> rows(dim_);
      for (int i = 0; i < dim_; ++i) rows[i] = {uq[i], h_[i]};
      return hpolytope(dim_, rows);
    }
    case BodyFamily::CrossPolytope: {
      // gauge(x) = sum_i |(Ux)_i| / s_i = max over sign patterns of the
      // linear form sum_i eps_i (Ux)_i / s_i; one row per pattern up to sign.
      std::vector<HRow> rows;
      int patterns = 1 << (dim_ - 1);
      rows.reserve(patterns);
      for (int mask = 0; mask < patterns; ++mask) {
        QVec a(dim_, Rat(0));
        for (int i = 0; i < dim_; ++i) {
          int eps = (i == 0) ? 1 : (((mask >> (i - 1)) & 1) ? -1 : 1);
          for (int j = 0; j < dim_; ++j) a[j] += Rat(eps) * uq[i][j] / s_[i];
        }
        rows.push_back({std::move(a), Rat(1)});
      }
      return hpolytope(dim_, rows);
    }
    case BodyFamily::HPolytope: {
      std::vector<HRow> rows;
      rows.reserve(rows_.size());
      for (const auto& r : rows_) {
        QVec a(dim_, Rat(0));
        for (int j = 0; j < dim_; ++j)
          for (int k = 0; k < dim_; ++k) a[j] += r.a[k] * uq[k][j];
        rows.push_back({std::move(a), r.b});
      }
      return hpolytope(dim_, rows);
    }
  }
  throw InternalCheckFailed("transform: unknown family");
}

const Rat& Body::ball_radius() const {
  if (family_ != BodyFamily::Ball) throw UnsupportedFamily("not a ball");
  return radius_;
}
const QMat& Body::ellipsoid_matrix() const {
  if (family_ != BodyFamily::Ellipsoid) throw UnsupportedFamily("not an ellipsoid");
  return a_;
}
const QMat& Body::ellipsoid_inverse() const {
  if (family_ != BodyFamily::Ellipsoid) throw UnsupportedFamily("not an ellipsoid");
  return ainv_;
}
const std::vector<Rat>& Body::box_halfwidths() const {
  if (family_ != BodyFamily::Box) throw UnsupportedFamily("not a box");
  return h_;
}
const std::vector<Rat>& Body::cross_scales() const {
  if (family_ != BodyFamily::CrossPolytope)
    throw UnsupportedFamily("not a cross-polytope");
  return s_;
}
const std::vector<HRow>& Body::hpolytope_rows() const {
  if (family_ != BodyFamily::HPolytope) throw UnsupportedFamily("not an hpolytope");
  return rows_;
}

}  // namespace latcov
