#include "latcov/linalg.hpp"

#include <algorithm>

namespace latcov {

Int dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: size mismatch");
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: size mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const QVec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: size mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
  return s;
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vec_add: size mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vec_sub: size mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec vec_neg(const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Vec vec_scale(const Int& c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

bool is_zero_vec(const Vec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

QVec to_qvec(const Vec& a) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = Rat(a[i]);
  return r;
}

Int norm_sq(const Vec& a) { return dot(a, a); }

Int det(Mat m) {
  size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DimensionMismatch("det: not square");
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        Int num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

Rat det_q(QMat m) {
  size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DimensionMismatch("det_q: not square");
  Rat result = 1;
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != k) {
      std::swap(m[k], m[piv]);
      result = -result;
    }
    result *= m[k][k];
    Rat inv = 1 / m[k][k];
    for (size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Rat f = m[i][k] * inv;
      for (size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return result;
}

bool is_unimodular(const Mat& u) {
  size_t n = u.size();
  if (n == 0) return false;
  for (const auto& row : u)
    if (row.size() != n) return false;
  Int d = det(u);
  return d == 1 || d == -1;
}

QMat inverse_q(QMat m) {
  size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DimensionMismatch("inverse_q: not square");
  QMat inv(n, QVec(n, Rat(0)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) throw SingularMatrix("inverse_q: singular matrix");
    std::swap(m[k], m[piv]);
    std::swap(inv[k], inv[piv]);
    Rat d = m[k][k];
    for (size_t j = 0; j < n; ++j) {
      m[k][j] /= d;
      inv[k][j] /= d;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == k || m[i][k] == 0) continue;
      Rat f = m[i][k];
      for (size_t j = 0; j < n; ++j) {
        m[i][j] -= f * m[k][j];
        inv[i][j] -= f * inv[k][j];
      }
    }
  }
  return inv;
}

bool IncrementalRank::try_add(const Vec& v) {
  if (static_cast<int>(v.size()) != dim_)
    throw DimensionMismatch("IncrementalRank: wrong vector size");
  QVec w = to_qvec(v);
  for (const auto& row : rows_) {
    // Each stored row has leading coefficient 1 at its pivot.
    size_t p = 0;
    while (p < row.size() && row[p] == 0) ++p;
    if (p < w.size() && w[p] != 0) {
      Rat f = w[p];
      for (size_t j = p; j < w.size(); ++j) w[j] -= f * row[j];
    }
  }
  size_t p = 0;
  while (p < w.size() && w[p] == 0) ++p;
  if (p == w.size()) return false;
  Rat lead = w[p];
  for (size_t j = p; j < w.size(); ++j) w[j] /= lead;
  rows_.push_back(std::move(w));
  // Keep rows sorted by pivot so elimination stays triangular.
  std::sort(rows_.begin(), rows_.end(), [](const QVec& a, const QVec& b) {
    size_t pa = 0, pb = 0;
    while (pa < a.size() && a[pa] == 0) ++pa;
    while (pb < b.size() && b[pb] == 0) ++pb;
    return pa < pb;
  });
  return true;
}

int rank_of(const std::vector<Vec>& vs, int dim) {
  IncrementalRank r(dim);
  for (const auto& v : vs) r.try_add(v);
  return r.rank();
}

Vec generalized_cross(const std::vector<Vec>& rows, int n) {
  if (static_cast<int>(rows.size()) != n - 1)
    throw DimensionMismatch("generalized_cross: need n-1 rows");
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != n)
      throw DimensionMismatch("generalized_cross: row size mismatch");
  Vec normal(n);
  for (int j = 0; j < n; ++j) {
    Mat minor;
    minor.reserve(n - 1);
    for (const auto& r : rows) {
      Vec m;
      m.reserve(n - 1);
      for (int c = 0; c < n; ++c)
        if (c != j) m.push_back(r[c]);
      minor.push_back(std::move(m));
    }
    Int d = det(std::move(minor));
    normal[j] = (j % 2 == 0) ? d : -d;
  }
  return normal;
}

Int gcd_vec(const Vec& v) {
  Int g = 0;
  for (const auto& x : v) {
    Int a = abs(x);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  }
  return g;
}

Vec primitive_canonical(Vec v) {
  Int g = gcd_vec(v);
  if (g == 0) return v;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    break;
  }
  return v;
}

Mat gram(const std::vector<Vec>& basis) {
  size_t k = basis.size();
  Mat g(k, Vec(k));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j <= i; ++j) {
      g[i][j] = dot(basis[i], basis[j]);
      g[j][i] = g[i][j];
    }
  return g;
}

std::vector<Vec> integer_kernel_basis(const Vec& v) {
  size_t n = v.size();
  if (n < 2) throw DimensionMismatch("integer_kernel_basis: need dim >= 2");
  // Column-operation Euclid: maintain U (columns) with c = v * U; after
  // reduction c = (g, 0, ..., 0), so columns 2..n of U span the kernel.
  Vec c = v;
  Mat ucols(n, Vec(n, Int(0)));  // ucols[j] is the j-th column
  for (size_t j = 0; j < n; ++j) ucols[j][j] = 1;
  for (size_t i = 1; i < n; ++i) {
    if (c[i] == 0) continue;
    if (c[0] == 0) {
      std::swap(c[0], c[i]);
      std::swap(ucols[0], ucols[i]);
      continue;
    }
    Int g, a, b;
    mpz_gcdext(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(), c[0].get_mpz_t(),
               c[i].get_mpz_t());
    Int c0_g = c[0] / g, ci_g = c[i] / g;
    Vec col0 = ucols[0], coli = ucols[i];
    for (size_t r = 0; r < n; ++r) {
      ucols[0][r] = a * col0[r] + b * coli[r];
      ucols[i][r] = c0_g * coli[r] - ci_g * col0[r];
    }
    c[0] = g;
    c[i] = 0;
  }
  std::vector<Vec> basis;
  basis.reserve(n - 1);
  for (size_t j = 1; j < n; ++j) basis.push_back(ucols[j]);
  return basis;
}

}  // namespace latcov
