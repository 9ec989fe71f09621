#pragma once

#include <vector>

#include "latcov/rational.hpp"

namespace latcov {

using Vec = std::vector<Int>;    // integer vector
using QVec = std::vector<Rat>;   // rational vector
using Mat = std::vector<Vec>;    // rows
using QMat = std::vector<QVec>;  // rows

Int dot(const Vec& a, const Vec& b);
Rat dot(const QVec& a, const QVec& b);
Rat dot(const QVec& a, const Vec& b);

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_neg(const Vec& a);
Vec vec_scale(const Int& c, const Vec& a);
bool is_zero_vec(const Vec& a);
QVec to_qvec(const Vec& a);

Int norm_sq(const Vec& a);

// Exact determinant via fraction-free (Bareiss) elimination.
Int det(Mat m);
Rat det_q(QMat m);

bool is_unimodular(const Mat& u);  // square, |det| == 1

// Exact inverse of a square rational matrix; throws SingularMatrix.
QMat inverse_q(QMat m);

// Incremental exact rank tracker over Q for integer vectors.
class IncrementalRank {
 public:
  explicit IncrementalRank(int dim) : dim_(dim) {}
  // Adds v to the span if independent of what was added so far.
  bool try_add(const Vec& v);
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  int dim_;
  QMat rows_;  // reduced echelon rows
};

int rank_of(const std::vector<Vec>& vs, int dim);

// Generalized cross product: given n-1 rows of dimension n, returns the
// vector of signed maximal minors, orthogonal to every row; the zero vector
// iff the rows have rank < n-1. (n = 2: perp; n = 3: cross product.)
Vec generalized_cross(const std::vector<Vec>& rows, int n);

Int gcd_vec(const Vec& v);  // gcd of |entries|, 0 for the zero vector

// Divides by the gcd and flips sign so the first nonzero entry is positive.
// The zero vector is returned unchanged.
Vec primitive_canonical(Vec v);

// Gram matrix G[i][j] = basis[i] . basis[j].
Mat gram(const std::vector<Vec>& basis);

// Basis of the integer kernel {x : v.x = 0} for primitive v (n-1 vectors).
std::vector<Vec> integer_kernel_basis(const Vec& v);

}  // namespace latcov
