#include "latcov/lattice.hpp"

#include <algorithm>
#include <utility>

#include "minima_engine.hpp"

namespace latcov {

namespace detail {

std::vector<Vec> enumerate_norm_ball(const NormSystem& sys, const Rat& t,
                                     const EnumerationOptions& opts) {
  std::vector<Int> m = sys.box(t);
  Int volume = 1;
  for (const auto& mi : m) {
    if (mi < 0) return {};  // empty box (can happen for t < smallest reach)
    volume *= 2 * mi + 1;
  }
  if (volume > Int(static_cast<unsigned long>(opts.max_grid_points)))
    throw EnumerationBudgetExceeded(
        "enumeration box holds " + volume.get_str() + " candidates (budget " +
        std::to_string(opts.max_grid_points) + ")");

  int n = sys.dim;
  std::vector<long> lo(n), hi(n), cur(n);
  for (int i = 0; i < n; ++i) {
    if (!m[i].fits_slong_p())
      throw EnumerationBudgetExceeded("axis bound does not fit a machine word");
    hi[i] = m[i].get_si();
    lo[i] = -hi[i];
    cur[i] = lo[i];
  }

  std::vector<Vec> out;
  Vec x(n);
  while (true) {
    for (int i = 0; i < n; ++i) x[i] = cur[i];
    if (sys.norm(x).leq(t)) out.push_back(x);
    int i = n - 1;
    while (i >= 0 && cur[i] == hi[i]) {
      cur[i] = lo[i];
      --i;
    }
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

namespace {

// Smallest power of two (possibly negative exponent) >= q > 0.
Rat pow2_at_least(const Rat& q) {
  Rat t(1);
  if (t >= q) {
    while (t / 2 >= q) t /= 2;
  } else {
    while (t < q) t *= 2;
  }
  return t;
}

bool lex_less(const Vec& a, const Vec& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

// Witnesses keep their magnitude; only the sign is canonicalized
// (symmetric norms are even, so the gauge is unchanged).
Vec canonical_sign(Vec v) {
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    break;
  }
  return v;
}

}  // namespace

MinimaProfile minima_engine(const NormSystem& sys, const EnumerationOptions& opts) {
  int n = sys.dim;
  // Starting dilate: reach the cheapest axis vector, then double until the
  // enumerated points span R^n. The final enumeration is complete for its
  // dilate, so the greedy sweep below is exact.
  Rat start;
  bool have = false;
  for (int i = 0; i < n; ++i) {
    Vec e(n, Int(0));
    e[i] = 1;
    Rat hi = sys.norm(e).enclosure().hi;
    if (!have || hi < start) {
      start = hi;
      have = true;
    }
  }
  if (start <= 0) throw InternalCheckFailed("axis vector with zero norm");
  Rat t = pow2_at_least(start);

  std::vector<Vec> pts;
  for (int round = 0;; ++round) {
    if (round > 256) throw InternalCheckFailed("minima dilate growth did not stop");
    pts = enumerate_norm_ball(sys, t, opts);
    std::vector<Vec> nonzero;
    nonzero.reserve(pts.size());
    for (auto& p : pts)
      if (!is_zero_vec(p)) nonzero.push_back(std::move(p));
    if (rank_of(nonzero, n) == n) {
      pts = std::move(nonzero);
      break;
    }
    t *= 2;
  }

  // Sort by exact norm, ties broken lexicographically, then greedily extend
  // an independent set; the i-th pick attains lambda_i.
  std::vector<std::pair<GaugeValue, Vec>> scored;
  scored.reserve(pts.size());
  for (auto& p : pts) {
    GaugeValue g = sys.norm(p);
    scored.emplace_back(std::move(g), std::move(p));
  }
  std::sort(scored.begin(), scored.end(),
            [](const auto& a, const auto& b) {
              int c = a.first.cmp(b.first);
              if (c != 0) return c < 0;
              return lex_less(a.second, b.second);
            });

  MinimaProfile profile;
  profile.dim = n;
  IncrementalRank rank(n);
  for (auto& [g, p] : scored) {
    if (rank.rank() == n) break;
    if (rank.try_add(p)) {
      profile.minima.push_back(g);
      profile.witnesses.push_back(canonical_sign(p));
    }
  }
  if (static_cast<int>(profile.minima.size()) != n)
    throw InternalCheckFailed("minima engine failed to reach full rank");
  return profile;
}

}  // namespace detail

namespace {

Vec canonical_sign(Vec v) {
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    break;
  }
  return v;
}

}  // namespace

std::vector<Vec> enumerate_points(const Body& body, const Rat& t,
                                  const EnumerationOptions& opts) {
  if (t < 0) throw PreconditionViolated("enumerate_points: negative dilate");
  detail::NormSystem sys{
      body.dim(),
      [&body](const Vec& x) { return body.gauge(x); },
      [&body](const Rat& s) { return body.bounding_box(s); },
  };
  return detail::enumerate_norm_ball(sys, t, opts);
}

MinimaProfile successive_minima(const Body& body, const EnumerationOptions& opts) {
  detail::NormSystem sys{
      body.dim(),
      [&body](const Vec& x) { return body.gauge(x); },
      [&body](const Rat& s) { return body.bounding_box(s); },
  };
  return detail::minima_engine(sys, opts);
}

bool is_primitive(const Vec& v) {
  if (is_zero_vec(v)) throw ZeroVector("is_primitive: zero vector");
  return gcd_vec(v) == 1;
}

OrthogonalLattice orthogonal_lattice(const Vec& v) {
  if (is_zero_vec(v)) throw ZeroVector("orthogonal_lattice: zero vector");
  if (gcd_vec(v) != 1) throw NotPrimitive("orthogonal_lattice: v not primitive");
  OrthogonalLattice lat;
  lat.v = v;
  lat.basis = integer_kernel_basis(v);
  for (auto& b : lat.basis) {
    if (dot(b, v) != 0)
      throw InternalCheckFailed("kernel basis vector not orthogonal to v");
    b = canonical_sign(std::move(b));
  }
  Int g = det(gram(lat.basis));
  Int expected = norm_sq(v);
  if (g != expected)
    throw InternalCheckFailed("Gram determinant " + g.get_str() +
                              " != |v|^2 = " + expected.get_str());
  lat.det_sq = Rat(g);
  return lat;
}

std::vector<GaugeValue> minima_of_sublattice(const OrthogonalLattice& lat,
                                             const EnumerationOptions& opts) {
  size_t k = lat.basis.size();
  if (k == 0) throw PreconditionViolated("empty sublattice basis");
  Mat g = gram(lat.basis);
  if (k == 1) {
    // One generator; its length is the only minimum.
    return {GaugeValue::sqrt_of(Rat(g[0][0]))};
  }
  QMat gq(k);
  for (size_t i = 0; i < k; ++i) gq[i] = to_qvec(g[i]);
  QMat ginv = inverse_q(gq);

  // Coefficient-space norm |y|_G = sqrt(y^T G y); box from the inverse Gram.
  detail::NormSystem sys{
      static_cast<int>(k),
      [&g, k](const Vec& y) {
        Rat s = 0;
        for (size_t i = 0; i < k; ++i) {
          if (y[i] == 0) continue;
          Int row = 0;
          for (size_t j = 0; j < k; ++j) row += g[i][j] * y[j];
          s += Rat(y[i] * row);
        }
        return GaugeValue::sqrt_of(s);
      },
      [&ginv, k](const Rat& t) {
        std::vector<Int> m(k);
        for (size_t i = 0; i < k; ++i)
          m[i] = floor_rat(sqrt_enclosure(t * t * ginv[i][i]).hi);
        return m;
      },
  };
  return detail::minima_engine(sys, opts).minima;
}

}  // namespace latcov
