#include "latcov/census.hpp"

#include <mpfr.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <thread>

namespace latcov {

namespace {

using I64 = long long;
using P4 = std::array<I64, 4>;  // point or normal, padded to dim 4

Int to_int(I64 x) { return Int(static_cast<long>(x)); }

// Per-dimension radius caps keeping every product in the pipeline within
// int64: cross entries <= 2r^2 (n=3), 3x3 minors <= 6r^3 (n=4), and scalar
// products of normals with points <= n * max_entry * r.
void check_radius_cap(int n, const Rat& r) {
  static const long caps[5] = {0, 0, 1000000L, 10000L, 2000L};
  if (r > Rat(caps[n]))
    throw InstanceTooLarge("census: radius beyond the exact int64 range");
}

struct BallGrid {
  int n = 0;
  std::vector<P4> half;  // one representative per +-pair, first nonzero > 0
  Int total;             // |rB^n cap Z^n| = 2 * half.size() + 1
};

bool norm_leq(const P4& x, int n, I64 num, I64 den) {
  __int128 s = 0;
  for (int i = 0; i < n; ++i) s += static_cast<__int128>(x[i]) * x[i];
  return s * den <= static_cast<__int128>(num);
}

BallGrid ball_grid(int n, const Rat& r, const EnumerationOptions& opts) {
  if (n < 2 || n > 4)
    throw PreconditionViolated("census: dimension must be 2, 3, or 4");
  if (r < 1) throw PreconditionViolated("census: radius must be >= 1");
  check_radius_cap(n, r);

  Rat r2 = r * r;
  Int num_z = r2.get_num(), den_z = r2.get_den();
  if (!num_z.fits_slong_p() || !den_z.fits_slong_p())
    throw InstanceTooLarge("census: radius square does not fit int64");
  I64 num = num_z.get_si(), den = den_z.get_si();

  Int m_z = floor_rat(r);
  I64 m = m_z.get_si();
  Int volume = pow_int(2 * to_int(m) + 1, n);
  if (volume > Int(static_cast<unsigned long>(opts.max_grid_points)))
    throw EnumerationBudgetExceeded("census: grid of " + volume.get_str() +
                                    " candidates");

  BallGrid grid;
  grid.n = n;
  P4 x{};
  std::array<I64, 4> lo{}, hi{};
  for (int i = 0; i < n; ++i) {
    lo[i] = -m;
    hi[i] = m;
    x[i] = lo[i];
  }
  while (true) {
    bool canonical = false;  // first nonzero coordinate positive
    for (int i = 0; i < n; ++i) {
      if (x[i] != 0) {
        canonical = x[i] > 0;
        break;
      }
    }
    if (canonical && norm_leq(x, n, num, den)) grid.half.push_back(x);
    int i = n - 1;
    while (i >= 0 && x[i] == hi[i]) {
      x[i] = lo[i];
      --i;
    }
    if (i < 0) break;
    ++x[i];
  }
  grid.total = 2 * Int(static_cast<long>(grid.half.size())) + 1;
  return grid;
}

P4 canonical_normal(P4 v, int n) {
  I64 g = 0;
  for (int i = 0; i < n; ++i) g = std::gcd(g, v[i] < 0 ? -v[i] : v[i]);
  if (g > 1)
    for (int i = 0; i < n; ++i) v[i] /= g;
  for (int i = 0; i < n; ++i) {
    if (v[i] == 0) continue;
    if (v[i] < 0)
      for (int j = 0; j < n; ++j) v[j] = -v[j];
    break;
  }
  return v;
}

bool is_zero4(const P4& v, int n) {
  for (int i = 0; i < n; ++i)
    if (v[i] != 0) return false;
  return true;
}

std::vector<P4> normals_grid(const BallGrid& grid,
                             const EnumerationOptions& opts) {
  int n = grid.n;
  size_t h = grid.half.size();
  std::vector<P4> out;

  if (n == 2) {
    out.reserve(h);
    for (const auto& p : grid.half)
      out.push_back(canonical_normal(P4{p[1], -p[0], 0, 0}, 2));
  } else if (n == 3) {
    unsigned long long pairs = static_cast<unsigned long long>(h) * (h - 1) / 2;
    if (pairs > opts.max_grid_points)
      throw EnumerationBudgetExceeded("census: " + std::to_string(pairs) +
                                      " spanning pairs");
    out.reserve(pairs / 2);
    for (size_t i = 0; i < h; ++i) {
      const P4& a = grid.half[i];
      for (size_t j = i + 1; j < h; ++j) {
        const P4& b = grid.half[j];
        P4 c{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
             a[0] * b[1] - a[1] * b[0], 0};
        if (is_zero4(c, 3)) continue;
        out.push_back(canonical_normal(c, 3));
      }
    }
  } else {
    unsigned long long triples =
        static_cast<unsigned long long>(h) * (h - 1) * (h - 2) / 6;
    if (triples > opts.max_grid_points)
      throw EnumerationBudgetExceeded("census: " + std::to_string(triples) +
                                      " spanning triples");
    auto det3 = [](I64 a, I64 b, I64 c, I64 d, I64 e, I64 f, I64 g, I64 h2,
                   I64 i) { return a * (e * i - f * h2) - b * (d * i - f * g) +
                                   c * (d * h2 - e * g); };
    for (size_t i = 0; i < h; ++i)
      for (size_t j = i + 1; j < h; ++j)
        for (size_t k = j + 1; k < h; ++k) {
          const P4 &a = grid.half[i], &b = grid.half[j], &c = grid.half[k];
          P4 v{};
          // Signed maximal minors of the 3x4 matrix (a; b; c).
          v[0] = det3(a[1], a[2], a[3], b[1], b[2], b[3], c[1], c[2], c[3]);
          v[1] = -det3(a[0], a[2], a[3], b[0], b[2], b[3], c[0], c[2], c[3]);
          v[2] = det3(a[0], a[1], a[3], b[0], b[1], b[3], c[0], c[1], c[3]);
          v[3] = -det3(a[0], a[1], a[2], b[0], b[1], b[2], c[0], c[1], c[2]);
          if (is_zero4(v, 4)) continue;
          out.push_back(canonical_normal(v, 4));
        }
  }

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

I64 dot4(const P4& a, const P4& b, int n) {
  I64 s = 0;
  for (int i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

// Sum over hyperplanes of the number of lattice points on each, computed in
// deterministic chunks (thread partial sums are combined in chunk order).
Int hyperplane_load_sum(const BallGrid& grid, const std::vector<P4>& normals,
                        int threads) {
  int n = grid.n;
  size_t count = normals.size();
  if (count == 0) return 0;
  int t = std::max(1, threads);
  size_t chunk = (count + t - 1) / t;
  std::vector<long long> partial((count + chunk - 1) / chunk, 0);

  auto work = [&](size_t slot) {
    size_t beg = slot * chunk, end = std::min(count, beg + chunk);
    long long local = 0;
    for (size_t i = beg; i < end; ++i) {
      const P4& nrm = normals[i];
      long long on = 1;  // the origin
      for (const auto& p : grid.half)
        if (dot4(nrm, p, n) == 0) on += 2;
      local += on;
    }
    partial[slot] = local;
  };

  if (t == 1 || partial.size() == 1) {
    for (size_t s = 0; s < partial.size(); ++s) work(s);
  } else {
    std::vector<std::thread> pool;
    for (size_t s = 0; s < partial.size(); ++s) pool.emplace_back(work, s);
    for (auto& th : pool) th.join();
  }

  Int sum = 0;
  for (long long p : partial) sum += to_int(p);
  return sum;
}

Vec to_vec(const P4& p, int n) {
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = to_int(p[i]);
  return v;
}

}  // namespace

std::vector<Hyperplane> enumerate_hyperplanes(int n, const Rat& r,
                                              const EnumerationOptions& opts) {
  BallGrid grid = ball_grid(n, r, opts);
  std::vector<P4> normals = normals_grid(grid, opts);
  std::vector<Hyperplane> out;
  out.reserve(normals.size());
  for (const auto& nrm : normals) out.push_back(Hyperplane{to_vec(nrm, n)});
  return out;
}

CensusReport census(int n, const Rat& r, int threads,
                    const EnumerationOptions& opts) {
  BallGrid grid = ball_grid(n, r, opts);
  std::vector<P4> normals = normals_grid(grid, opts);

  CensusReport rep;
  rep.n = n;
  rep.r = r;
  rep.h_count = Int(static_cast<long>(normals.size()));
  rep.point_count = grid.total;

  Int load_sum;
  if (n == 2) {
    // Every nonzero point lies on exactly one line, the origin on all of
    // them; cross-check the closed form against per-line counting.
    load_sum = grid.total - 1 + rep.h_count;
    Rat r2 = r * r;
    Int num = r2.get_num(), den = r2.get_den();
    Int per_line = 0;
    for (const auto& nrm : normals) {
      P4 dir{-nrm[1], nrm[0], 0, 0};  // primitive direction of the line
      Int d2 = to_int(dir[0] * dir[0] + dir[1] * dir[1]);
      Int kmax = isqrt_floor(num / (den * d2));
      per_line += 2 * kmax + 1;
    }
    if (per_line != load_sum)
      throw InternalCheckFailed("line-load accounting mismatch at n=2");
  } else {
    load_sum = hyperplane_load_sum(grid, normals, threads);
  }

  if (rep.h_count > 0) rep.s_r = Rat(load_sum) / Rat(rep.h_count);
  rep.ratio = rep.h_count.get_d() /
              std::pow(r.get_d(), static_cast<double>(n) * (n - 1));
  return rep;
}

std::pair<double, double> linear_fit(const std::vector<double>& xs,
                                     const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2)
    throw InsufficientData("linear_fit: need at least two matching samples");
  double n = static_cast<double>(xs.size());
  double sx = std::accumulate(xs.begin(), xs.end(), 0.0);
  double sy = std::accumulate(ys.begin(), ys.end(), 0.0);
  double sxx = 0, sxy = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  double denom = n * sxx - sx * sx;
  if (denom == 0) throw InsufficientData("linear_fit: degenerate abscissae");
  double slope = (n * sxy - sx * sy) / denom;
  return {slope, (sy - slope * sx) / n};
}

ScalingFit scaling_fit(int n, const std::vector<Rat>& radii, int threads,
                       const EnumerationOptions& opts) {
  if (radii.size() < 4)
    throw InsufficientData("scaling_fit: need at least 4 radii");
  Rat lo = radii[0], hi = radii[0];
  for (const auto& r : radii) {
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  if (hi < 2 * lo)
    throw InsufficientData("scaling_fit: radii must span at least a factor of 2");

  ScalingFit fit;
  std::vector<double> xs, ys;
  for (const auto& r : radii) {
    CensusReport rep = census(n, r, threads, opts);
    xs.push_back(std::log(r.get_d()));
    ys.push_back(std::log(rep.h_count.get_d()));
    fit.reports.push_back(std::move(rep));
  }
  auto [slope, intercept] = linear_fit(xs, ys);
  fit.slope = slope;
  fit.intercept = intercept;
  return fit;
}

VolumeReport unit_ball_volume(int n) {
  if (n < 1) throw PreconditionViolated("unit_ball_volume: n must be >= 1");
  int k = n / 2;
  // n = 2k:   omega = pi^k / k!
  // n = 2k+1: omega = 2^n k! pi^k / n!
  Rat coef;
  if (n % 2 == 0)
    coef = Rat(1) / Rat(factorial(k));
  else
    coef = Rat(pow_int(2, n)) * Rat(factorial(k)) / Rat(factorial(n));

  mpfr_t pi_f, w;
  mpq_t q;
  mpq_init(q);
  mpfr_init2(pi_f, 256);
  mpfr_init2(w, 256);

  RatInterval pi_enc;
  mpfr_const_pi(pi_f, MPFR_RNDD);
  mpfr_get_q(q, pi_f);
  pi_enc.lo = Rat(q);
  mpfr_const_pi(pi_f, MPFR_RNDU);
  mpfr_get_q(q, pi_f);
  pi_enc.hi = Rat(q);

  RatInterval pik{Rat(1), Rat(1)};
  for (int i = 0; i < k; ++i) pik = interval_mul(pik, pi_enc);

  VolumeReport rep;
  rep.enclosure = interval_scale(pik, coef);

  mpfr_const_pi(pi_f, MPFR_RNDN);
  mpfr_pow_ui(w, pi_f, static_cast<unsigned long>(k), MPFR_RNDN);
  mpfr_mul_q(w, w, coef.get_mpq_t(), MPFR_RNDN);
  char buf[128];
  mpfr_snprintf(buf, sizeof buf, "%.35Re", w);
  rep.decimal = buf;

  mpfr_clear(pi_f);
  mpfr_clear(w);
  mpq_clear(q);
  return rep;
}

bool minkowski_bound_holds(const Vec& v, const std::vector<GaugeValue>& minima) {
  int n = static_cast<int>(v.size());
  if (static_cast<int>(minima.size()) != n - 1)
    throw PreconditionViolated("minkowski_bound_holds: need n-1 minima");
  Rat lhs_sq = 1;
  for (const auto& m : minima) lhs_sq *= m.square();
  Rat omega_hi = unit_ball_volume(n - 1).enclosure.hi;
  Rat rhs_sq = Rat(pow_int(4, n - 1)) * Rat(norm_sq(v)) / (omega_hi * omega_hi);
  return lhs_sq <= rhs_sq;
}

bool minkowski_bound_holds(const Vec& v) {
  return minkowski_bound_holds(v, minima_of_sublattice(orthogonal_lattice(v)));
}

ClaimStats claim_stats(int n, const Rat& rho, const Rat& threshold,
                       const EnumerationOptions& opts) {
  if (n < 2) throw PreconditionViolated("claim_stats: n must be >= 2");
  if (rho < 1) throw PreconditionViolated("claim_stats: rho must be >= 1");

  ClaimStats stats;
  stats.n = n;
  stats.rho = rho;
  stats.threshold = threshold;
  stats.exceed_count = 0;

  Rat thr_sq = threshold * threshold;
  std::vector<Vec> pts = enumerate_points(Body::ball(n, rho), 1, opts);
  for (const auto& v : pts) {
    if (is_zero_vec(v)) continue;
    bool canonical = false;
    for (const auto& c : v) {
      if (c != 0) {
        canonical = c > 0;
        break;
      }
    }
    if (!canonical || gcd_vec(v) != 1) continue;

    auto minima = minima_of_sublattice(orthogonal_lattice(v), opts);
    if (!minkowski_bound_holds(v, minima))
      throw InternalCheckFailed("Minkowski bound failed for a sampled vector");
    Rat l1sq = minima.front().square();
    if (threshold < 0 || l1sq >= thr_sq) ++stats.exceed_count;
    stats.lambda1_sq.push_back(std::move(l1sq));
  }

  if (stats.lambda1_sq.empty())
    throw InternalCheckFailed("claim_stats: no primitive vectors sampled");
  std::sort(stats.lambda1_sq.begin(), stats.lambda1_sq.end());
  stats.samples = Int(static_cast<long>(stats.lambda1_sq.size()));
  size_t last = stats.lambda1_sq.size() - 1;
  stats.min_sq = stats.lambda1_sq.front();
  stats.q25_sq = stats.lambda1_sq[last / 4];
  stats.median_sq = stats.lambda1_sq[last / 2];
  stats.q75_sq = stats.lambda1_sq[(3 * last) / 4];
  stats.max_sq = stats.lambda1_sq.back();
  return stats;
}

DecompositionReport corollary_decomposition(int n, const Rat& r,
                                            const EnumerationOptions& opts) {
  BallGrid grid = ball_grid(n, r, opts);
  std::vector<P4> normals = normals_grid(grid, opts);

  DecompositionReport rep;
  rep.h_count = Int(static_cast<long>(normals.size()));

  // Hyperplane-major accumulation.
  rep.lhs = hyperplane_load_sum(grid, normals, 1);

  // Point-major accumulation: each +-pair contributes twice.
  Int incidences = 0;
  for (const auto& p : grid.half) {
    long long on = 0;
    for (const auto& nrm : normals)
      if (dot4(nrm, p, n) == 0) ++on;
    incidences += 2 * to_int(on);
  }
  rep.rhs = rep.h_count + incidences;
  return rep;
}

}  // namespace latcov
