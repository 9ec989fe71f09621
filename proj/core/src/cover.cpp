#include "latcov/cover.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "minima_engine.hpp"

namespace latcov {

Hyperplane hyperplane_through(const Vec& normal) {
  if (is_zero_vec(normal))
    throw ZeroVector("hyperplane_through: zero normal");
  return Hyperplane{primitive_canonical(normal)};
}

PolarMinimaProfile polar_minima(const Body& body,
                                const EnumerationOptions& opts) {
  if (!body.polar_capable())
    throw UnsupportedFamily("polar_minima: no support function for " +
                            std::string(family_name(body.family())));
  detail::NormSystem sys{
      body.dim(),
      [&body](const Vec& x) { return body.support(x); },
      [&body](const Rat& t) { return body.polar_bounding_box(t); },
  };
  MinimaProfile raw = detail::minima_engine(sys, opts);
  PolarMinimaProfile profile;
  profile.dim = raw.dim;
  profile.mu = std::move(raw.minima);
  profile.witnesses = std::move(raw.witnesses);
  return profile;
}

AlphaChoice choose_alpha(const std::vector<Rat>& nu, int m, int n) {
  int k = n - m + 1;
  if (m <= 0 || m >= n)
    throw PreconditionViolated("choose_alpha: need 0 < m < n");
  if (static_cast<int>(nu.size()) != k)
    throw InvalidNu("choose_alpha: expected " + std::to_string(k) + " values");
  Rat prod_nu = 1;
  for (int i = 0; i < k; ++i) {
    if (nu[i] <= 0) throw InvalidNu("choose_alpha: nu must be positive");
    if (i > 0 && nu[i] <= nu[i - 1])
      throw InvalidNu("choose_alpha: nu must be strictly increasing");
    prod_nu *= nu[i];
  }

  // f(alpha) >= 16 k^{k/(k-1)} (prod nu)^{1/(k-1)}, raised to the (k-1):
  Rat rhs = Rat(pow_int(16, k - 1)) * Rat(pow_int(k, k)) * prod_nu;
  auto threshold_met = [&](const Int& f) { return pow_rat(Rat(f), k - 1) >= rhs; };

  // Walk the jump points of f (the multiples of the nu_i) in order.
  std::vector<Int> next(k, 1);
  Rat alpha;
  Int f;
  for (long guard = 0;; ++guard) {
    if (guard > 50000000L)
      throw InternalCheckFailed("choose_alpha: jump scan did not terminate");
    alpha = Rat(next[0]) * nu[0];
    for (int i = 1; i < k; ++i) {
      Rat cand = Rat(next[i]) * nu[i];
      if (cand < alpha) alpha = cand;
    }
    f = 1;
    for (int i = 0; i < k; ++i) f *= floor_rat(alpha / nu[i]) + 1;
    if (threshold_met(f)) break;
    for (int i = 0; i < k; ++i)
      if (Rat(next[i]) * nu[i] == alpha) ++next[i];
  }

  // Minimality forces alpha <= (16 k^{k/(k-1)})^{1/k} (prod nu)^{1/(k-1)},
  // hence 4 k alpha <= threshold <= f regardless of the nu scale.
  if (Rat(4 * k) * alpha > Rat(f))
    throw InternalCheckFailed("choose_alpha: 4k*alpha <= f(alpha) failed");
  if (prod_nu >= 1) {
    if (f < 32) throw InternalCheckFailed("choose_alpha: f(alpha) < 32");
    if (Rat(f) <= Rat(2 * k) * alpha + 1)
      throw InternalCheckFailed("choose_alpha: f(alpha) <= 2k*alpha + 1");
  }
  return AlphaChoice{alpha, f};
}

std::vector<Vec> build_D_alpha(const std::vector<Vec>& witnesses,
                               const std::vector<Rat>& nu, const Rat& alpha) {
  size_t k = witnesses.size();
  if (k == 0 || nu.size() != k)
    throw PreconditionViolated("build_D_alpha: size mismatch");
  if (alpha < 0) throw PreconditionViolated("build_D_alpha: negative alpha");
  int n = static_cast<int>(witnesses[0].size());
  if (rank_of(witnesses, n) != static_cast<int>(k))
    throw PreconditionViolated("build_D_alpha: witnesses not independent");

  std::vector<long> b(k);
  Int size = 1;
  for (size_t i = 0; i < k; ++i) {
    Int bi = floor_rat(alpha / nu[i]);
    if (!bi.fits_slong_p())
      throw EnumerationBudgetExceeded("build_D_alpha: digit bound too large");
    b[i] = bi.get_si();
    size *= 2 * b[i] + 1;
  }
  if (size > Int(100000000L))
    throw EnumerationBudgetExceeded("build_D_alpha: " + size.get_str() +
                                    " combinations");

  std::vector<Vec> out;
  out.reserve(size.get_ui());
  std::vector<long> a(k);
  for (size_t i = 0; i < k; ++i) a[i] = -b[i];
  while (true) {
    Vec d(n, Int(0));
    for (size_t i = 0; i < k; ++i)
      for (int c = 0; c < n; ++c) d[c] += a[i] * witnesses[i][c];
    out.push_back(std::move(d));
    size_t i = k;
    while (i > 0 && a[i - 1] == b[i - 1]) {
      a[i - 1] = -b[i - 1];
      --i;
    }
    if (i == 0) break;
    ++a[i - 1];
  }
  return out;
}

namespace {

// Digits of a nonzero element of D_alpha orthogonal to a point, i.e. a
// nonzero integer vector a with |a_i| <= b_i and sum a_i t_i = 0, where
// t_i is the scalar product of the point with witness i. The two digits of
// largest range are solved in closed form (linear Diophantine); the rest
// (the narrow ranges) are enumerated.
std::optional<std::vector<Int>> orthogonal_digits(const std::vector<Int>& t,
                                                  const std::vector<Int>& b) {
  size_t k = t.size();
  if (k == 1) {
    if (t[0] == 0 && b[0] >= 1) return std::vector<Int>{Int(1)};
    return std::nullopt;
  }

  std::vector<Int> a(k);
  std::vector<long> free_digit(k >= 2 ? k - 2 : 0);
  size_t nfree = k - 2;
  for (size_t i = 0; i < nfree; ++i) {
    if (!b[i + 2].fits_slong_p())
      throw EnumerationBudgetExceeded("digit bound too large to enumerate");
    free_digit[i] = -b[i + 2].get_si();
  }

  auto solve_pair = [&](const Int& s) -> bool {
    // a[0] t0 + a[1] t1 = -s within the digit box; false if impossible.
    const Int &t0 = t[0], &t1 = t[1];
    Int c = -s;
    bool prefix_zero = true;
    for (size_t i = 2; i < k; ++i)
      if (a[i] != 0) prefix_zero = false;

    if (t0 == 0 && t1 == 0) {
      if (c != 0) return false;
      if (!prefix_zero) {
        a[0] = 0;
        a[1] = 0;
        return true;
      }
      if (b[0] >= 1) {
        a[0] = 1;
        a[1] = 0;
        return true;
      }
      if (b[1] >= 1) {
        a[0] = 0;
        a[1] = 1;
        return true;
      }
      return false;
    }
    if (t0 == 0 || t1 == 0) {
      int zi = t0 == 0 ? 0 : 1;  // free digit
      int si = 1 - zi;           // solved digit
      if (c % t[si] != 0) return false;
      Int val = c / t[si];
      if (val < -b[si] || val > b[si]) return false;
      a[si] = val;
      a[zi] = 0;
      if (prefix_zero && val == 0) {
        if (b[zi] < 1) return false;
        a[zi] = 1;
      }
      return true;
    }

    Int g, u, v;
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), t0.get_mpz_t(),
               t1.get_mpz_t());
    if (c % g != 0) return false;
    Int scale = c / g;
    Int a0 = u * scale, a1 = v * scale;
    Int step0 = t1 / g, step1 = -t0 / g;  // a0 + s*step0, a1 + s*step1

    // Admissible s ranges for each coordinate; steps are nonzero here.
    auto range_for = [](const Int& base, const Int& step, const Int& bound,
                        Int& lo, Int& hi) {
      // -bound <= base + s*step <= bound
      Rat r_lo = Rat(-bound - base) / Rat(step);
      Rat r_hi = Rat(bound - base) / Rat(step);
      if (r_lo > r_hi) std::swap(r_lo, r_hi);
      lo = ceil_rat(r_lo);
      hi = floor_rat(r_hi);
    };
    Int lo0, hi0, lo1, hi1;
    range_for(a0, step0, b[0], lo0, hi0);
    range_for(a1, step1, b[1], lo1, hi1);
    Int lo = lo0 > lo1 ? lo0 : lo1;
    Int hi = hi0 < hi1 ? hi0 : hi1;
    if (lo > hi) return false;
    // Both t0, t1 nonzero: (a0, a1) = (0, 0) would need c = 0 and occurs for
    // at most one s; skip to a neighbor if that is the one we picked.
    for (Int s = lo; s <= hi; ++s) {
      a[0] = a0 + s * step0;
      a[1] = a1 + s * step1;
      if (prefix_zero && a[0] == 0 && a[1] == 0) continue;
      return true;
    }
    return false;
  };

  // Odometer over the narrow digits (indices 2..k-1).
  while (true) {
    Int s = 0;
    for (size_t i = 0; i < nfree; ++i) {
      a[i + 2] = free_digit[i];
      s += a[i + 2] * t[i + 2];
    }
    if (solve_pair(s)) return a;
    size_t i = nfree;
    while (i > 0 && Int(free_digit[i - 1]) == b[i + 1]) {
      free_digit[i - 1] = -b[i + 1].get_si();
      --i;
    }
    if (i == 0) break;
    ++free_digit[i - 1];
  }
  return std::nullopt;
}

std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

CoverFamily build_for_m(const Body& body, const PolarMinimaProfile& polar,
                        const std::vector<Vec>& pts, int m) {
  int n = body.dim();
  int k = n - m + 1;

  std::vector<Rat> nu(k);
  for (int i = 0; i < k; ++i) {
    RatInterval enc = polar.mu[i].enclosure();
    Rat bump(i + 1, 65536);
    bump.canonicalize();  // the two-argument mpq_class ctor does not reduce
    nu[i] = enc.hi * (1 + bump);
  }
  std::sort(nu.begin(), nu.end());
  for (int i = 1; i < k; ++i)
    if (nu[i] <= nu[i - 1]) nu[i] = nu[i - 1] * (1 + Rat(1, 1048576));

  AlphaChoice choice = choose_alpha(nu, m, n);

  std::vector<Vec> witnesses(polar.witnesses.begin(),
                             polar.witnesses.begin() + k);
  std::vector<Vec> digits_box = build_D_alpha(witnesses, nu, choice.alpha);

  std::set<Vec> normals;
  for (const auto& d : digits_box)
    if (!is_zero_vec(d)) normals.insert(primitive_canonical(d));

  std::vector<Int> b(k);
  for (int i = 0; i < k; ++i) b[i] = floor_rat(choice.alpha / nu[i]);

  for (const auto& u : pts) {
    if (is_zero_vec(u)) continue;
    std::vector<Int> t(k);
    for (int i = 0; i < k; ++i) t[i] = dot(u, witnesses[i]);
    auto digits = orthogonal_digits(t, b);
    if (!digits)
      throw CoverageVerificationFailed("lattice point " + vec_str(u) +
                                       " is covered by no hyperplane (m=" +
                                       std::to_string(m) + ")");
    Vec d(n, Int(0));
    Int check = 0;
    for (int i = 0; i < k; ++i) {
      check += (*digits)[i] * t[i];
      for (int c = 0; c < n; ++c) d[c] += (*digits)[i] * witnesses[i][c];
    }
    if (check != 0 || is_zero_vec(d) ||
        normals.find(primitive_canonical(d)) == normals.end())
      throw InternalCheckFailed("coverage witness normal is not in the family");
  }

  CoverFamily fam;
  fam.hyperplanes.reserve(normals.size());
  for (const auto& nrm : normals) fam.hyperplanes.push_back(Hyperplane{nrm});
  fam.m = m;
  fam.nu = std::move(nu);
  fam.alpha = choice.alpha;
  fam.witnesses = std::move(witnesses);
  fam.f_alpha = choice.f_alpha;

  Int size_cap = pow_int(2, k) * fam.f_alpha;
  if (Int(static_cast<long>(fam.hyperplanes.size())) > size_cap)
    throw InternalCheckFailed("cover family exceeds the 2^k f(alpha) cap");
  return fam;
}

}  // namespace

CoverFamily build_cover(const Body& body, int m, const EnumerationOptions& opts) {
  if (!body.polar_capable())
    throw UnsupportedFamily("build_cover: no support function for " +
                            std::string(family_name(body.family())));
  int n = body.dim();
  if (m != kAutoM && (m <= 0 || m >= n))
    throw PreconditionViolated("build_cover: need 0 < m < n");

  MinimaProfile primal = successive_minima(body, opts);
  if (primal.minima.back().cmp(Rat(1)) > 0)
    throw PreconditionViolated("build_cover: lambda_n > 1");

  PolarMinimaProfile polar = polar_minima(body, opts);
  for (int i = 0; i < n; ++i) {
    GaugeValue prod = polar.mu[i] * primal.minima[n - 1 - i];
    if (prod.cmp(Rat(1)) < 0)
      throw InternalCheckFailed("Mahler bound mu_i * lambda_{n-i+1} >= 1 failed");
  }

  std::vector<Vec> pts = enumerate_points(body, 1, opts);

  std::optional<CoverFamily> best;
  for (int cand = (m == kAutoM ? 1 : m); cand <= (m == kAutoM ? n - 1 : m);
       ++cand) {
    CoverFamily fam = build_for_m(body, polar, pts, cand);
    if (!best || fam.hyperplanes.size() < best->hyperplanes.size())
      best = std::move(fam);
  }
  return *best;
}

RatInterval theorem2_bound(const MinimaProfile& profile, int n, const Rat& c) {
  if (c < 0) throw PreconditionViolated("theorem2_bound: negative constant");
  LowerBoundReport rep = lower_bound(profile);
  RatInterval log_n = ln_enclosure(static_cast<unsigned>(n));
  Rat factor = c * Rat(pow_int(2, n)) * Rat(n * n);
  return interval_scale(interval_mul(log_n, rep.min_term), factor);
}

}  // namespace latcov
