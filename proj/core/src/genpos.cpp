#include "latcov/genpos.hpp"

#include <algorithm>
#include <random>

namespace latcov {

namespace {

Rat ratio(const Int& num, const Int& den) {
  Rat q(num);
  return q / Rat(den);
}

bool lex_less(const Vec& a, const Vec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

}  // namespace

LowerBoundReport lower_bound(const MinimaProfile& profile) {
  int n = profile.dim;
  if (n < 2 || static_cast<int>(profile.minima.size()) != n)
    throw MinimaNotComputed("lower_bound: profile lacks a full set of minima");
  const GaugeValue& ln = profile.minima.back();
  if (ln.cmp(Rat(1)) > 0)
    throw PreconditionViolated("lower_bound: lambda_n > 1");

  LowerBoundReport rep;
  rep.dim = n;
  bool have = false;
  for (int m = 1; m < n; ++m) {
    GaugeValue prod = profile.minima[m - 1];
    for (int i = m; i < n; ++i) prod = prod * profile.minima[i];
    // (lambda_m...lambda_n)^{-1/(n-m)} == (1/prod^2)^{1/(2(n-m))}
    Rat psq = prod.square();
    if (psq <= 0) throw InternalCheckFailed("zero successive minimum");
    RatInterval term = kth_root_enclosure(Rat(1) / psq, 2 * (n - m));
    if (!have) {
      rep.min_term = term;
      rep.m_star = m;
      have = true;
    } else {
      if (term.lo < rep.min_term.lo) {
        rep.min_term.lo = term.lo;
        rep.m_star = m;
      }
      rep.min_term.hi = std::min(rep.min_term.hi, term.hi);
    }
  }

  RatInterval enc = ln.enclosure();
  Rat gap_lo = 1 - enc.hi;
  Rat gap_hi = 1 - enc.lo;
  RatInterval one_minus{gap_lo < 0 ? Rat(0) : gap_lo, gap_hi < 0 ? Rat(0) : gap_hi};
  RatInterval base = interval_mul(one_minus, rep.min_term);
  Rat nn(16 * n * n);
  rep.bound = interval_scale(base, 1 / nn);
  rep.p_bound = interval_scale(base, 2 / nn);  // 8 n^2 denominator
  return rep;
}

std::optional<Int> largest_admissible_prime(const LowerBoundReport& report) {
  Int candidate = ceil_rat(report.p_bound.lo) - 1;
  while (candidate >= 2 && !is_prime(candidate)) --candidate;
  if (candidate < 2) return std::nullopt;
  return candidate;
}

std::vector<Vec> moment_curve(const Int& p, int n) {
  if (n < 2) throw PreconditionViolated("moment_curve: dimension must be >= 2");
  if (!is_prime(p)) throw PreconditionViolated("moment_curve: p must be prime");
  if (!p.fits_slong_p())
    throw InstanceTooLarge("moment_curve: p too large to enumerate");
  long pl = p.get_si();
  std::vector<Vec> out;
  out.reserve(pl + 1);
  for (long i = 0; i < pl; ++i) {
    Vec v(n);
    Int pw = 1;
    for (int c = 0; c < n; ++c) {
      v[c] = pw;
      pw *= i;
    }
    out.push_back(std::move(v));
  }
  Vec inf(n, Int(0));
  inf[n - 1] = 1;
  out.push_back(std::move(inf));
  return out;
}

Lift lemma_lift(const Body& body, const Vec& v, const Int& p,
                const EnumerationOptions& opts) {
  int n = body.dim();
  if (static_cast<int>(v.size()) != n)
    throw DimensionMismatch("lemma_lift: v has wrong dimension");
  if (p < 2) throw PreconditionViolated("lemma_lift: p must be at least 2");

  std::vector<Int> box = body.bounding_box(Rat(1));
  for (Int j = 1; j < p; ++j) {
    std::vector<long> lo(n), hi(n);
    bool empty = false;
    Int volume = 1;
    for (int i = 0; i < n; ++i) {
      Int loi = ceil_rat(ratio(-box[i] - j * v[i], p));
      Int hii = floor_rat(ratio(box[i] - j * v[i], p));
      if (loi > hii) {
        empty = true;
        break;
      }
      volume *= hii - loi + 1;
      if (!loi.fits_slong_p() || !hii.fits_slong_p())
        throw EnumerationBudgetExceeded("lemma_lift: shift box too large");
      lo[i] = loi.get_si();
      hi[i] = hii.get_si();
    }
    if (empty) continue;
    if (volume > Int(static_cast<unsigned long>(opts.max_grid_points)))
      throw EnumerationBudgetExceeded("lemma_lift: shift box holds " +
                                      volume.get_str() + " candidates");

    bool found = false;
    Lift best;
    Int best_nsq = 0;
    std::vector<long> cur(lo);
    Vec w(n), point(n);
    while (true) {
      for (int i = 0; i < n; ++i) {
        w[i] = cur[i];
        point[i] = j * v[i] + p * w[i];
      }
      if (body.gauge(point).leq(Rat(1))) {
        Int nsq = norm_sq(w);
        if (!found || nsq < best_nsq ||
            (nsq == best_nsq && lex_less(w, best.w))) {
          best = Lift{j, w, point};
          best_nsq = nsq;
          found = true;
        }
      }
      int i = n - 1;
      while (i >= 0 && cur[i] == hi[i]) {
        cur[i] = lo[i];
        --i;
      }
      if (i < 0) break;
      ++cur[i];
    }
    if (found) return best;
  }
  throw NoLiftFound("lemma_lift: no (j, w) with j*v + p*w inside the body");
}

GenPosCertificate build_general_position_with_prime(
    const Body& body, const Int& p, const EnumerationOptions& opts) {
  int n = body.dim();
  std::vector<Vec> curve = moment_curve(p, n);
  GenPosCertificate cert{p, body, {}, {}};
  cert.points.reserve(curve.size());
  cert.lifts.reserve(curve.size());
  for (size_t i = 0; i < curve.size(); ++i) {
    std::int64_t index =
        (i + 1 == curve.size()) ? -1 : static_cast<std::int64_t>(i);
    Lift lift;
    try {
      lift = lemma_lift(body, curve[i], p, opts);
    } catch (const NoLiftFound&) {
      throw NoLiftFound("no lift for moment-curve point " +
                        std::to_string(index) +
                        "; p was not admissible for this body");
    }
    cert.points.push_back(lift.point);
    cert.lifts.push_back(CertLift{index, lift.j, lift.w});
  }
  return cert;
}

GenPosCertificate build_general_position(const Body& body,
                                         const EnumerationOptions& opts) {
  MinimaProfile profile = successive_minima(body, opts);
  LowerBoundReport report = lower_bound(profile);
  std::optional<Int> p = largest_admissible_prime(report);
  if (!p)
    throw NoAdmissiblePrime(
        "no prime below the admissibility bound " +
        format_rational(report.p_bound.lo) +
        "; the minima leave no room (lambda_n too close to 1 or body too small)");
  return build_general_position_with_prime(body, *p, opts);
}

bool verify_general_position(const std::vector<Vec>& points, int n) {
  for (const auto& pt : points)
    if (static_cast<int>(pt.size()) != n)
      throw DimensionMismatch("verify_general_position: wrong dimension");
  int total = static_cast<int>(points.size());
  if (total < n) return true;

  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  Mat sub(n);
  while (true) {
    for (int i = 0; i < n; ++i) sub[i] = points[idx[i]];
    if (det(sub) == 0) return false;
    int i = n - 1;
    while (i >= 0 && idx[i] == total - n + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int k = i + 1; k < n; ++k) idx[k] = idx[k - 1] + 1;
  }
  return true;
}

namespace {

// Stable bounded sampler (uniform_int_distribution is not pinned across
// standard libraries; trial reports must be reproducible from the seed).
long sample_range(std::mt19937_64& rng, long lo, long hi) {
  unsigned long span = static_cast<unsigned long>(hi - lo + 1);
  unsigned long limit = (~0UL / span) * span;
  unsigned long draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return lo + static_cast<long>(draw % span);
}

std::vector<Int> primes_below(const Rat& bound) {
  std::vector<Int> out;
  for (Int q = 2; Rat(q) < bound; ++q)
    if (is_prime(q)) out.push_back(q);
  return out;
}

}  // namespace

TrialsReport run_lemma_trials(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  TrialsReport rep;
  rep.seed = seed;
  for (int t = 0; t < count; ++t) {
    Body body = Body::ball(2, 9);
    bool ready = false;
    std::vector<Int> primes;
    for (int attempt = 0; attempt < 100 && !ready; ++attempt) {
      switch (t % 4) {
        case 0:
          body = Body::ball(2, Rat(sample_range(rng, 9, 40)));
          break;
        case 1: {
          std::vector<Rat> h{Rat(sample_range(rng, 9, 40)),
                             Rat(sample_range(rng, 9, 40))};
          body = Body::box(h);
          break;
        }
        case 2:
          body = Body::ball(3, Rat(sample_range(rng, 29, 36)));
          break;
        default: {
          Mat u{{1, Int(sample_range(rng, -2, 2))}, {0, 1}};
          body = Body::ball(2, Rat(sample_range(rng, 12, 30))).transform(u);
          break;
        }
      }
      MinimaProfile profile = successive_minima(body);
      if (profile.minima.back().cmp(Rat(1)) >= 0) continue;
      primes = primes_below(lower_bound(profile).p_bound.lo);
      ready = !primes.empty();
    }
    if (!ready)
      throw InternalCheckFailed("trial body generation kept failing");

    Int p = primes[sample_range(rng, 0, static_cast<long>(primes.size()) - 1)];
    Vec v(body.dim());
    for (auto& c : v) c = sample_range(rng, -50, 50);

    TrialOutcome outcome;
    outcome.family = family_name(body.family());
    outcome.dim = body.dim();
    outcome.p = p;
    outcome.v = v;
    try {
      Lift lift = lemma_lift(body, v, p);
      outcome.found = true;
      if (!body.gauge(lift.point).leq(Rat(1)))
        throw InternalCheckFailed("lift landed outside the body");
    } catch (const NoLiftFound&) {
      outcome.found = false;
      ++rep.failures;
    }
    rep.outcomes.push_back(std::move(outcome));
    ++rep.trials;
  }
  return rep;
}

}  // namespace latcov
