#include "latcov/oracle.hpp"

#include <algorithm>
#include <map>

#include "latcov/errors.hpp"
#include "latcov/lattice.hpp"

namespace latcov {

namespace {

Int det3(const Vec& a, const Vec& b, const Vec& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

struct Instance {
  long total = 0;  // including the origin
  std::vector<Vec> classes;  // primitive canonical direction reps, sorted
};

Instance collect_classes(const Body& body, const OracleOptions& opts) {
  auto pts = enumerate_points(body, Rat(1), opts.enumeration);
  if (static_cast<long>(pts.size()) > opts.max_points)
    throw InstanceTooLarge("instance has " + std::to_string(pts.size()) +
                           " lattice points; oracle cap is " + std::to_string(opts.max_points));
  Instance inst;
  inst.total = static_cast<long>(pts.size());
  std::map<Vec, bool> seen;
  for (const auto& p : pts) {
    bool zero = true;
    for (const auto& c : p) zero = zero && c == 0;
    if (zero) continue;
    seen[primitive_canonical(p)] = true;
  }
  inst.classes.reserve(seen.size());
  for (auto& kv : seen) inst.classes.push_back(kv.first);
  return inst;
}

int popcount_and(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  int c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += __builtin_popcountll(a[i] & b[i]);
  return c;
}

bool all_zero(const std::vector<std::uint64_t>& a) {
  for (auto w : a)
    if (w) return false;
  return true;
}

// Exact minimum set cover: universe = direction classes, sets = candidate
// hyperplanes.  Branches on the uncovered class with the fewest candidates.
struct CoverSearch {
  int classes;
  std::vector<std::vector<std::uint64_t>> masks;
  std::vector<std::vector<int>> covering;  // class -> candidate indices
  std::vector<int> best;
  std::vector<int> chosen;

  void run() {
    std::vector<std::uint64_t> unc((classes + 63) / 64, ~0ULL);
    if (classes % 64) unc.back() = (1ULL << (classes % 64)) - 1;
    greedy(unc);
    dfs(unc);
  }

  void greedy(std::vector<std::uint64_t> unc) {
    std::vector<int> pick;
    while (!all_zero(unc)) {
      int arg = -1, most = 0;
      for (std::size_t i = 0; i < masks.size(); ++i) {
        int c = popcount_and(masks[i], unc);
        if (c > most) {
          most = c;
          arg = static_cast<int>(i);
        }
      }
      if (arg < 0) throw InternalCheckFailed("class not covered by any candidate hyperplane");
      pick.push_back(arg);
      for (std::size_t w = 0; w < unc.size(); ++w) unc[w] &= ~masks[arg][w];
    }
    best = pick;
  }

  void dfs(const std::vector<std::uint64_t>& unc) {
    if (all_zero(unc)) {
      if (chosen.size() < best.size()) best = chosen;
      return;
    }
    int remaining = 0;
    for (auto w : unc) remaining += __builtin_popcountll(w);
    int most = 0;
    for (const auto& m : masks) most = std::max(most, popcount_and(m, unc));
    int lb = (remaining + most - 1) / most;
    if (chosen.size() + lb >= best.size()) return;
    // the uncovered class with the fewest covering candidates
    int cls = -1, fewest = 0;
    for (int c = 0; c < classes; ++c) {
      if (!(unc[c / 64] >> (c % 64) & 1)) continue;
      int k = static_cast<int>(covering[c].size());
      if (cls < 0 || k < fewest) {
        cls = c;
        fewest = k;
      }
    }
    for (int cand : covering[cls]) {
      auto next = unc;
      for (std::size_t w = 0; w < next.size(); ++w) next[w] &= ~masks[cand][w];
      chosen.push_back(cand);
      dfs(next);
      chosen.pop_back();
    }
  }
};

// Maximum subset of direction reps with every triple independent (n = 3).
struct GenPosSearch {
  const std::vector<Vec>* reps;
  std::vector<int> best;
  std::vector<int> chosen;

  bool compatible(int cand) const {
    for (std::size_t i = 0; i < chosen.size(); ++i)
      for (std::size_t j = i + 1; j < chosen.size(); ++j)
        if (det3((*reps)[chosen[i]], (*reps)[chosen[j]], (*reps)[cand]) == 0) return false;
    return true;
  }

  void dfs(int idx) {
    int n = static_cast<int>(reps->size());
    if (chosen.size() + static_cast<std::size_t>(n - idx) <= best.size()) return;
    if (idx == n) {
      if (chosen.size() > best.size()) best = chosen;
      return;
    }
    if (compatible(idx)) {
      chosen.push_back(idx);
      dfs(idx + 1);
      chosen.pop_back();
    }
    dfs(idx + 1);
  }
};

Vec perp2(const Vec& v) { return primitive_canonical({v[1], -v[0]}); }

}  // namespace

OracleResult exact_g(const Body& body, const OracleOptions& opts) {
  int n = body.dim();
  if (n > 3) throw InstanceTooLarge("exact_g supports n <= 3");
  Instance inst = collect_classes(body, opts);
  OracleResult res;
  res.instance_size = inst.total;
  if (inst.classes.empty()) {
    // only the origin; one subspace suffices
    Vec normal(n, 0);
    normal[n - 1] = 1;
    res.value = 1;
    res.cover_witness.push_back(hyperplane_through(normal));
    return res;
  }
  if (n == 2) {
    // each line through 0 covers exactly one direction class
    res.value = static_cast<long>(inst.classes.size());
    for (const auto& rep : inst.classes) res.cover_witness.push_back(hyperplane_through(perp2(rep)));
    std::sort(res.cover_witness.begin(), res.cover_witness.end());
    return res;
  }
  // n = 3: candidate planes spanned by pairs of independent reps, plus a
  // completion when all points share one direction.
  std::vector<Vec> normals;
  for (std::size_t i = 0; i < inst.classes.size(); ++i)
    for (std::size_t j = i + 1; j < inst.classes.size(); ++j) {
      Vec cr = generalized_cross({inst.classes[i], inst.classes[j]}, 3);
      bool zero = true;
      for (const auto& c : cr) zero = zero && c == 0;
      if (!zero) normals.push_back(primitive_canonical(cr));
    }
  if (normals.empty()) normals.push_back(primitive_canonical(integer_kernel_basis(inst.classes[0])[0]));
  std::sort(normals.begin(), normals.end());
  normals.erase(std::unique(normals.begin(), normals.end()), normals.end());

  CoverSearch search;
  search.classes = static_cast<int>(inst.classes.size());
  int blocks = (search.classes + 63) / 64;
  search.covering.resize(search.classes);
  for (std::size_t s = 0; s < normals.size(); ++s) {
    std::vector<std::uint64_t> mask(blocks, 0);
    for (int c = 0; c < search.classes; ++c)
      if (dot(normals[s], inst.classes[c]) == 0) {
        mask[c / 64] |= 1ULL << (c % 64);
        search.covering[c].push_back(static_cast<int>(s));
      }
    search.masks.push_back(std::move(mask));
  }
  for (int c = 0; c < search.classes; ++c)
    if (search.covering[c].empty())
      throw InternalCheckFailed("direction class missed by every candidate hyperplane");
  search.run();
  res.value = static_cast<long>(search.best.size());
  for (int s : search.best) res.cover_witness.push_back(hyperplane_through(normals[s]));
  std::sort(res.cover_witness.begin(), res.cover_witness.end());
  return res;
}

OracleResult exact_h(const Body& body, const OracleOptions& opts) {
  int n = body.dim();
  if (n > 3) throw InstanceTooLarge("exact_h supports n <= 3");
  Instance inst = collect_classes(body, opts);
  OracleResult res;
  res.instance_size = inst.total;
  // any set smaller than n is vacuously in general position
  long vacuous = std::min<long>(inst.total, n - 1);
  if (n == 2) {
    if (inst.classes.empty()) {
      res.value = vacuous;
      if (vacuous > 0) res.genpos_witness.push_back(Vec(n, 0));
      return res;
    }
    res.value = static_cast<long>(inst.classes.size());
    res.genpos_witness = inst.classes;
    return res;
  }
  GenPosSearch search;
  search.reps = &inst.classes;
  search.dfs(0);
  if (static_cast<long>(search.best.size()) >= vacuous) {
    res.value = static_cast<long>(search.best.size());
    for (int i : search.best) res.genpos_witness.push_back(inst.classes[i]);
  } else {
    res.value = vacuous;
    if (vacuous >= 1) res.genpos_witness.push_back(inst.classes.empty() ? Vec(n, 0) : inst.classes[0]);
    if (vacuous >= 2) {
      // a second point independent of nothing in particular: scale or origin
      if (inst.classes.size() >= 2)
        res.genpos_witness.push_back(inst.classes[1]);
      else
        res.genpos_witness.push_back(Vec(n, 0));
    }
  }
  std::sort(res.genpos_witness.begin(), res.genpos_witness.end());
  return res;
}

SandwichReport check_sandwich(const Body& body, const GenPosCertificate* cert,
                              const CoverFamily* cover, const OracleOptions& opts) {
  int n = body.dim();
  SandwichReport rep;
  rep.g = exact_g(body, opts).value;
  rep.h = exact_h(body, opts).value;
  if (rep.h > (n - 1) * rep.g)
    throw InternalCheckFailed("sandwich violated: h = " + rep.h.get_str() + " exceeds (n-1) g = " +
                              Int((n - 1) * rep.g).get_str());
  if (cert != nullptr) {
    rep.cert_size = static_cast<long>(cert->points.size());
    if (rep.cert_size > rep.h)
      throw InternalCheckFailed("general-position certificate larger than exact maximum");
  }
  if (cover != nullptr) {
    rep.cover_size = static_cast<long>(cover->hyperplanes.size());
    if (rep.g > rep.cover_size)
      throw InternalCheckFailed("covering family smaller than exact minimum");
  }
  return rep;
}

}  // namespace latcov
