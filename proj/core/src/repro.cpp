#include "latcov/repro.hpp"

#include <cstdio>

#include "json.hpp"
#include "latcov/errors.hpp"
#include "latcov/json_io.hpp"
#include "latcov/oracle.hpp"

namespace latcov {

namespace {

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

void add(SuiteReport& rep, const std::string& name, bool pass, const std::string& detail) {
  rep.checks.push_back({name, pass, detail});
  rep.pass = rep.pass && pass;
}

std::string gauge_list(const std::vector<GaugeValue>& gs) {
  std::string s = "[";
  for (std::size_t i = 0; i < gs.size(); ++i) {
    if (i) s += ", ";
    s += gs[i].str();
  }
  return s + "]";
}

SuiteReport remark1() {
  SuiteReport rep;
  rep.suite = "remark1";

  auto cross = Body::cross_polytope({Rat(5), Rat(5), Rat(1)});
  auto box = Body::box({Rat(5), Rat(5), Rat(1)});
  auto mc = successive_minima(cross);
  auto mb = successive_minima(box);
  bool same = mc.minima.size() == mb.minima.size();
  for (std::size_t i = 0; same && i < mc.minima.size(); ++i)
    same = mc.minima[i] == mb.minima[i];
  std::vector<GaugeValue> expect = {GaugeValue::rational(Rat(1, 5)),
                                    GaugeValue::rational(Rat(1, 5)),
                                    GaugeValue::rational(Rat(1))};
  bool exact = mc.minima.size() == 3;
  for (std::size_t i = 0; exact && i < 3; ++i) exact = mc.minima[i] == expect[i];
  add(rep, "minima(C'_5) = minima(C_5) = (1/5, 1/5, 1)", same && exact,
      "cross " + gauge_list(mc.minima) + ", box " + gauge_list(mb.minima));

  auto g5 = exact_g(cross);
  add(rep, "g(C'_5) = 2", g5.value == 2, "g = " + g5.value.get_str());
  auto h5 = exact_h(cross);
  bool hverified = verify_general_position(h5.genpos_witness, 3);
  add(rep, "h(C'_5) = 3 (= n), witness verified", h5.value == 3 && hverified,
      "h = " + h5.value.get_str());

  for (long x : {2L, 3L, 4L}) {
    auto cx = Body::box({Rat(x), Rat(1)});
    auto g = exact_g(cx);
    auto h = exact_h(cx);
    std::string tag = "C_" + std::to_string(x) + " (n=2)";
    add(rep, tag + ": g >= 2x", g.value >= 2 * x,
        "g = " + g.value.get_str() + ", 2x = " + std::to_string(2 * x));
    add(rep, tag + ": 2h >= x", 2 * h.value >= x,
        "h = " + h.value.get_str() + ", x = " + std::to_string(x));
    add(rep, tag + ": g = h (direction classes)", g.value == h.value,
        "g = " + g.value.get_str() + ", h = " + h.value.get_str());
    auto sw = check_sandwich(cx);
    add(rep, tag + ": h <= (n-1) g", sw.h <= sw.g,
        "h = " + sw.h.get_str() + ", (n-1) g = " + sw.g.get_str());
  }
  return rep;
}

SuiteReport halasz_ball() {
  SuiteReport rep;
  rep.suite = "halasz-ball";
  for (long r : {25L, 50L, 100L}) {
    auto body = Body::ball(2, Rat(r));
    std::string tag = "ball r=" + std::to_string(r) + " n=2";
    auto profile = successive_minima(body);
    auto bound = lower_bound(profile);
    auto cert = build_general_position(body);
    bool inside = true;
    for (const auto& pt : cert.points) inside = inside && cert.body.gauge(pt).leq(Rat(1));
    add(rep, tag + ": every certificate point lies in C", inside,
        std::to_string(cert.points.size()) + " points, gauge <= 1 exact");
    bool genpos = verify_general_position(cert.points, 2);
    add(rep, tag + ": certificate in general position", genpos,
        "all pairs linearly independent");
    Int size = static_cast<long>(cert.points.size());
    bool count = size == cert.p + 1;
    add(rep, tag + ": size = p + 1", count,
        "p = " + cert.p.get_str() + ", size = " + size.get_str());
    bool beats = Rat(size) > bound.bound.hi;
    add(rep, tag + ": size exceeds evaluated lower bound", beats,
        "size = " + size.get_str() + " > bound hi = " + format_rational(bound.bound.hi));
  }
  return rep;
}

SuiteReport theorem2_coverage() {
  SuiteReport rep;
  rep.suite = "theorem2-coverage";
  std::vector<std::pair<std::string, Body>> instances;
  for (int n : {2, 3})
    for (long r : {2L, 4L, 8L})
      instances.emplace_back("ball r=" + std::to_string(r) + " n=" + std::to_string(n),
                             Body::ball(n, Rat(r)));
  instances.emplace_back("cross x=5 n=3", Body::cross_polytope({Rat(5), Rat(5), Rat(1)}));

  for (const auto& [tag, body] : instances) {
    CoverFamily fam;
    try {
      fam = build_cover(body);
    } catch (const Error& e) {
      add(rep, tag + ": exhaustive coverage", false, e.what());
      continue;
    }
    add(rep, tag + ": exhaustive coverage", true,
        std::to_string(fam.hyperplanes.size()) + " hyperplanes, m = " + std::to_string(fam.m));
    int k = static_cast<int>(fam.nu.size());
    Rat f(fam.f_alpha);
    bool pigeon = f > 2 * k * fam.alpha + 1;
    add(rep, tag + ": f(alpha) > 2k alpha + 1", pigeon,
        "f = " + fam.f_alpha.get_str() + ", 2k alpha + 1 = " +
            format_rational(2 * k * fam.alpha + 1));
    add(rep, tag + ": f(alpha) >= 32", fam.f_alpha >= 32, "f = " + fam.f_alpha.get_str());
    Int cap = pow_int(2, k) * fam.f_alpha;
    bool size_ok = Int(static_cast<long>(fam.hyperplanes.size())) <= cap;
    add(rep, tag + ": |family| <= 2^k f(alpha)", size_ok,
        "size = " + std::to_string(fam.hyperplanes.size()) + ", cap = " + cap.get_str());
  }
  return rep;
}

SuiteReport theorem3_scaling(int threads) {
  SuiteReport rep;
  rep.suite = "theorem3-scaling";
  auto fit2 = scaling_fit(2, {Rat(10), Rat(20), Rat(40), Rat(80)}, threads);
  add(rep, "n=2 log-log slope in [1.9, 2.1]", fit2.slope >= 1.9 && fit2.slope <= 2.1,
      "slope = " + fixed6(fit2.slope));
  double ratio80 = fit2.reports.back().ratio;
  add(rep, "n=2 ratio h/r^2 at r=80 in [0.9, 1.0]", ratio80 >= 0.9 && ratio80 <= 1.0,
      "ratio = " + fixed6(ratio80) + " (asymptote 3/pi ~ 0.954930)");
  auto fit3 = scaling_fit(3, {Rat(4), Rat(6), Rat(8), Rat(10)}, threads);
  add(rep, "n=3 log-log slope in [5.5, 6.5]", fit3.slope >= 5.5 && fit3.slope <= 6.5,
      "slope = " + fixed6(fit3.slope));
  rep.csv = census_csv(fit2.reports);
  return rep;
}

SuiteReport corollary_sr(int threads) {
  SuiteReport rep;
  rep.suite = "corollary-sr";
  std::vector<CensusReport> rows;
  for (long r : {10L, 20L, 40L, 80L}) {
    auto c = census(2, Rat(r), threads);
    bool in_window = c.s_r >= 3 && c.s_r <= 6;
    add(rep, "n=2 r=" + std::to_string(r) + ": s_r in [3, 6]", in_window,
        "s_r = " + format_rational(c.s_r) + " ~ " + fixed6(c.s_r.get_d()));
    rows.push_back(c);
  }
  for (auto [n, r] : {std::pair<int, long>{2, 10}, {2, 20}, {3, 3}, {3, 4}}) {
    auto d = corollary_decomposition(n, Rat(r));
    add(rep,
        "decomposition identity n=" + std::to_string(n) + " r=" + std::to_string(r),
        d.lhs == d.rhs, "lhs = " + d.lhs.get_str() + ", rhs = " + d.rhs.get_str());
  }
  rep.csv = census_csv(rows);
  return rep;
}

}  // namespace

std::vector<std::string> repro_suite_names() {
  return {"remark1", "halasz-ball", "theorem2-coverage", "theorem3-scaling", "corollary-sr"};
}

SuiteReport run_repro_suite(const std::string& name, int threads) {
  if (threads < 1) throw PreconditionViolated("threads must be >= 1");
  if (name == "remark1") return remark1();
  if (name == "halasz-ball") return halasz_ball();
  if (name == "theorem2-coverage") return theorem2_coverage();
  if (name == "theorem3-scaling") return theorem3_scaling(threads);
  if (name == "corollary-sr") return corollary_sr(threads);
  throw ParseError("unknown repro suite \"" + name + "\"");
}

std::string suite_to_json(const SuiteReport& report) {
  nlohmann::ordered_json obj;
  obj["suite"] = report.suite;
  obj["pass"] = report.pass;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    cj["detail"] = c.detail;
    checks.push_back(cj);
  }
  obj["checks"] = checks;
  if (!report.csv.empty()) obj["csv"] = report.csv;
  return obj.dump(2) + "\n";
}

}  // namespace latcov
