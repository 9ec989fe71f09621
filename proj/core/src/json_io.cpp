#include "latcov/json_io.hpp"

#include <cstdio>

#include "json.hpp"
#include "latcov/errors.hpp"

namespace latcov {

namespace {

using json = nlohmann::ordered_json;

json rat_json(const Rat& q) { return format_rational(q); }

json int_json(const Int& n) {
  if (n.fits_slong_p()) return static_cast<std::int64_t>(n.get_si());
  return n.get_str();  // decimal string once past 64 bits
}

json vec_json(const Vec& v) {
  json arr = json::array();
  for (const auto& c : v) arr.push_back(int_json(c));
  return arr;
}

json vecs_json(const std::vector<Vec>& vs) {
  json arr = json::array();
  for (const auto& v : vs) arr.push_back(vec_json(v));
  return arr;
}

json gauges_json(const std::vector<GaugeValue>& gs) {
  json arr = json::array();
  for (const auto& g : gs) arr.push_back(g.str());
  return arr;
}

json rats_json(const std::vector<Rat>& qs) {
  json arr = json::array();
  for (const auto& q : qs) arr.push_back(rat_json(q));
  return arr;
}

json interval_json(const RatInterval& iv) {
  json obj;
  obj["lo"] = rat_json(iv.lo);
  obj["hi"] = rat_json(iv.hi);
  obj["exact"] = iv.exact();
  return obj;
}

std::string finish(const json& obj) { return obj.dump(2) + "\n"; }

const json& field(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

Rat rat_of(const json& j, const char* what) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<std::int64_t>()));
  } catch (const Error& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
  throw ParseError(std::string(what) + ": expected \"p/q\" string or integer");
}

Int int_of(const json& j, const char* what) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    Int n;
    if (n.set_str(j.get<std::string>(), 10) != 0)
      throw ParseError(std::string(what) + ": bad integer literal");
    return n;
  }
  throw ParseError(std::string(what) + ": expected integer");
}

std::vector<Rat> rat_list(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected array");
  std::vector<Rat> out;
  for (const auto& e : j) out.push_back(rat_of(e, what));
  return out;
}

struct Csv {
  std::string text;
  void cell(const std::string& s, bool last) {
    text += s;
    text += last ? '\n' : ',';
  }
};

std::string ratio_str(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

}  // namespace

Body parse_body_json(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("body descriptor must be a JSON object");
  std::string family = field(root, "family").is_string()
                           ? field(root, "family").get<std::string>()
                           : throw ParseError("\"family\" must be a string");
  const json& dim_j = field(root, "dim");
  if (!dim_j.is_number_integer()) throw ParseError("\"dim\" must be an integer");
  int dim = dim_j.get<int>();
  const json& params = field(root, "params");
  if (!params.is_object()) throw ParseError("\"params\" must be an object");

  if (family == "ball") return Body::ball(dim, rat_of(field(params, "r"), "params.r"));
  if (family == "box") {
    auto h = rat_list(field(params, "h"), "params.h");
    if (static_cast<int>(h.size()) != dim) throw ParseError("params.h length must equal dim");
    return Body::box(h);
  }
  if (family == "crosspolytope") {
    auto s = rat_list(field(params, "s"), "params.s");
    if (static_cast<int>(s.size()) != dim) throw ParseError("params.s length must equal dim");
    return Body::cross_polytope(s);
  }
  if (family == "ellipsoid") {
    const json& rows = field(params, "a");
    if (!rows.is_array() || static_cast<int>(rows.size()) != dim)
      throw ParseError("params.a must be a dim x dim matrix");
    QMat a;
    for (const auto& row : rows) {
      auto r = rat_list(row, "params.a row");
      if (static_cast<int>(r.size()) != dim) throw ParseError("params.a must be a dim x dim matrix");
      a.push_back(std::move(r));
    }
    return Body::ellipsoid(a);
  }
  if (family == "hpolytope") {
    const json& rows = field(params, "rows");
    if (!rows.is_array() || rows.empty()) throw ParseError("params.rows must be a nonempty array");
    std::vector<HRow> hr;
    for (const auto& row : rows) {
      if (!row.is_object()) throw ParseError("params.rows entries must be objects");
      HRow r;
      r.a = rat_list(field(row, "a"), "row.a");
      if (static_cast<int>(r.a.size()) != dim) throw ParseError("row.a length must equal dim");
      r.b = rat_of(field(row, "b"), "row.b");
      hr.push_back(std::move(r));
    }
    return Body::hpolytope(dim, hr);
  }
  throw ParseError("unknown family \"" + family + "\"");
}

std::string body_to_json(const Body& body) {
  json obj;
  obj["family"] = family_name(body.family());
  obj["dim"] = body.dim();
  json params;
  switch (body.family()) {
    case BodyFamily::Ball:
      params["r"] = rat_json(body.ball_radius());
      break;
    case BodyFamily::Ellipsoid: {
      json rows = json::array();
      for (const auto& row : body.ellipsoid_matrix()) rows.push_back(rats_json(row));
      params["a"] = rows;
      break;
    }
    case BodyFamily::Box:
      params["h"] = rats_json(body.box_halfwidths());
      break;
    case BodyFamily::CrossPolytope:
      params["s"] = rats_json(body.cross_scales());
      break;
    case BodyFamily::HPolytope: {
      json rows = json::array();
      for (const auto& r : body.hpolytope_rows()) {
        json row;
        row["a"] = rats_json(r.a);
        row["b"] = rat_json(r.b);
        rows.push_back(row);
      }
      params["rows"] = rows;
      break;
    }
  }
  obj["params"] = params;
  return finish(obj);
}

std::vector<Vec> parse_points_json(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  const json* arr = &root;
  if (root.is_object()) arr = &field(root, "points");
  if (!arr->is_array()) throw ParseError("expected an array of points");
  std::vector<Vec> pts;
  for (const auto& row : *arr) {
    if (!row.is_array() || row.empty()) throw ParseError("each point must be a nonempty array");
    Vec v;
    for (const auto& c : row) v.push_back(int_of(c, "coordinate"));
    if (!pts.empty() && pts.back().size() != v.size())
      throw ParseError("points must share one dimension");
    pts.push_back(std::move(v));
  }
  return pts;
}

std::string points_to_json(const std::vector<Vec>& points) {
  json obj;
  obj["points"] = vecs_json(points);
  return finish(obj);
}

std::string minima_to_json(const MinimaProfile& profile) {
  json obj;
  obj["dim"] = profile.dim;
  obj["lambda"] = gauges_json(profile.minima);
  obj["witnesses"] = vecs_json(profile.witnesses);
  return finish(obj);
}

std::string lower_bound_to_json(const LowerBoundReport& report) {
  json obj;
  obj["dim"] = report.dim;
  obj["m_star"] = report.m_star;
  obj["min_term"] = interval_json(report.min_term);
  obj["bound"] = interval_json(report.bound);
  obj["p_bound"] = interval_json(report.p_bound);
  return finish(obj);
}

std::string certificate_to_json(const GenPosCertificate& cert) {
  json obj;
  obj["p"] = int_json(cert.p);
  obj["body"] = json::parse(body_to_json(cert.body));
  obj["points"] = vecs_json(cert.points);
  json lifts = json::array();
  for (const auto& l : cert.lifts) {
    json lj;
    lj["curve_index"] = l.curve_index;
    lj["j"] = int_json(l.j);
    lj["w"] = vec_json(l.w);
    lifts.push_back(lj);
  }
  obj["lifts"] = lifts;
  return finish(obj);
}

std::string trials_to_json(const TrialsReport& report) {
  json obj;
  obj["seed"] = report.seed;
  obj["trials"] = report.trials;
  obj["failures"] = report.failures;
  json outs = json::array();
  for (const auto& o : report.outcomes) {
    json oj;
    oj["family"] = o.family;
    oj["dim"] = o.dim;
    oj["p"] = int_json(o.p);
    oj["v"] = vec_json(o.v);
    oj["found"] = o.found;
    outs.push_back(oj);
  }
  obj["outcomes"] = outs;
  return finish(obj);
}

std::string polar_minima_to_json(const PolarMinimaProfile& profile) {
  json obj;
  obj["dim"] = profile.dim;
  obj["mu"] = gauges_json(profile.mu);
  obj["witnesses"] = vecs_json(profile.witnesses);
  return finish(obj);
}

std::string cover_to_json(const CoverFamily& family) {
  int k = static_cast<int>(family.nu.size());
  json obj;
  obj["m"] = family.m;
  obj["k"] = k;
  obj["nu"] = rats_json(family.nu);
  obj["alpha"] = rat_json(family.alpha);
  obj["f_alpha"] = int_json(family.f_alpha);
  obj["size"] = static_cast<std::int64_t>(family.hyperplanes.size());
  obj["bound_eq5"] = int_json(pow_int(2, k) * family.f_alpha);
  obj["witnesses"] = vecs_json(family.witnesses);
  json normals = json::array();
  for (const auto& h : family.hyperplanes) normals.push_back(vec_json(h.normal));
  obj["hyperplanes"] = normals;
  return finish(obj);
}

std::string census_to_json(const CensusReport& report) {
  json obj;
  obj["n"] = report.n;
  obj["r"] = rat_json(report.r);
  obj["h_count"] = int_json(report.h_count);
  obj["point_count"] = int_json(report.point_count);
  obj["s_r"] = rat_json(report.s_r);
  obj["ratio"] = report.ratio;
  return finish(obj);
}

std::string scaling_to_json(const ScalingFit& fit) {
  json obj;
  obj["slope"] = fit.slope;
  obj["intercept"] = fit.intercept;
  json reports = json::array();
  for (const auto& r : fit.reports) reports.push_back(json::parse(census_to_json(r)));
  obj["reports"] = reports;
  return finish(obj);
}

std::string claim_to_json(const ClaimStats& stats) {
  json obj;
  obj["n"] = stats.n;
  obj["rho"] = rat_json(stats.rho);
  obj["threshold"] = rat_json(stats.threshold);
  obj["samples"] = int_json(stats.samples);
  obj["exceed_count"] = int_json(stats.exceed_count);
  obj["min_sq"] = rat_json(stats.min_sq);
  obj["q25_sq"] = rat_json(stats.q25_sq);
  obj["median_sq"] = rat_json(stats.median_sq);
  obj["q75_sq"] = rat_json(stats.q75_sq);
  obj["max_sq"] = rat_json(stats.max_sq);
  obj["lambda1_sq"] = rats_json(stats.lambda1_sq);
  return finish(obj);
}

std::string volume_to_json(const VolumeReport& report) {
  json obj;
  obj["decimal"] = report.decimal;
  obj["enclosure"] = interval_json(report.enclosure);
  return finish(obj);
}

std::string decomposition_to_json(const DecompositionReport& report) {
  json obj;
  obj["lhs"] = int_json(report.lhs);
  obj["rhs"] = int_json(report.rhs);
  obj["h_count"] = int_json(report.h_count);
  obj["match"] = (report.lhs == report.rhs);
  return finish(obj);
}

std::string oracle_to_json(const OracleResult& result, const std::string& kind) {
  json obj;
  obj["kind"] = kind;
  obj["value"] = int_json(result.value);
  obj["instance_size"] = int_json(result.instance_size);
  if (!result.cover_witness.empty()) {
    json normals = json::array();
    for (const auto& h : result.cover_witness) normals.push_back(vec_json(h.normal));
    obj["witness"] = normals;
  } else {
    obj["witness"] = vecs_json(result.genpos_witness);
  }
  return finish(obj);
}

std::string sandwich_to_json(const SandwichReport& report) {
  json obj;
  obj["g"] = int_json(report.g);
  obj["h"] = int_json(report.h);
  obj["cert_size"] = report.cert_size < 0 ? json(nullptr) : int_json(report.cert_size);
  obj["cover_size"] = report.cover_size < 0 ? json(nullptr) : int_json(report.cover_size);
  return finish(obj);
}

std::string census_csv(const std::vector<CensusReport>& reports) {
  Csv csv;
  csv.cell("r", false);
  csv.cell("h_count", false);
  csv.cell("point_count", false);
  csv.cell("s_r", false);
  csv.cell("ratio", true);
  for (const auto& r : reports) {
    csv.cell(format_rational(r.r), false);
    csv.cell(r.h_count.get_str(), false);
    csv.cell(r.point_count.get_str(), false);
    csv.cell(format_rational(r.s_r), false);
    csv.cell(ratio_str(r.ratio), true);
  }
  return csv.text;
}

}  // namespace latcov
