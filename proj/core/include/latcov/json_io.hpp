#pragma once

#include <string>
#include <vector>

#include "latcov/census.hpp"
#include "latcov/cover.hpp"
#include "latcov/genpos.hpp"
#include "latcov/oracle.hpp"

namespace latcov {

// Body descriptor:
//   {"family": "ball"|"ellipsoid"|"box"|"crosspolytope"|"hpolytope",
//    "dim": n, "params": {...}}
// with every rational written as a "p/q" (or "p") string.  Malformed input
// throws ParseError with a diagnostic.
Body parse_body_json(const std::string& text);
std::string body_to_json(const Body& body);

// [[x1,...,xn], ...] or {"points": [...]} with integer coordinates.
std::vector<Vec> parse_points_json(const std::string& text);
std::string points_to_json(const std::vector<Vec>& points);

// Report serializers.  Output is deterministic: fixed key order, 2-space
// indentation, rationals as "p/q", sqrt values as "sqrt(p/q)".
std::string minima_to_json(const MinimaProfile& profile);
std::string lower_bound_to_json(const LowerBoundReport& report);
std::string certificate_to_json(const GenPosCertificate& cert);
std::string trials_to_json(const TrialsReport& report);
std::string polar_minima_to_json(const PolarMinimaProfile& profile);
std::string cover_to_json(const CoverFamily& family);
std::string census_to_json(const CensusReport& report);
std::string scaling_to_json(const ScalingFit& fit);
std::string claim_to_json(const ClaimStats& stats);
std::string volume_to_json(const VolumeReport& report);
std::string decomposition_to_json(const DecompositionReport& report);
std::string oracle_to_json(const OracleResult& result, const std::string& kind);
std::string sandwich_to_json(const SandwichReport& report);

// CSV columns: r, h_count, point_count, s_r, ratio (one row per census run).
std::string census_csv(const std::vector<CensusReport>& reports);

}  // namespace latcov
