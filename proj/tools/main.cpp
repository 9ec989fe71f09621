#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "latcov/json_io.hpp"
#include "latcov/oracle.hpp"
#include "latcov/repro.hpp"

namespace {

using namespace latcov;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ParseError("cannot open " + out_path + " for writing");
  out << text;
}

EnumerationOptions budget_options() {
  EnumerationOptions opts;
  if (const char* env = std::getenv("LATTICE_COVER_BUDGET")) {
    try {
      opts.max_grid_points = std::stoull(env);
    } catch (const std::exception&) {
      throw ParseError("LATTICE_COVER_BUDGET must be an unsigned integer");
    }
  }
  return opts;
}

int default_threads() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::vector<Rat> parse_radii(const std::string& csv) {
  std::vector<Rat> radii;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw ParseError("empty radius in --radii");
    radii.push_back(parse_rational(item));
  }
  if (radii.empty()) throw ParseError("--radii needs at least one value");
  return radii;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact geometry-of-numbers toolkit: successive minima, general-position "
               "certificates, hyperplane covers, and spanned-hyperplane censuses"};
  app.require_subcommand(1);

  std::string body_path, points_path, out_path, csv_path, prime_str, m_str = "auto";
  std::string r_str, rho_str = "10", threshold_str = "-1", radii_str, suite;
  int n = 0, verify_n = 0;
  int threads = default_threads();
  bool claim = false;

  auto* minima = app.add_subcommand("minima", "successive minima and witnesses of a body");
  minima->add_option("--body", body_path, "body descriptor JSON file")->required();
  minima->add_option("--out", out_path, "write JSON here instead of stdout");

  auto* genpos = app.add_subcommand("genpos", "general-position certificate for a body");
  auto* gverify = genpos->add_subcommand("verify", "check that points are in general position");
  gverify->add_option("--points", points_path, "points JSON file")->required();
  gverify->add_option("--n", verify_n, "ambient dimension (default: point length)");
  genpos->add_option("--body", body_path, "body descriptor JSON file");
  genpos->add_option("--prime", prime_str, "use this prime instead of the largest admissible");
  genpos->add_option("--out", out_path, "write JSON here instead of stdout");

  auto* cover = app.add_subcommand("cover", "covering family of hyperplanes for a body");
  cover->add_option("--body", body_path, "body descriptor JSON file")->required();
  cover->add_option("--m", m_str, "subspace parameter m, or 'auto' (default)");
  cover->add_option("--out", out_path, "write JSON here instead of stdout");

  auto* census = app.add_subcommand("census", "census of hyperplanes spanned by ball points");
  auto* scan = census->add_subcommand("scan", "census across several radii plus log-log fit");
  scan->add_option("--n", n, "ambient dimension")->required();
  scan->add_option("--radii", radii_str, "comma-separated radii, e.g. 10,20,40,80")->required();
  scan->add_option("--csv", csv_path, "also write the census table as CSV here");
  scan->add_option("--threads", threads, "worker threads");
  scan->add_option("--out", out_path, "write JSON here instead of stdout");
  census->add_option("--n", n, "ambient dimension");
  census->add_option("--r", r_str, "ball radius (rational, e.g. 10 or 21/2)");
  census->add_flag("--claim", claim, "sample sublattice minima instead of the census");
  census->add_option("--rho", rho_str, "sampling radius for --claim");
  census->add_option("--t", threshold_str, "threshold for --claim exceed counts");
  census->add_option("--threads", threads, "worker threads");
  census->add_option("--out", out_path, "write JSON here instead of stdout");

  auto* oracle = app.add_subcommand("oracle", "exact small-instance covering/position oracles");
  auto* og = oracle->add_subcommand("g", "minimum hyperplane cover of the body's lattice points");
  auto* oh = oracle->add_subcommand("h", "maximum general-position subset of the lattice points");
  oracle->require_subcommand(1);
  for (auto* sub : {og, oh}) {
    sub->add_option("--body", body_path, "body descriptor JSON file")->required();
    sub->add_option("--out", out_path, "write JSON here instead of stdout");
  }

  auto* repro = app.add_subcommand("repro", "named reproduction suites with pass/fail checks");
  repro->add_option("suite", suite, "remark1 | halasz-ball | theorem2-coverage | "
                                    "theorem3-scaling | corollary-sr")->required();
  repro->add_option("--threads", threads, "worker threads");
  repro->add_option("--out", out_path, "write JSON here instead of stdout");
  repro->add_option("--csv", csv_path, "write the suite's census table as CSV here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;  // keep --help at 0, fold usage errors to 1
  }

  try {
    EnumerationOptions opts = budget_options();

    if (minima->parsed()) {
      auto body = parse_body_json(slurp(body_path));
      emit(minima_to_json(successive_minima(body, opts)), out_path);
      return 0;
    }

    if (genpos->parsed()) {
      if (gverify->parsed()) {
        auto points = parse_points_json(slurp(points_path));
        int dim = verify_n != 0 ? verify_n
                                : (points.empty() ? 0 : static_cast<int>(points[0].size()));
        if (dim <= 0) throw ParseError("cannot infer dimension; pass --n");
        bool ok = verify_general_position(points, dim);
        emit(std::string("{\n  \"general_position\": ") + (ok ? "true" : "false") +
                 ",\n  \"n\": " + std::to_string(dim) +
                 ",\n  \"count\": " + std::to_string(points.size()) + "\n}\n",
             out_path);
        return ok ? 0 : 2;
      }
      if (body_path.empty()) {
        std::cerr << "genpos: --body is required\n";
        return 1;
      }
      auto body = parse_body_json(slurp(body_path));
      GenPosCertificate cert =
          prime_str.empty()
              ? build_general_position(body, opts)
              : build_general_position_with_prime(body, Int(prime_str), opts);
      emit(certificate_to_json(cert), out_path);
      return 0;
    }

    if (cover->parsed()) {
      auto body = parse_body_json(slurp(body_path));
      int m = kAutoM;
      if (m_str != "auto") {
        try {
          m = std::stoi(m_str);
        } catch (const std::exception&) {
          throw ParseError("--m must be an integer or 'auto'");
        }
      }
      emit(cover_to_json(build_cover(body, m, opts)), out_path);
      return 0;
    }

    if (census->parsed()) {
      if (scan->parsed()) {
        auto fit = scaling_fit(n, parse_radii(radii_str), threads, opts);
        emit(scaling_to_json(fit), out_path);
        if (!csv_path.empty()) emit(census_csv(fit.reports), csv_path);
        return 0;
      }
      if (n == 0) {
        std::cerr << "census: --n is required\n";
        return 1;
      }
      if (claim) {
        emit(claim_to_json(claim_stats(n, parse_rational(rho_str),
                                       parse_rational(threshold_str), opts)),
             out_path);
        return 0;
      }
      if (r_str.empty()) {
        std::cerr << "census: --r is required (or use scan / --claim)\n";
        return 1;
      }
      emit(census_to_json(latcov::census(n, parse_rational(r_str), threads, opts)), out_path);
      return 0;
    }

    if (oracle->parsed()) {
      auto body = parse_body_json(slurp(body_path));
      OracleOptions oopts;
      oopts.enumeration = opts;
      if (og->parsed()) {
        emit(oracle_to_json(exact_g(body, oopts), "g"), out_path);
      } else {
        emit(oracle_to_json(exact_h(body, oopts), "h"), out_path);
      }
      return 0;
    }

    if (repro->parsed()) {
      auto report = run_repro_suite(suite, threads);
      emit(suite_to_json(report), out_path);
      if (!csv_path.empty()) emit(report.csv, csv_path);
      return report.pass ? 0 : 2;
    }
  } catch (const CoverageVerificationFailed& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 2;
  } catch (const NoLiftFound& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 2;
  } catch (const NoAdmissiblePrime& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 2;
  } catch (const InternalCheckFailed& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
