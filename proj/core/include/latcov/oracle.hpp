#pragma once

#include <vector>

#include "latcov/cover.hpp"
#include "latcov/genpos.hpp"

namespace latcov {

struct OracleOptions {
  // Refuse instances with more lattice points than this.
  long max_points = 2000;
  EnumerationOptions enumeration;
};

struct OracleResult {
  Int value;
  Int instance_size;                    // |C cap Z^n|
  std::vector<Hyperplane> cover_witness;  // exact_g: minimal cover
  std::vector<Vec> genpos_witness;        // exact_h: maximal set
};

// Minimum number of proper subspaces (WLOG hyperplanes) covering C cap Z^n,
// by exact branch-and-bound set cover over spanned candidate hyperplanes.
OracleResult exact_g(const Body& body, const OracleOptions& opts = {});

// Maximum subset of C cap Z^n with every n-subset linearly independent.
OracleResult exact_h(const Body& body, const OracleOptions& opts = {});

struct SandwichReport {
  Int g;
  Int h;
  Int cert_size = -1;   // when a general-position certificate was built
  Int cover_size = -1;  // when a covering family was built
};

// Checks h <= (n-1) g, and the construction sandwich |cert| <= h and
// g <= |cover| when those are supplied; violations throw.
SandwichReport check_sandwich(const Body& body,
                              const GenPosCertificate* cert = nullptr,
                              const CoverFamily* cover = nullptr,
                              const OracleOptions& opts = {});

}  // namespace latcov
