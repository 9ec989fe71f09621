#pragma once

#include <cstdint>
#include <vector>

#include "latcov/body.hpp"

namespace latcov {

struct EnumerationOptions {
  // Cap on the number of grid candidates a single enumeration may visit.
  // Overridable via the LATTICE_COVER_BUDGET environment variable in the CLI.
  std::uint64_t max_grid_points = 100000000ULL;
};

// All lattice points of t*C, in lexicographic order, including the origin.
std::vector<Vec> enumerate_points(const Body& body, const Rat& t,
                                  const EnumerationOptions& opts = {});

struct MinimaProfile {
  int dim = 0;
  std::vector<GaugeValue> minima;  // lambda_1 <= ... <= lambda_n
  std::vector<Vec> witnesses;      // linearly independent, gauge(w_i) = lambda_i
};

// Successive minima lambda_i = min{ t : dim span(tC cap Z^n) >= i }, exact.
MinimaProfile successive_minima(const Body& body,
                                const EnumerationOptions& opts = {});

bool is_primitive(const Vec& v);  // gcd of entries is 1; throws on zero vector

struct OrthogonalLattice {
  Vec v;                   // primitive normal
  std::vector<Vec> basis;  // n-1 integer vectors spanning Z^n cap v-perp
  Rat det_sq;              // Gram determinant of the basis; equals |v|^2
};

OrthogonalLattice orthogonal_lattice(const Vec& v);

// Euclidean successive minima of the (n-1)-dimensional lattice Z^n cap v-perp.
std::vector<GaugeValue> minima_of_sublattice(const OrthogonalLattice& lat,
                                             const EnumerationOptions& opts = {});

}  // namespace latcov
