#pragma once

// Shared dilate-doubling greedy engine behind successive_minima,
// polar_minima, and the sublattice minima. Internal; not installed.

#include <functional>
#include <vector>

#include "latcov/lattice.hpp"

namespace latcov::detail {

struct NormSystem {
  int dim;
  // Exact norm evaluation.
  std::function<GaugeValue(const Vec&)> norm;
  // Per-axis integer bounds covering {x in Z^dim : norm(x) <= t}.
  std::function<std::vector<Int>(const Rat&)> box;
};

// Enumerates the integer box in lexicographic order, keeping x with
// norm(x) <= t. Throws EnumerationBudgetExceeded before iterating if the box
// volume exceeds the budget.
std::vector<Vec> enumerate_norm_ball(const NormSystem& sys, const Rat& t,
                                     const EnumerationOptions& opts);

// Greedy successive minima for an arbitrary exact norm system.
MinimaProfile minima_engine(const NormSystem& sys, const EnumerationOptions& opts);

}  // namespace latcov::detail
