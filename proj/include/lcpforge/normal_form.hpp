#pragma once

#include <optional>

#include "lcpforge/matrix.hpp"

namespace lcp {

/// Row-style Hermite normal form: h = u * m with u unimodular, pivots
/// positive, entries above each pivot reduced into [0, pivot), zero rows last.
struct HermiteForm {
  RatMatrix h;
  RatMatrix u;
};
HermiteForm hnf(const RatMatrix& m);

/// Smith normal form: d = u * m * v, u and v unimodular, d diagonal with
/// d1 | d2 | ... and every diagonal entry non-negative.
struct SmithForm {
  RatMatrix d;
  RatMatrix u;
  RatMatrix v;
};
SmithForm snf(const RatMatrix& m);

/// Linear system Mx = b over the integers (M integral, b rational).
/// Both solution slots are populated when they exist; the kernel columns are
/// always an integer basis of {x : Mx = 0}.
struct IntegerSolveResult {
  std::optional<std::vector<Rat>> integer_solution;
  std::optional<std::vector<Rat>> rational_solution;
  RatMatrix kernel_basis;
};
IntegerSolveResult solve_integer(const RatMatrix& m, const std::vector<Rat>& b);

/// Columns form a Z-basis of {x in Z^n : Mx = 0}.
RatMatrix integer_kernel(const RatMatrix& m);

}  // namespace lcp
