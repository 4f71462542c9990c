#pragma once

#include "seshadri/rational.hpp"

namespace seshadri {

/// Free parameters of the volume bound: (n - 1 + eps) a >= n - 1 + eps/2,
/// a, b, c > 0, a + b + c < 1, and 0 < eps < 2.
struct VolumeBoundParams {
  unsigned n = 0;
  Rational eps;
  Rational a;
  Rational b;
  Rational c;
};

/// max{ b^-n (1 - eps/2)^n, c^-n n^n }. Throws std::invalid_argument naming
/// the violated constraint.
Rational volume_bound(const VolumeBoundParams& params);

struct VolumeBoundResult {
  Rational m;
  Rational a;
  Rational b;
  Rational c;
  bool attained = false;  ///< always false: the feasible region is open
};

/// Infimum of volume_bound over the feasible region, in closed form:
/// a = (n - 1 + eps/2)/(n - 1 + eps), the rest of the budget split so that
/// the two terms agree. Requires n >= 1 and 0 < eps < 2.
VolumeBoundResult best_volume_bound(unsigned n, const Rational& eps);

/// Bracket on the infimum from a grid of step 1/resolution. `upper` is the
/// smallest volume_bound over feasible grid points; `lower` bounds every
/// feasible point from below by rounding (b, c) up to the grid.
struct GridBracket {
  unsigned resolution = 0;
  Rational lower;
  Rational upper;
};

GridBracket volume_bound_grid(unsigned n, const Rational& eps, unsigned resolution = 256);

/// lower <= closed-form M <= upper.
bool grid_confirms(const GridBracket& bracket, const Rational& m);

/// vol <= best_volume_bound(n, eps).m
bool volume_bound_predicate(const Rational& vol, unsigned n, const Rational& eps);

/// n^n / eps; a comparison value only.
Rational conjectured_optimal(unsigned n, const Rational& eps);

}  // namespace seshadri
