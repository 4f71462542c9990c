#pragma once

#include "seshadri/rational.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace seshadri {

/// Weights (1, a_1, ..., a_n) of the weighted projective space P(1, a_1, ..., a_n).
/// The Seshadri formulas below require a leading 1 and a_1 <= ... <= a_n.
struct WeightVector {
  std::vector<unsigned> weights;

  [[nodiscard]] std::size_t dimension() const { return weights.empty() ? 0 : weights.size() - 1; }
};

/// Throws std::invalid_argument unless w = (1, a_1 <= ... <= a_n), n >= 1.
void validate_wps_weights(const WeightVector& w);

/// eps(-K) at the point [1:0:...:0], whose Aut-orbit is open:
/// (1 + a_1 + ... + a_n) / a_n.
Rational wps_seshadri(const WeightVector& w);

/// (-K)^n = (1 + a_1 + ... + a_n)^n / (a_1 ... a_n).
Rational wps_anticanonical_volume(const WeightVector& w);

/// General hypersurface X_d in P(1^n, k, l). Requires l >= max(2, k) and the
/// Fano condition d < n + k + l.
struct WeightedHypersurfaceSpec {
  unsigned n = 0;
  unsigned k = 0;
  unsigned l = 0;
  unsigned d = 0;
};

void validate_hypersurface(const WeightedHypersurfaceSpec& spec);

/// Largest integer <= d of the form a*k + b*l with a, b >= 0, by exhaustive scan.
unsigned largest_representable(unsigned d, unsigned k, unsigned l);

struct HypersurfaceBound {
  long r = 0;       ///< d - k - l
  unsigned m = 0;   ///< largest representable integer <= d
  Rational bound;   ///< (n - r) m / (k l)
  bool equality = false;  ///< d <= k l: the bound is the Seshadri constant
};

HypersurfaceBound whs_seshadri_bound(const WeightedHypersurfaceSpec& spec);

/// (-K_X)^n = (n - r)^n d / (k l).
Rational whs_volume(const WeightedHypersurfaceSpec& spec);

struct CatalogEntry {
  Rational value;
  std::string citation;
};

/// Stored closed-form values:
///   "X6"    params {n}:    degree-6 hypersurface in P(1^(n-1), 2, 2, 3), eps(-K) = 2n/3
///   "ruled" params {g, d}: P(O + O(-D)) over a genus-g curve, deg D = d,
///                          eps_m(-K) = 1 - (2g-2)/d
/// Throws std::invalid_argument for an unknown key or bad parameters.
CatalogEntry catalog_seshadri(std::string_view name, const std::vector<long>& params);

}  // namespace seshadri
