#include "seshadri/wps.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace seshadri {

void validate_wps_weights(const WeightVector& w) {
  if (w.weights.size() < 2) throw std::invalid_argument("weight vector needs at least two entries (1, a_1, ...)");
  if (std::any_of(w.weights.begin(), w.weights.end(), [](unsigned a) { return a == 0; })) {
    throw std::invalid_argument("weights must be positive integers");
  }
  if (w.weights.front() != 1) throw std::invalid_argument("weight vector must be led by 1");
  if (!std::is_sorted(w.weights.begin() + 1, w.weights.end())) {
    throw std::invalid_argument("weights a_1 <= ... <= a_n must be sorted");
  }
}

Rational wps_seshadri(const WeightVector& w) {
  validate_wps_weights(w);
  const unsigned long total = std::accumulate(w.weights.begin(), w.weights.end(), 0UL);
  return Rational(Integer(total), Integer(w.weights.back()));
}

Rational wps_anticanonical_volume(const WeightVector& w) {
  validate_wps_weights(w);
  const unsigned long total = std::accumulate(w.weights.begin(), w.weights.end(), 0UL);
  Integer product = 1;
  for (std::size_t i = 1; i < w.weights.size(); ++i) product *= w.weights[i];
  return pow(Rational(Integer(total)), static_cast<unsigned>(w.dimension())) / Rational(product);
}

void validate_hypersurface(const WeightedHypersurfaceSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("hypersurface: n must be >= 1");
  if (spec.k < 1) throw std::invalid_argument("hypersurface: k must be >= 1");
  if (spec.l < std::max(2U, spec.k)) throw std::invalid_argument("hypersurface: need l >= max(2, k)");
  if (spec.d < 1) throw std::invalid_argument("hypersurface: degree d must be >= 1");
  if (spec.d >= spec.n + spec.k + spec.l) throw std::invalid_argument("hypersurface: Fano condition d < n + k + l fails");
}

unsigned largest_representable(unsigned d, unsigned k, unsigned l) {
  if (k == 0 || l == 0) throw std::invalid_argument("largest_representable: generators must be positive");
  unsigned best = 0;
  for (unsigned a = 0; a * k <= d; ++a) {
    for (unsigned b = 0; a * k + b * l <= d; ++b) best = std::max(best, a * k + b * l);
  }
  return best;
}

HypersurfaceBound whs_seshadri_bound(const WeightedHypersurfaceSpec& spec) {
  validate_hypersurface(spec);
  HypersurfaceBound out;
  out.r = static_cast<long>(spec.d) - static_cast<long>(spec.k) - static_cast<long>(spec.l);
  out.m = largest_representable(spec.d, spec.k, spec.l);
  out.bound = Rational((static_cast<long>(spec.n) - out.r) * static_cast<long>(out.m)) /
              Rational(static_cast<long>(spec.k * spec.l));
  out.equality = spec.d <= spec.k * spec.l;
  return out;
}

Rational whs_volume(const WeightedHypersurfaceSpec& spec) {
  validate_hypersurface(spec);
  const long r = static_cast<long>(spec.d) - static_cast<long>(spec.k) - static_cast<long>(spec.l);
  return pow(Rational(static_cast<long>(spec.n) - r), spec.n) * Rational(static_cast<long>(spec.d)) /
         Rational(static_cast<long>(spec.k * spec.l));
}

CatalogEntry catalog_seshadri(std::string_view name, const std::vector<long>& params) {
  if (name == "X6") {
    if (params.size() != 1 || params[0] < 1) throw std::invalid_argument("catalog X6 expects one parameter n >= 1");
    return {Rational(2 * params[0]) / Rational(3),
            "general degree-6 hypersurface in P(1^(n-1),2,2,3): eps(-K) = 2n/3, via the Seshadri constant 4/3 of "
            "a degree-2 Gorenstein log del Pezzo section (external result, not recomputed)"};
  }
  if (name == "ruled") {
    if (params.size() != 2) throw std::invalid_argument("catalog ruled expects parameters (g, d)");
    const long g = params[0];
    const long d = params[1];
    if (g < 0 || d < 1 || d <= 2 * g - 2) throw std::invalid_argument("catalog ruled needs g >= 0, d >= 1, d > 2g-2");
    return {Rational(1) - Rational(2 * g - 2) / Rational(d),
            "ruled surface P(O + O(-D)) over a genus-g curve with deg D = d: eps_m(-K) = 1 - (2g-2)/d from the "
            "Zariski decomposition of -K (recomputed by the surfaces pipeline)"};
  }
  throw std::invalid_argument("unknown catalog key '" + std::string(name) + "'");
}

}  // namespace seshadri
