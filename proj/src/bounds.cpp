#include "seshadri/bounds.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace seshadri {

namespace {

void check_regime(unsigned n, const Rational& eps) {
  if (n < 1) throw std::invalid_argument("volume bound: n must be >= 1");
  if (eps.sign() <= 0) throw std::invalid_argument("volume bound: eps must be > 0");
  if (eps >= Rational(2)) throw std::invalid_argument("volume bound: eps must be < 2 (the term 1 - eps/2 must be positive)");
}

Rational a_threshold(unsigned n, const Rational& eps) {
  const Rational base(n - 1);
  return (base + eps / Rational(2)) / (base + eps);
}

}  // namespace

Rational volume_bound(const VolumeBoundParams& p) {
  check_regime(p.n, p.eps);
  if (p.a.sign() <= 0) throw std::invalid_argument("volume bound: a must be > 0");
  if (p.b.sign() <= 0) throw std::invalid_argument("volume bound: b must be > 0");
  if (p.c.sign() <= 0) throw std::invalid_argument("volume bound: c must be > 0");
  const Rational base(p.n - 1);
  if ((base + p.eps) * p.a < base + p.eps / Rational(2)) {
    throw std::invalid_argument("volume bound: a-constraint violated, need (n-1+eps) a >= n-1+eps/2");
  }
  if (p.a + p.b + p.c >= Rational(1)) throw std::invalid_argument("volume bound: need a + b + c < 1");
  const Rational t1 = pow((Rational(1) - p.eps / Rational(2)) / p.b, p.n);
  const Rational t2 = pow(Rational(p.n) / p.c, p.n);
  return t1 < t2 ? t2 : t1;
}

VolumeBoundResult best_volume_bound(unsigned n, const Rational& eps) {
  check_regime(n, eps);
  const Rational half = eps / Rational(2);
  const Rational a = a_threshold(n, eps);
  const Rational s = half / (Rational(n - 1) + eps);
  const Rational u = Rational(1) - half;
  const Rational b = s * u / (u + Rational(n));
  const Rational c = s * Rational(n) / (u + Rational(n));
  const Rational m = pow((Rational(n + 1) - half) / s, n);
  return {m, a, b, c, false};
}

GridBracket volume_bound_grid(unsigned n, const Rational& eps, unsigned resolution) {
  check_regime(n, eps);
  if (resolution < 2) throw std::invalid_argument("volume bound grid: resolution must be >= 2");
  const unsigned res = resolution;
  const Rational step = Rational(1) / Rational(res);
  const Rational u = Rational(1) - eps / Rational(2);
  const Rational base(n - 1);
  const Rational need = base + eps / Rational(2);

  // t1[j] = (u / (j/res))^n, t2[k] = (n / (k/res))^n; both decrease with the index.
  std::vector<Rational> t1(res + 2);
  std::vector<Rational> t2(res + 2);
  for (unsigned j = 1; j <= res + 1; ++j) {
    t1[j] = pow(u * Rational(res) / Rational(j), n);
    t2[j] = pow(Rational(n) * Rational(res) / Rational(j), n);
  }
  auto best_split = [&](unsigned budget) -> std::optional<Rational> {
    // min over j, k >= 1 with j + k <= budget of max(t1[j], t2[k]).
    std::optional<Rational> best;
    for (unsigned j = 1; j + 1 <= budget; ++j) {
      const unsigned k = budget - j;
      const Rational& v = t1[j] < t2[k] ? t2[k] : t1[j];
      if (!best || v < *best) best = v;
    }
    return best;
  };

  GridBracket out;
  out.resolution = res;
  std::optional<Rational> upper;
  for (unsigned i = 1; i < res; ++i) {
    if ((base + eps) * Rational(i) * step < need) continue;
    // Grid points (i, j, k)/res with i + j + k < res.
    if (res - i < 3) continue;
    const auto v = best_split(res - i - 1);
    if (v && (!upper || *v < *upper)) upper = v;
  }
  if (!upper) throw std::runtime_error("volume bound grid: no feasible grid point at this resolution");
  out.upper = *upper;

  // A feasible (a, b, c) has b + c < 1 - a <= 1 - floor(res a*)/res, so with
  // b in [(J-1)/res, J/res) and c in [(K-1)/res, K/res): J + K <= res - floor(res a*) + 1.
  const Rational scaled = a_threshold(n, eps) * Rational(res);
  const long floor_a = scaled.floor().get_si();
  const long budget = static_cast<long>(res) - floor_a + 1;
  const auto lower = best_split(static_cast<unsigned>(std::min<long>(budget, res + 1)));
  if (!lower) throw std::runtime_error("volume bound grid: empty lower bracket");
  out.lower = *lower;
  return out;
}

bool grid_confirms(const GridBracket& bracket, const Rational& m) { return bracket.lower <= m && m <= bracket.upper; }

bool volume_bound_predicate(const Rational& vol, unsigned n, const Rational& eps) {
  return vol <= best_volume_bound(n, eps).m;
}

Rational conjectured_optimal(unsigned n, const Rational& eps) {
  check_regime(n, eps);
  return pow(Rational(n), n) / eps;
}

}  // namespace seshadri
