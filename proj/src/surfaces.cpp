#include "seshadri/surfaces.hpp"

#include "seshadri/linalg.hpp"

#include <algorithm>

namespace seshadri {

namespace {

RationalVector zero_vector(std::size_t n) {
  RationalVector v(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Rational(0);
  return v;
}

RationalMatrix principal_submatrix(const RationalMatrix& m, const std::vector<std::size_t>& idx) {
  const auto k = static_cast<Eigen::Index>(idx.size());
  RationalMatrix out(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      out(i, j) = m(static_cast<Eigen::Index>(idx[static_cast<std::size_t>(i)]),
                    static_cast<Eigen::Index>(idx[static_cast<std::size_t>(j)]));
    }
  }
  return out;
}

}  // namespace

SurfaceLattice::SurfaceLattice(std::vector<std::string> generators, RationalMatrix gram,
                               std::vector<DeclaredCurve> curves)
    : generators_(std::move(generators)), gram_(std::move(gram)), curves_(std::move(curves)) {
  const auto n = static_cast<Eigen::Index>(generators_.size());
  if (n == 0) throw std::invalid_argument("lattice: no generators");
  if (gram_.rows() != n || gram_.cols() != n) throw std::invalid_argument("lattice: gram matrix has the wrong size");
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (gram_(i, j) != gram_(j, i)) throw std::invalid_argument("lattice: gram matrix is not symmetric");
    }
  }
  for (const auto& c : curves_) {
    check(c.cls);
    if (c.through_point && c.mult == 0) {
      throw std::invalid_argument("lattice: curve " + c.name + " passes through the point with multiplicity 0");
    }
    if (!c.through_point && c.mult != 0) {
      throw std::invalid_argument("lattice: curve " + c.name + " misses the point but has multiplicity > 0");
    }
  }
}

void SurfaceLattice::check(const DivisorClass& a) const {
  if (a.coords.size() != static_cast<Eigen::Index>(rank())) {
    throw std::invalid_argument("divisor class has " + std::to_string(a.coords.size()) + " coordinates, lattice rank is " +
                                std::to_string(rank()));
  }
}

Rational SurfaceLattice::intersect(const DivisorClass& a, const DivisorClass& b) const {
  check(a);
  check(b);
  Rational out(0);
  for (Eigen::Index i = 0; i < gram_.rows(); ++i) {
    if (a.coords(i).is_zero()) continue;
    for (Eigen::Index j = 0; j < gram_.cols(); ++j) {
      if (!b.coords(j).is_zero() && !gram_(i, j).is_zero()) out += a.coords(i) * gram_(i, j) * b.coords(j);
    }
  }
  return out;
}

DivisorClass SurfaceLattice::make_class(const std::vector<Rational>& coords) const {
  DivisorClass out{RationalVector(static_cast<Eigen::Index>(coords.size()))};
  for (std::size_t i = 0; i < coords.size(); ++i) out.coords(static_cast<Eigen::Index>(i)) = coords[i];
  check(out);
  return out;
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) { return {a.coords + b.coords}; }
DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) { return {a.coords - b.coords}; }
DivisorClass operator*(const Rational& c, const DivisorClass& a) { return {a.coords * c}; }
bool operator==(const DivisorClass& a, const DivisorClass& b) {
  if (a.coords.size() != b.coords.size()) return false;
  for (Eigen::Index i = 0; i < a.coords.size(); ++i) {
    if (a.coords(i) != b.coords(i)) return false;
  }
  return true;
}

bool is_negative_definite(const RationalMatrix& gram) {
  for (Eigen::Index k = 1; k <= gram.rows(); ++k) {
    const int sign = determinant(RationalMatrix(gram.topLeftCorner(k, k))).sign();
    if (sign != (k % 2 == 1 ? -1 : 1)) return false;
  }
  return true;
}

ZariskiDecomposition zariski_decomposition(const SurfaceLattice& lat, const DivisorClass& d) {
  const auto& curves = lat.curves();
  const std::size_t rank = lat.rank();
  const std::size_t ncurves = curves.size();

  RationalMatrix curve_gram(static_cast<Eigen::Index>(ncurves), static_cast<Eigen::Index>(ncurves));
  for (std::size_t i = 0; i < ncurves; ++i) {
    for (std::size_t j = 0; j < ncurves; ++j) {
      curve_gram(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = lat.intersect(curves[i].cls, curves[j].cls);
    }
  }

  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < ncurves; ++i) {
    if (lat.intersect(d, curves[i].cls).sign() < 0) support.push_back(i);
  }

  ZariskiDecomposition out;
  out.positive = d;
  out.negative = DivisorClass{zero_vector(rank)};
  while (!support.empty()) {
    const RationalMatrix g = principal_submatrix(curve_gram, support);
    if (!is_negative_definite(g)) {
      std::string names;
      for (auto i : support) names += (names.empty() ? "" : ", ") + curves[i].name;
      throw ZariskiError("zariski: intersection matrix of {" + names +
                         "} is not negative definite; the declared curve set is inconsistent");
    }
    RationalVector rhs(static_cast<Eigen::Index>(support.size()));
    for (std::size_t i = 0; i < support.size(); ++i) {
      rhs(static_cast<Eigen::Index>(i)) = lat.intersect(d, curves[support[i]].cls);
    }
    const RationalVector x = solve_unique(g, rhs);
    out.coefficients.clear();
    out.negative = DivisorClass{zero_vector(rank)};
    for (std::size_t i = 0; i < support.size(); ++i) {
      const Rational& c = x(static_cast<Eigen::Index>(i));
      if (c.sign() < 0) {
        throw ZariskiError("zariski: coefficient of " + curves[support[i]].name + " in N is " + c.str() +
                           " < 0; D is not pseudo-effective relative to the declared curves");
      }
      out.coefficients.push_back(c);
      out.negative = out.negative + c * curves[support[i]].cls;
    }
    out.positive = d - out.negative;

    std::vector<std::size_t> added;
    for (std::size_t i = 0; i < ncurves; ++i) {
      if (std::find(support.begin(), support.end(), i) != support.end()) continue;
      if (lat.intersect(out.positive, curves[i].cls).sign() < 0) added.push_back(i);
    }
    if (added.empty()) break;
    support.insert(support.end(), added.begin(), added.end());
    std::sort(support.begin(), support.end());
  }
  out.support = support;

  out.checks.nef = std::all_of(curves.begin(), curves.end(),
                               [&](const DeclaredCurve& c) { return lat.intersect(out.positive, c.cls).sign() >= 0; });
  out.checks.orthogonal = std::all_of(support.begin(), support.end(), [&](std::size_t i) {
    return lat.intersect(out.positive, curves[i].cls).is_zero();
  });
  out.checks.negdef = is_negative_definite(principal_submatrix(curve_gram, support));
  out.checks.effective =
      std::all_of(out.coefficients.begin(), out.coefficients.end(), [](const Rational& c) { return c.sign() > 0; });
  if (!(out.checks.nef && out.checks.orthogonal && out.checks.negdef && out.checks.effective)) {
    throw std::logic_error("zariski: decomposition failed its own axioms");
  }
  return out;
}

PointSeshadri seshadri_at_marked_point(const SurfaceLattice& lat, const DivisorClass& l) {
  for (const auto& c : lat.curves()) {
    const Rational p = lat.intersect(l, c.cls);
    if (p.sign() < 0) {
      throw std::invalid_argument("seshadri: L is not nef (L." + c.name + " = " + p.str() + ")");
    }
  }
  PointSeshadri out;
  bool found = false;
  for (const auto& c : lat.curves()) {
    if (!c.through_point) continue;
    const Rational v = lat.intersect(l, c.cls) / Rational(c.mult);
    if (!found || v < out.value) {
      out.value = v;
      out.minimizer = c.name;
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("seshadri: no declared curve passes through the marked point");
  out.value_squared = out.value * out.value;
  out.volume = lat.self_intersection(l);
  out.certified = out.value_squared <= out.volume;
  return out;
}

SurfaceLattice ruled_surface_lattice(unsigned g, unsigned d) {
  RationalMatrix gram(2, 2);
  gram << Rational(-static_cast<long>(d)), Rational(1), Rational(1), Rational(0);
  RationalVector e(2);
  e << Rational(1), Rational(0);
  RationalVector f(2);
  f << Rational(0), Rational(1);
  (void)g;
  return SurfaceLattice({"E", "F"}, gram, {DeclaredCurve{"E", {e}, false, 0}, DeclaredCurve{"F", {f}, true, 1}});
}

RuledSurfaceModel ruled_surface_model(unsigned g, unsigned d) {
  if (d == 0) throw std::invalid_argument("ruled surface: d must be >= 1");
  if (static_cast<long>(d) <= 2 * static_cast<long>(g) - 2) {
    throw std::invalid_argument("ruled surface: need d > 2g - 2 for a big positive part");
  }
  SurfaceLattice lat = ruled_surface_lattice(g, d);
  const long f_coeff = static_cast<long>(d) + 2 - 2 * static_cast<long>(g);
  DivisorClass minus_k = lat.make_class({Rational(2), Rational(f_coeff)});
  ZariskiDecomposition dec = zariski_decomposition(lat, minus_k);
  PointSeshadri sesh = seshadri_at_marked_point(lat, dec.positive);
  const Rational closed = Rational(1) - Rational(2 * static_cast<long>(g) - 2) / Rational(d);
  const bool applies = static_cast<long>(d) + 2 * static_cast<long>(g) - 2 >= 0;
  if (applies && sesh.value != closed) {
    throw std::logic_error("ruled surface: pipeline value " + sesh.value.str() + " differs from 1 - (2g-2)/d = " +
                           closed.str());
  }
  Rational eps = sesh.value;
  return RuledSurfaceModel{std::move(lat), std::move(minus_k), std::move(dec), std::move(sesh), eps, closed, applies};
}

}  // namespace seshadri
