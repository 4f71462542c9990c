#pragma once

#include "seshadri/linalg.hpp"
#include "seshadri/matrix.hpp"
#include "seshadri/polynomial.hpp"
#include "seshadri/rational.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <variant>
#include <vector>

namespace seshadri {

using Point = std::vector<Rational>;

/// Sections vanish to order >= `order` at `point`.
struct MultiplicityCondition {
  Point point;
  unsigned order = 0;
};

/// Sections lie in the span of `basis`.
struct SpanCondition {
  std::vector<RationalPolynomial> basis;
};

using Constraint = std::variant<MultiplicityCondition, SpanCondition>;

/// Subspace of the polynomials of total degree <= d in n affine coordinates
/// (sections of O(d) on P^n in the chart x_0 = 1), cut out by exact linear
/// conditions. The basis is computed once, at construction, as the nullspace
/// of the stacked condition matrix.
class LinearSystem {
 public:
  LinearSystem(std::size_t n, unsigned degree, std::vector<Constraint> constraints = {});

  [[nodiscard]] std::size_t ambient_dimension() const { return n_; }
  [[nodiscard]] unsigned degree() const { return degree_; }
  [[nodiscard]] std::size_t dimension() const { return dimension_; }
  [[nodiscard]] bool is_complete() const { return !basis_.has_value(); }
  [[nodiscard]] const std::vector<Exponent>& monomials() const { return monomials_; }
  [[nodiscard]] const std::vector<Constraint>& constraints() const { return constraints_; }

  /// Coefficient matrix of the basis: one column per section, rows indexed by
  /// monomials() in graded order.
  [[nodiscard]] RationalMatrix basis() const;
  [[nodiscard]] std::vector<RationalPolynomial> basis_polynomials() const;

 private:
  std::size_t n_;
  unsigned degree_;
  std::vector<Constraint> constraints_;
  std::vector<Exponent> monomials_;
  std::optional<RationalMatrix> basis_;
  std::size_t dimension_ = 0;
};

/// Rows: Taylor coefficients of order <= jet_order at x (graded order).
/// Columns: the monomials of total degree <= degree. Entry (beta, alpha) is
/// prod_i C(alpha_i, beta_i) x_i^(alpha_i - beta_i), zero unless alpha >= beta.
RationalMatrix monomial_jet_matrix(std::size_t n, unsigned degree, const Point& x, unsigned jet_order);

/// Jet map of W at x in order <= jet_order: rows Taylor coefficients, one
/// column per basis section.
RationalMatrix jet_matrix(const LinearSystem& w, const Point& x, unsigned jet_order);

/// s(W, x): the largest s with W -> O/m_x^(s+1) surjective, or -1 when x is
/// a base point of W (including W = 0).
int jet_separation(const LinearSystem& w, const Point& x);

/// Random rational points with large-height coordinates. Draws come straight
/// from the mt19937_64 output stream, so a seed fixes the points on every
/// platform.
class RandomPointSampler {
 public:
  explicit RandomPointSampler(std::uint64_t seed, std::uint64_t height = (1ULL << 20))
      : engine_(seed), height_(height) {}

  Point sample(std::size_t n);
  std::vector<Point> sample_many(std::size_t n, std::size_t count);

 private:
  std::mt19937_64 engine_;
  std::uint64_t height_;
};

inline constexpr std::uint64_t kDefaultSeed = 20240917;
inline constexpr std::size_t kDefaultSamples = 3;
inline constexpr unsigned kDefaultMMax = 3;

/// max_x s(W, x) over the given points.
int jet_separation_max(const LinearSystem& w, const std::vector<Point>& points);

struct CurveUpperBound {
  Rational bound;  ///< (L.C) / mult_x C
  bool strict = false;
};

/// s(W, x) <= (L.C)/mult_x C for an irreducible curve C through x, strictly
/// when C meets the base locus of W. Throws std::invalid_argument for mult = 0
/// or a negative pairing.
CurveUpperBound seshadri_upper_via_curve(const Rational& pairing, unsigned mult, bool meets_base_locus);

/// A registered curve: L.C per unit of L, so the m-th member of a series
/// satisfies s(series(m), x) <= m (L.C)/mult.
struct CurveRegistration {
  Rational pairing;
  unsigned mult = 1;
  bool meets_base_locus = false;
};

struct SeshadriEstimate {
  Rational lower;                  ///< max_m s(series(m), x) / m
  std::optional<Rational> upper;   ///< min over registered curves
  std::vector<unsigned> m_values;
  std::vector<int> s_values;
  bool certified_equal = false;    ///< lower == upper
};

using SeriesRule = std::function<LinearSystem(unsigned m)>;

/// Lower bound for the moving Seshadri constant from s(series(m), x)/m,
/// 1 <= m <= m_max, each s maximized over `points`. Registered curves supply
/// the upper side; a computed s that violates a registered curve bound
/// throws std::logic_error.
SeshadriEstimate moving_seshadri_lower(const SeriesRule& series, const std::vector<Point>& points, unsigned m_max,
                                       const std::vector<CurveRegistration>& curves = {});

/// m -> |O_{P^n}(m d)|.
SeriesRule complete_series(std::size_t n, unsigned d);

/// m -> degree d*m sections with multiplicity >= order*m at p. With
/// d = n + 1, order = 1 this is |m(pi^*(-K_{P^n}) - E)| on the blowup of P^n at p.
SeriesRule multiplicity_series(std::size_t n, unsigned d, const Point& p, unsigned order);

}  // namespace seshadri
