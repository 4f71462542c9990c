#pragma once

#include "seshadri/matrix.hpp"
#include "seshadri/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace seshadri {

/// Coordinates of a divisor class against a lattice basis.
struct DivisorClass {
  RationalVector coords;
};

struct DeclaredCurve {
  std::string name;
  DivisorClass cls;
  bool through_point = false;  ///< passes through the marked (very general) point
  unsigned mult = 0;           ///< multiplicity at the marked point; >= 1 iff through_point
};

/// Divisor classes on a surface with an exact intersection form, and a list of
/// irreducible curves that the caller asserts contains every relevant negative
/// curve. Nothing here discovers curves.
class SurfaceLattice {
 public:
  SurfaceLattice(std::vector<std::string> generators, RationalMatrix gram, std::vector<DeclaredCurve> curves);

  [[nodiscard]] std::size_t rank() const { return generators_.size(); }
  [[nodiscard]] const std::vector<std::string>& generators() const { return generators_; }
  [[nodiscard]] const RationalMatrix& gram() const { return gram_; }
  [[nodiscard]] const std::vector<DeclaredCurve>& curves() const { return curves_; }

  [[nodiscard]] Rational intersect(const DivisorClass& a, const DivisorClass& b) const;
  [[nodiscard]] Rational self_intersection(const DivisorClass& a) const { return intersect(a, a); }
  [[nodiscard]] DivisorClass make_class(const std::vector<Rational>& coords) const;

  /// Echoed in every output record.
  static constexpr const char* kCompletenessAssumption =
      "declared curves are assumed to include every negative curve relevant to the computation";

 private:
  void check(const DivisorClass& a) const;

  std::vector<std::string> generators_;
  RationalMatrix gram_;
  std::vector<DeclaredCurve> curves_;
};

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator*(const Rational& c, const DivisorClass& a);
bool operator==(const DivisorClass& a, const DivisorClass& b);

/// Raised when the declared curves admit no decomposition of D.
class ZariskiError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ZariskiChecks {
  bool nef = false;         ///< P.C >= 0 for every declared curve
  bool orthogonal = false;  ///< P.C = 0 for every support curve
  bool negdef = false;      ///< Gram matrix of the support is negative definite
  bool effective = false;   ///< every support coefficient is > 0
};

struct ZariskiDecomposition {
  DivisorClass positive;
  DivisorClass negative;
  std::vector<std::size_t> support;        ///< indices into lat.curves(), ascending
  std::vector<Rational> coefficients;      ///< N = sum coefficients[i] * curves[support[i]]
  ZariskiChecks checks;
};

/// Sylvester's criterion: the leading principal minors alternate in sign,
/// starting negative. The empty matrix counts as negative definite.
bool is_negative_definite(const RationalMatrix& gram);

/// D = P + N by iterative support enlargement over the declared curves.
/// Throws ZariskiError when a candidate support is not negative definite or
/// a coefficient of N comes out negative. The returned checks are all true.
ZariskiDecomposition zariski_decomposition(const SurfaceLattice& lat, const DivisorClass& d);

struct PointSeshadri {
  Rational value;            ///< min over through-curves of (L.C)/mult
  std::string minimizer;     ///< name of the curve attaining it
  Rational value_squared;
  Rational volume;           ///< L^2
  bool certified = false;    ///< value^2 <= L^2
};

/// Seshadri constant of a nef class L at the marked point as bounded by the
/// declared through-curves. Throws std::invalid_argument if L is not nef on
/// the declared curves or no declared curve passes through the point.
PointSeshadri seshadri_at_marked_point(const SurfaceLattice& lat, const DivisorClass& l);

/// Basis (E, F) of the ruled surface P(O + O(-D)) over a genus-g curve,
/// deg D = d: E^2 = -d, E.F = 1, F^2 = 0. Declared curves: the negative
/// section E (misses a general point) and the fiber F (through it, mult 1).
SurfaceLattice ruled_surface_lattice(unsigned g, unsigned d);

struct RuledSurfaceModel {
  SurfaceLattice lattice;
  DivisorClass minus_k;  ///< 2E + (d + 2 - 2g)F
  ZariskiDecomposition decomposition;
  PointSeshadri seshadri;
  Rational epsilon_m;    ///< seshadri.value, computed through the pipeline
  Rational closed_form;  ///< 1 - (2g - 2)/d
  bool closed_form_applies = false;  ///< d >= 2 - 2g, i.e. the E-coefficient of N is >= 0
};

/// Requires d >= 1 and d > 2g - 2. When the closed form applies, a mismatch
/// with the pipeline value throws std::logic_error.
RuledSurfaceModel ruled_surface_model(unsigned g, unsigned d);

}  // namespace seshadri
