#pragma once

#include "seshadri/extended_nat.hpp"
#include "seshadri/polynomial.hpp"
#include "seshadri/quadratic.hpp"
#include "seshadri/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace seshadri {

/// Coordinate change x_j = y + c * x_b^e applied before monomial evaluation,
/// so that the twisted valuation gives x_j - c x_b^e the weight w_j.
struct Twist {
  std::size_t coordinate = 1;
  std::size_t base = 0;
  unsigned exponent = 1;
  Quadratic constant = Quadratic::sqrt_of(2);
};

/// Monomial valuation nu(x^v) = <w, v> on affine n-space centered at the
/// origin, optionally twisted.
class MonomialValuation {
 public:
  explicit MonomialValuation(std::vector<unsigned> weights, std::optional<Twist> twist = std::nullopt);

  [[nodiscard]] const std::vector<unsigned>& weights() const { return weights_; }
  [[nodiscard]] const std::optional<Twist>& twist() const { return twist_; }
  [[nodiscard]] std::size_t nvars() const { return weights_.size(); }
  [[nodiscard]] bool is_twisted() const { return twist_.has_value(); }

  /// f rewritten in the coordinates in which nu is monomial. Identity when
  /// untwisted.
  [[nodiscard]] QuadraticPolynomial untwist(const QuadraticPolynomial& f) const;

 private:
  std::vector<unsigned> weights_;
  std::optional<Twist> twist_;
};

/// nu(f); infinite iff f = 0.
ExtendedNat valuation_eval(const MonomialValuation& nu, const QuadraticPolynomial& f);
ExtendedNat valuation_eval(const MonomialValuation& nu, const RationalPolynomial& f);

/// a(nu) = sum(w) - 1. A twist is an automorphism of the ambient space and
/// leaves it unchanged.
unsigned discrepancy(const MonomialValuation& nu);

/// nu(m_x): min(w) for a monomial valuation. For a twisted valuation, the
/// minimum of nu over the original coordinate functions.
unsigned valuation_of_maximal_ideal(const MonomialValuation& nu);

struct IzumiRecord {
  ExtendedNat lower;  ///< nu(m_x) * mult_0 f
  ExtendedNat value;  ///< nu(f)
  ExtendedNat upper;  ///< a(nu) * mult_0 f
  unsigned nu_mx = 0;
  bool nu_mx_from_twist = false;  ///< nu(m_x) came from coordinate functions of a twisted valuation
  bool holds = false;
};

/// The zero polynomial gives lower = value = upper = inf and holds = true.
/// Throws std::invalid_argument for n < 2, where the center is a divisor.
IzumiRecord izumi_check(const MonomialValuation& nu, const QuadraticPolynomial& f);

struct MinMultiplicity {
  unsigned min_mult = 0;
  Rational lambda;  ///< min_mult / k
};

/// Smallest |v|_1 over v in N^n with <w, v> >= target, by exhaustive search.
/// Exponential in n; intended for small instances.
unsigned lattice_min_norm(const std::vector<unsigned>& weights, unsigned target);

/// Minimal multiplicity at the origin of I_k = {f : nu(f) >= a(nu) k}, for an
/// untwisted monomial nu: ceil(a k / max w). When the instance is small it is
/// also computed by lattice_min_norm and a disagreement throws std::logic_error.
/// Throws std::invalid_argument for twisted valuations or k = 0.
MinMultiplicity ideal_min_multiplicity(const MonomialValuation& nu, unsigned k);

struct GaloisResult {
  unsigned min_mult = 0;
  Rational bound;               ///< 2 m k / (2m - 1)
  RationalPolynomial witness;   ///< rational member of J_k of multiplicity min_mult
  unsigned degree_cap = 0;      ///< weighted degree reached by the search
  bool complete = false;        ///< no higher piece can contain a smaller multiplicity
};

/// Weighted degree cap used when none is given: 4 m k, doubled until a member
/// is found, at most up to 16 m k.
unsigned galois_default_cap(unsigned m, unsigned k);

/// Minimal multiplicity at the origin of a rational-coefficient member of
/// J_k = (s^m, t - sqrt(2) s^(m-1))^k.
///
/// The ideal is homogeneous for wt(s) = 1, wt(t) = m - 1. Each graded piece of
/// J_k is the Q(sqrt 2)-span of (cofactor monomial) * y^p s^(m(k-p)) with
/// y = t - sqrt(2) s^(m-1); its rational members are found by splitting the
/// annihilator into rational and sqrt(2) parts. The witness is the rational
/// member of minimal multiplicity, in the lowest piece attaining it, with the
/// largest twisted valuation, scaled so its highest power of t is monic.
///
/// Requires m >= 2, k >= 1. Throws std::runtime_error if no rational member
/// exists up to the ceiling 16 m k (or the given cap, if larger).
GaloisResult galois_min_mult(unsigned m, unsigned k, std::optional<unsigned> degree_cap = std::nullopt);

/// The twisted valuation nu(s) = 1, nu(t - sqrt(2) s^(m-1)) = m, for which
/// J_k = {f : nu(f) >= m k}.
MonomialValuation galois_valuation(unsigned m);

}  // namespace seshadri
