#pragma once

#include "seshadri/quadratic.hpp"
#include "seshadri/rational.hpp"

#include <Eigen/Core>

namespace Eigen {

template <>
struct NumTraits<seshadri::Rational> : GenericNumTraits<seshadri::Rational> {
  using Real = seshadri::Rational;
  using NonInteger = seshadri::Rational;
  using Literal = seshadri::Rational;
  using Nested = seshadri::Rational;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 64,
    MulCost = 128
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<seshadri::Quadratic> : GenericNumTraits<seshadri::Quadratic> {
  using Real = seshadri::Quadratic;
  using NonInteger = seshadri::Quadratic;
  using Literal = seshadri::Quadratic;
  using Nested = seshadri::Quadratic;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 16,
    AddCost = 128,
    MulCost = 512
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace seshadri {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const Quadratic& x) { return x.is_zero(); }
inline bool is_zero(const Integer& x) { return sgn(x) == 0; }

/// Division known to be exact. For a field this is ordinary division; for
/// integers it is mpz_divexact.
inline Rational exact_quotient(const Rational& a, const Rational& b) { return a / b; }
inline Quadratic exact_quotient(const Quadratic& a, const Quadratic& b) { return a / b; }
inline Integer exact_quotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace seshadri
