#pragma once

#include "seshadri/rational.hpp"

#include <ostream>
#include <string>
#include <string_view>

namespace seshadri {

/// Element a + b*sqrt(D) of a quadratic field Q(sqrt(D)), D square-free.
///
/// Elements with b = 0 are plain rationals and carry D = 0, which makes them
/// compatible with every field. Mixing two elements with different nonzero D
/// throws std::domain_error: there is no common field in this representation.
class Quadratic {
 public:
  Quadratic() = default;
  Quadratic(int v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Quadratic(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Quadratic(const Rational& v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Quadratic(Rational a, Rational b, long radicand);

  /// sqrt(D) itself.
  static Quadratic sqrt_of(long radicand) { return {Rational(0), Rational(1), radicand}; }

  /// Parses the text produced by str(): "a", "a+b*sqrt(D)", "a-b*sqrt(D)",
  /// "b*sqrt(D)", "sqrt(D)", "-sqrt(D)".
  static Quadratic parse(std::string_view text);

  [[nodiscard]] const Rational& rational_part() const { return a_; }
  [[nodiscard]] const Rational& radical_part() const { return b_; }
  [[nodiscard]] long radicand() const { return d_; }

  [[nodiscard]] bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  [[nodiscard]] bool is_rational() const { return b_.is_zero(); }

  [[nodiscard]] Quadratic conjugate() const;
  /// (a+b sqrt D)(a-b sqrt D) = a^2 - D b^2.
  [[nodiscard]] Rational norm() const;

  [[nodiscard]] std::string str() const;

  Quadratic& operator+=(const Quadratic& o);
  Quadratic& operator-=(const Quadratic& o);
  Quadratic& operator*=(const Quadratic& o);
  Quadratic& operator/=(const Quadratic& o);

  friend Quadratic operator+(Quadratic x, const Quadratic& y) { return x += y; }
  friend Quadratic operator-(Quadratic x, const Quadratic& y) { return x -= y; }
  friend Quadratic operator*(Quadratic x, const Quadratic& y) { return x *= y; }
  friend Quadratic operator/(Quadratic x, const Quadratic& y) { return x /= y; }
  friend Quadratic operator-(const Quadratic& x) { return Quadratic(-x.a_, -x.b_, x.d_); }

  friend bool operator==(const Quadratic& x, const Quadratic& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Quadratic& q) { return os << q.str(); }

 private:
  long common_radicand(const Quadratic& o) const;
  void normalize() {
    if (b_.is_zero()) d_ = 0;
  }

  Rational a_;
  Rational b_;
  long d_ = 0;
};

bool is_square_free(long d);

}  // namespace seshadri
