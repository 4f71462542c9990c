#pragma once

#include "seshadri/extended_nat.hpp"
#include "seshadri/quadratic.hpp"
#include "seshadri/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace seshadri {

using Exponent = std::vector<unsigned>;

inline unsigned total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0U); }

/// Graded lexicographic order used for every monomial basis in the library:
/// lower total degree first, and within one degree the lexicographically
/// larger exponent first. In two variables (s, t):
///   1, s, t, s^2, s*t, t^2, s^3, ...
struct GradedOrder {
  bool operator()(const Exponent& a, const Exponent& b) const {
    const unsigned da = total_degree(a);
    const unsigned db = total_degree(b);
    if (da != db) return da < db;
    return b < a;
  }
};

/// All exponents of total degree exactly `degree` in `nvars` variables, in
/// graded order.
std::vector<Exponent> monomials_of_degree(std::size_t nvars, unsigned degree);
/// All exponents of total degree <= `degree`, in graded order. The result
/// has C(nvars + degree, nvars) entries.
std::vector<Exponent> monomials_up_to(std::size_t nvars, unsigned degree);

/// Default variable names: s, t, u for up to three variables, x1..xn
/// otherwise.
std::vector<std::string> default_variable_names(std::size_t nvars);

namespace detail {
inline std::string coefficient_text(const Rational& c) { return c.str(); }
inline std::string coefficient_text(const Quadratic& c) { return c.is_rational() ? c.str() : "(" + c.str() + ")"; }
inline bool is_negative_rational(const Rational& c) { return c.sign() < 0; }
inline bool is_negative_rational(const Quadratic& c) { return c.is_rational() && c.rational_part().sign() < 0; }
inline bool is_zero_coeff(const Rational& c) { return c.is_zero(); }
inline bool is_zero_coeff(const Quadratic& c) { return c.is_zero(); }
}  // namespace detail

/// Multivariate polynomial with exact coefficients (Rational or Quadratic).
/// No zero coefficient is ever stored. An optional weight vector defines a
/// weighted grading with wdeg(x^e) = sum w_i e_i.
template <class T>
class Polynomial {
 public:
  using Coefficient = T;
  using Terms = std::map<Exponent, T, GradedOrder>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const T& c) {
    Polynomial p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
  }
  static Polynomial variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw std::out_of_range("variable index out of range");
    Exponent e(nvars, 0);
    e[index] = 1;
    return monomial(std::move(e), T(1));
  }
  static Polynomial monomial(Exponent e, const T& c) {
    Polynomial p(e.size());
    p.add_term(std::move(e), c);
    return p;
  }

  [[nodiscard]] std::size_t nvars() const { return nvars_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  [[nodiscard]] T coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? T(0) : it->second;
  }

  void add_term(Exponent e, const T& c) {
    if (e.size() != nvars_) throw std::invalid_argument("exponent length does not match variable count");
    if (detail::is_zero_coeff(c)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (detail::is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  void set_weights(std::vector<unsigned> w) {
    if (w.size() != nvars_) throw std::invalid_argument("weight vector length does not match variable count");
    if (std::any_of(w.begin(), w.end(), [](unsigned x) { return x == 0; })) {
      throw std::invalid_argument("weights must be positive");
    }
    weights_ = std::move(w);
  }
  [[nodiscard]] const std::optional<std::vector<unsigned>>& weights() const { return weights_; }

  [[nodiscard]] unsigned weighted_degree(const Exponent& e) const {
    if (!weights_) return total_degree(e);
    unsigned d = 0;
    for (std::size_t i = 0; i < nvars_; ++i) d += (*weights_)[i] * e[i];
    return d;
  }

  /// Sum of the terms of weighted degree exactly `degree`.
  [[nodiscard]] Polynomial weighted_component(unsigned degree) const {
    Polynomial out(nvars_);
    out.weights_ = weights_;
    for (const auto& [e, c] : terms_) {
      if (weighted_degree(e) == degree) out.terms_.emplace(e, c);
    }
    return out;
  }

  /// Largest total degree; 0 for the zero polynomial.
  [[nodiscard]] unsigned degree() const {
    unsigned d = 0;
    for (const auto& kv : terms_) d = std::max(d, total_degree(kv.first));
    return d;
  }

  /// Smallest total degree of a term; infinite for the zero polynomial.
  [[nodiscard]] ExtendedNat order() const {
    if (terms_.empty()) return ExtendedNat::infinity();
    return ExtendedNat(total_degree(terms_.begin()->first));
  }

  template <class U>
  [[nodiscard]] Polynomial<U> cast() const {
    Polynomial<U> out(nvars_);
    for (const auto& [e, c] : terms_) out.add_term(e, U(c));
    if (weights_) out.set_weights(*weights_);
    return out;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Polynomial& operator*=(const T& c) {
    if (detail::is_zero_coeff(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& kv : terms_) kv.second *= c;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= T(-1); }
  friend Polynomial operator*(Polynomial a, const T& c) { return a *= c; }
  friend Polynomial operator*(const T& c, Polynomial a) { return a *= c; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial out(a.nvars_);
    out.weights_ = a.weights_ ? a.weights_ : b.weights_;
    Exponent e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Replaces variable `index` by `replacement`.
  [[nodiscard]] Polynomial substitute(std::size_t index, const Polynomial& replacement) const {
    if (index >= nvars_) throw std::out_of_range("substitute: variable index out of range");
    check_compatible(replacement);
    std::vector<Polynomial> powers{constant(nvars_, T(1))};
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
      while (powers.size() <= e[index]) powers.push_back(powers.back() * replacement);
      Exponent rest = e;
      rest[index] = 0;
      out += monomial(std::move(rest), c) * powers[e[index]];
    }
    out.weights_ = weights_;
    return out;
  }

  /// f(X + x): the Taylor expansion of f around the point x, expressed in the
  /// shifted coordinates.
  [[nodiscard]] Polynomial translate(const std::vector<T>& point) const {
    if (point.size() != nvars_) throw std::invalid_argument("translate: point dimension mismatch");
    Polynomial out(nvars_);
    Exponent beta(nvars_);
    for (const auto& [alpha, c] : terms_) {
      std::fill(beta.begin(), beta.end(), 0U);
      while (true) {
        T coeff = c;
        for (std::size_t i = 0; i < nvars_; ++i) {
          if (beta[i] == alpha[i]) continue;
          coeff *= T(Rational(binomial(alpha[i], beta[i]))) * power_of(point[i], alpha[i] - beta[i]);
        }
        out.add_term(beta, coeff);
        std::size_t i = 0;
        while (i < nvars_ && beta[i] == alpha[i]) beta[i++] = 0;
        if (i == nvars_) break;
        ++beta[i];
      }
    }
    out.weights_ = weights_;
    return out;
  }

  [[nodiscard]] std::string str(const std::vector<std::string>& names) const;
  [[nodiscard]] std::string str() const { return str(default_variable_names(nvars_)); }

 private:
  static T power_of(const T& x, unsigned k) {
    T out(1);
    for (unsigned i = 0; i < k; ++i) out *= x;
    return out;
  }
  void check_compatible(const Polynomial& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("polynomials over different variable counts");
  }

  std::size_t nvars_;
  Terms terms_;
  std::optional<std::vector<unsigned>> weights_;
};

template <class T>
Polynomial<T> pow(const Polynomial<T>& base, unsigned exponent) {
  Polynomial<T> out = Polynomial<T>::constant(base.nvars(), T(1));
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

template <class T>
std::string Polynomial<T>::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  if (names.size() < nvars_) throw std::invalid_argument("not enough variable names");
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    const bool negative = detail::is_negative_rational(c);
    const T magnitude = negative ? T(-c) : c;
    std::string coeff = detail::coefficient_text(magnitude);
    std::string piece;
    if (mono.empty()) {
      piece = coeff;
    } else if (coeff == "1") {
      piece = mono;
    } else {
      piece = coeff + "*" + mono;
    }
    if (out.empty()) {
      out = negative ? "-" + piece : piece;
    } else {
      out += (negative ? "-" : "+") + piece;
    }
  }
  return out;
}

using RationalPolynomial = Polynomial<Rational>;
using QuadraticPolynomial = Polynomial<Quadratic>;

/// Multiplicity of f at x: the smallest total degree of a nonzero term of
/// f(X + x). Infinite iff f = 0.
template <class T>
ExtendedNat multiplicity_at(const Polynomial<T>& f, const std::vector<T>& point) {
  if (f.is_zero()) return ExtendedNat::infinity();
  return f.translate(point).order();
}

/// Taylor coefficients of f at x in every monomial of total degree <= order,
/// listed in graded order (see GradedOrder). Length C(n + order, n).
template <class T>
std::vector<T> jet_coefficients(const Polynomial<T>& f, const std::vector<T>& point, unsigned order) {
  const auto shifted = f.translate(point);
  std::vector<T> out;
  for (const auto& e : monomials_up_to(f.nvars(), order)) out.push_back(shifted.coefficient(e));
  return out;
}

/// Parses a polynomial in the variables s, t, u (or x1, x2, ...) with integer
/// or rational coefficients, `sqrt(D)` constants, + - * ^, division by
/// constants and parentheses. Throws std::invalid_argument on bad input or on
/// a variable outside the first `nvars`.
QuadraticPolynomial parse_polynomial(std::string_view text, std::size_t nvars);
/// As parse_polynomial but rejects any irrational coefficient.
RationalPolynomial parse_rational_polynomial(std::string_view text, std::size_t nvars);

/// Rational polynomial embedded in Q(sqrt D) coefficients.
inline QuadraticPolynomial to_quadratic(const RationalPolynomial& f) { return f.cast<Quadratic>(); }

}  // namespace seshadri
