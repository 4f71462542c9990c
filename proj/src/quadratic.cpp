#include "seshadri/quadratic.hpp"

#include <cctype>
#include <stdexcept>

namespace seshadri {

bool is_square_free(long d) {
  if (d == 0 || d == 1) return false;
  long m = d < 0 ? -d : d;
  for (long p = 2; p * p <= m; ++p) {
    if (m % (p * p) == 0) return false;
  }
  return true;
}

Quadratic::Quadratic(Rational a, Rational b, long radicand) : a_(std::move(a)), b_(std::move(b)), d_(radicand) {
  if (!b_.is_zero() && !is_square_free(d_)) {
    throw std::invalid_argument("quadratic field radicand must be square-free and not 0 or 1, got " +
                            std::to_string(d_));
  }
  normalize();
}

long Quadratic::common_radicand(const Quadratic& o) const {
  if (d_ == 0) return o.d_;
  if (o.d_ == 0 || o.d_ == d_) return d_;
  throw std::domain_error("mixing Q(sqrt(" + std::to_string(d_) + ")) with Q(sqrt(" + std::to_string(o.d_) + "))");
}

Quadratic& Quadratic::operator+=(const Quadratic& o) {
  d_ = common_radicand(o);
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

Quadratic& Quadratic::operator-=(const Quadratic& o) {
  d_ = common_radicand(o);
  a_ -= o.a_;
  b_ -= o.b_;
  normalize();
  return *this;
}

Quadratic& Quadratic::operator*=(const Quadratic& o) {
  const long d = common_radicand(o);
  Rational a = a_ * o.a_ + Rational(d) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = d;
  normalize();
  return *this;
}

Quadratic& Quadratic::operator/=(const Quadratic& o) {
  if (o.is_zero()) throw std::domain_error("quadratic field division by zero");
  const Rational n = o.norm();
  *this *= o.conjugate();
  a_ /= n;
  b_ /= n;
  normalize();
  return *this;
}

Quadratic Quadratic::conjugate() const { return Quadratic(a_, -b_, d_); }

Rational Quadratic::norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

std::string Quadratic::str() const {
  if (b_.is_zero()) return a_.str();
  const std::string radical = "sqrt(" + std::to_string(d_) + ")";
  std::string coeff;
  if (b_ == Rational(1)) {
    coeff = radical;
  } else if (b_ == Rational(-1)) {
    coeff = "-" + radical;
  } else {
    coeff = b_.str() + "*" + radical;
  }
  if (a_.is_zero()) return coeff;
  if (coeff[0] == '-') return a_.str() + coeff;
  return a_.str() + "+" + coeff;
}

Quadratic Quadratic::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  const auto rad = s.find("sqrt(");
  if (rad == std::string::npos) return Quadratic(Rational::parse(s));
  const auto close = s.find(')', rad);
  if (close == std::string::npos || close + 1 != s.size()) {
    throw std::invalid_argument("malformed quadratic literal '" + std::string(text) + "'");
  }
  const long d = std::stol(s.substr(rad + 5, close - rad - 5));
  // Split "<a><sign><b>*" from the radical; the sign belongs to b.
  std::string head = s.substr(0, rad);
  Rational b(1);
  Rational a(0);
  if (!head.empty() && head.back() == '*') {
    head.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t i = head.size(); i-- > 1;) {
      if (head[i] == '+' || head[i] == '-') {
        split = i;
        break;
      }
    }
    if (split == std::string::npos) {
      b = Rational::parse(head);
    } else {
      a = Rational::parse(head.substr(0, split));
      b = Rational::parse(head.substr(split));
    }
  } else if (head.empty() || head == "+") {
    b = Rational(1);
  } else if (head == "-") {
    b = Rational(-1);
  } else {
    const char sign = head.back();
    if (sign != '+' && sign != '-') throw std::invalid_argument("malformed quadratic literal '" + std::string(text) + "'");
    a = Rational::parse(head.substr(0, head.size() - 1));
    b = Rational(sign == '-' ? -1 : 1);
  }
  return Quadratic(a, b, d);
}

}  // namespace seshadri
