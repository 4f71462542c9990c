#include "seshadri/polynomial.hpp"

#include <cctype>

namespace seshadri {

namespace {

void fill_degree(std::size_t nvars, unsigned degree, std::size_t index, Exponent& current,
                 std::vector<Exponent>& out) {
  if (index + 1 == nvars) {
    current[index] = degree;
    out.push_back(current);
    return;
  }
  for (unsigned k = degree + 1; k-- > 0;) {
    current[index] = k;
    fill_degree(nvars, degree - k, index + 1, current, out);
  }
}

/// Recursive-descent parser over Q(sqrt D) polynomials.
class Parser {
 public:
  Parser(std::string_view text, std::size_t nvars) : text_(text), nvars_(nvars) {}

  QuadraticPolynomial parse() {
    auto p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + " in '" +
                                std::string(text_) + "': " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  QuadraticPolynomial expression() {
    auto acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  QuadraticPolynomial term() {
    auto acc = factor();
    while (true) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (accept('/')) {
        const auto divisor = factor();
        if (divisor.is_zero()) fail("division by zero");
        if (divisor.size() != 1 || divisor.degree() != 0) fail("division is only allowed by constants");
        acc *= Quadratic(1) / divisor.terms().begin()->second;
      } else {
        return acc;
      }
    }
  }

  QuadraticPolynomial factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    auto base = atom();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      const unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (e > 4096) fail("exponent too large");
      return pow(base, static_cast<unsigned>(e));
    }
    return base;
  }

  QuadraticPolynomial atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return QuadraticPolynomial::constant(nvars_, Quadratic(Rational(Integer(std::string(text_.substr(start, pos_ - start))))));
    }
    if (text_.substr(pos_, 5) == "sqrt(") {
      pos_ += 5;
      skip_space();
      bool negative = false;
      if (pos_ < text_.size() && text_[pos_] == '-') {
        negative = true;
        ++pos_;
      }
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an integer radicand");
      long d = std::stol(std::string(text_.substr(start, pos_ - start)));
      if (negative) d = -d;
      if (!accept(')')) fail("expected ')' after radicand");
      if (!is_square_free(d)) fail("radicand must be square-free");
      return QuadraticPolynomial::constant(nvars_, Quadratic::sqrt_of(d));
    }
    std::size_t index = 0;
    if (c == 's' || c == 't' || c == 'u') {
      index = c == 's' ? 0 : (c == 't' ? 1 : 2);
      ++pos_;
    } else if (c == 'x') {
      ++pos_;
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an index after 'x'");
      const unsigned long k = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (k == 0) fail("variables are numbered from x1");
      index = k - 1;
    } else {
      fail("unexpected '" + std::string(1, c) + "'");
    }
    if (index >= nvars_) fail("variable outside the " + std::to_string(nvars_) + "-variable ring");
    return QuadraticPolynomial::variable(nvars_, index);
  }

  std::string_view text_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<Exponent> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Exponent> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Exponent current(nvars, 0);
  fill_degree(nvars, degree, 0, current, out);
  return out;
}

std::vector<Exponent> monomials_up_to(std::size_t nvars, unsigned degree) {
  std::vector<Exponent> out;
  for (unsigned d = 0; d <= degree; ++d) {
    auto piece = monomials_of_degree(nvars, d);
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return out;
}

std::vector<std::string> default_variable_names(std::size_t nvars) {
  if (nvars <= 3) {
    std::vector<std::string> names{"s", "t", "u"};
    names.resize(nvars);
    return names;
  }
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= nvars; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

QuadraticPolynomial parse_polynomial(std::string_view text, std::size_t nvars) {
  return Parser(text, nvars).parse();
}

RationalPolynomial parse_rational_polynomial(std::string_view text, std::size_t nvars) {
  const auto q = parse_polynomial(text, nvars);
  RationalPolynomial out(nvars);
  for (const auto& [e, c] : q.terms()) {
    if (!c.is_rational()) throw std::invalid_argument("irrational coefficient in rational polynomial '" + std::string(text) + "'");
    out.add_term(e, c.rational_part());
  }
  return out;
}

}  // namespace seshadri
