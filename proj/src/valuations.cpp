#include "seshadri/valuations.hpp"

#include "seshadri/linalg.hpp"
#include "seshadri/matrix.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace seshadri {

MonomialValuation::MonomialValuation(std::vector<unsigned> weights, std::optional<Twist> twist)
    : weights_(std::move(weights)), twist_(std::move(twist)) {
  if (weights_.empty()) throw std::invalid_argument("valuation: weight vector must be nonempty");
  if (std::any_of(weights_.begin(), weights_.end(), [](unsigned w) { return w == 0; })) {
    throw std::invalid_argument("valuation: weights must be >= 1");
  }
  if (twist_) {
    const auto& tw = *twist_;
    if (tw.coordinate >= weights_.size() || tw.base >= weights_.size() || tw.coordinate == tw.base) {
      throw std::invalid_argument("valuation: twist coordinates out of range");
    }
    if (tw.exponent == 0) throw std::invalid_argument("valuation: twist exponent must be >= 1");
  }
}

QuadraticPolynomial MonomialValuation::untwist(const QuadraticPolynomial& f) const {
  if (f.nvars() != nvars()) throw std::invalid_argument("valuation: polynomial has the wrong number of variables");
  if (!twist_) return f;
  const auto& tw = *twist_;
  Exponent e(nvars(), 0);
  e[tw.base] = tw.exponent;
  const auto replacement =
      QuadraticPolynomial::variable(nvars(), tw.coordinate) + QuadraticPolynomial::monomial(e, tw.constant);
  return f.substitute(tw.coordinate, replacement);
}

ExtendedNat valuation_eval(const MonomialValuation& nu, const QuadraticPolynomial& f) {
  const auto g = nu.untwist(f);
  if (g.is_zero()) return ExtendedNat::infinity();
  std::uint64_t best = UINT64_MAX;
  for (const auto& [e, c] : g.terms()) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < e.size(); ++i) v += static_cast<std::uint64_t>(nu.weights()[i]) * e[i];
    best = std::min(best, v);
  }
  return best;
}

ExtendedNat valuation_eval(const MonomialValuation& nu, const RationalPolynomial& f) {
  return valuation_eval(nu, to_quadratic(f));
}

unsigned discrepancy(const MonomialValuation& nu) {
  return std::accumulate(nu.weights().begin(), nu.weights().end(), 0U) - 1;
}

unsigned valuation_of_maximal_ideal(const MonomialValuation& nu) {
  if (!nu.is_twisted()) return *std::min_element(nu.weights().begin(), nu.weights().end());
  std::uint64_t best = UINT64_MAX;
  for (std::size_t i = 0; i < nu.nvars(); ++i) {
    best = std::min(best, valuation_eval(nu, QuadraticPolynomial::variable(nu.nvars(), i)).value());
  }
  return static_cast<unsigned>(best);
}

IzumiRecord izumi_check(const MonomialValuation& nu, const QuadraticPolynomial& f) {
  // On a curve the center is a divisor and nu <= a(nu) mult fails already for
  // nu = ord (a = 0).
  if (nu.nvars() < 2) throw std::invalid_argument("izumi_check: the center must have codimension >= 2 (need n >= 2)");
  IzumiRecord out;
  out.nu_mx = valuation_of_maximal_ideal(nu);
  out.nu_mx_from_twist = nu.is_twisted();
  if (f.is_zero()) {
    out.lower = out.value = out.upper = ExtendedNat::infinity();
    out.holds = true;
    return out;
  }
  const ExtendedNat mult = f.order();
  out.lower = ExtendedNat(out.nu_mx) * mult;
  out.value = valuation_eval(nu, f);
  out.upper = ExtendedNat(discrepancy(nu)) * mult;
  out.holds = out.lower <= out.value && out.value <= out.upper;
  return out;
}

unsigned lattice_min_norm(const std::vector<unsigned>& weights, unsigned target) {
  if (weights.empty()) throw std::invalid_argument("lattice_min_norm: empty weight vector");
  const std::size_t n = weights.size();
  // Every vector of norm `norm`, enumerated coordinate by coordinate.
  std::function<bool(std::size_t, unsigned, unsigned long)> reaches = [&](std::size_t i, unsigned left,
                                                                          unsigned long acc) {
    if (i + 1 == n) return acc + static_cast<unsigned long>(weights[i]) * left >= target;
    for (unsigned v = 0; v <= left; ++v) {
      if (reaches(i + 1, left - v, acc + static_cast<unsigned long>(weights[i]) * v)) return true;
    }
    return false;
  };
  for (unsigned norm = 0;; ++norm) {
    if (reaches(0, norm, 0)) return norm;
  }
}

MinMultiplicity ideal_min_multiplicity(const MonomialValuation& nu, unsigned k) {
  if (nu.is_twisted()) throw std::invalid_argument("ideal_min_multiplicity: twisted valuations are not monomial");
  if (k == 0) throw std::invalid_argument("ideal_min_multiplicity: k must be >= 1");
  const unsigned a = discrepancy(nu);
  const unsigned wmax = *std::max_element(nu.weights().begin(), nu.weights().end());
  const unsigned target = a * k;
  const unsigned closed = (target + wmax - 1) / wmax;
  if (nu.nvars() <= 4 && closed <= 40) {
    const unsigned scanned = lattice_min_norm(nu.weights(), target);
    if (scanned != closed) {
      throw std::logic_error("ideal_min_multiplicity: closed form " + std::to_string(closed) +
                             " disagrees with lattice scan " + std::to_string(scanned));
    }
  }
  return {closed, Rational(closed) / Rational(k)};
}

MonomialValuation galois_valuation(unsigned m) {
  if (m < 2) throw std::invalid_argument("galois valuation: m must be >= 2");
  return MonomialValuation({1, m}, Twist{1, 0, m - 1, Quadratic::sqrt_of(2)});
}

unsigned galois_default_cap(unsigned m, unsigned k) { return 4 * m * k; }

namespace {

/// Monomials s^i t^j with i + (m - 1) j = delta, in graded order.
std::vector<Exponent> piece_monomials(unsigned m, unsigned delta) {
  std::vector<Exponent> out;
  for (unsigned j = 0; (m - 1) * j <= delta; ++j) out.push_back({delta - (m - 1) * j, j});
  std::sort(out.begin(), out.end(), GradedOrder());
  return out;
}

/// Appends, for each Q(sqrt 2)-linear functional (a row of `functionals`),
/// its rational and sqrt(2) parts as two rational rows.
void append_split_rows(const Matrix<Quadratic>& functionals, std::vector<std::vector<Rational>>& rows) {
  for (Eigen::Index r = 0; r < functionals.rows(); ++r) {
    std::vector<Rational> re(static_cast<std::size_t>(functionals.cols()));
    std::vector<Rational> im(re.size());
    for (Eigen::Index c = 0; c < functionals.cols(); ++c) {
      re[static_cast<std::size_t>(c)] = functionals(r, c).rational_part();
      im[static_cast<std::size_t>(c)] = functionals(r, c).radical_part();
    }
    rows.push_back(std::move(re));
    rows.push_back(std::move(im));
  }
}

RationalMatrix rational_nullspace(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  if (rows.empty()) {
    RationalMatrix id = RationalMatrix::Zero(static_cast<Eigen::Index>(cols), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < cols; ++i) id(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = Rational(1);
    return id;
  }
  RationalMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
  }
  return nullspace(m);
}

/// Smallest total degree of a monomial on which some column of `basis` is
/// nonzero.
std::optional<unsigned> min_support_degree(const RationalMatrix& basis, const std::vector<Exponent>& monomials) {
  std::optional<unsigned> best;
  for (Eigen::Index r = 0; r < basis.rows(); ++r) {
    bool used = false;
    for (Eigen::Index c = 0; c < basis.cols() && !used; ++c) used = !basis(r, c).is_zero();
    if (!used) continue;
    const unsigned d = total_degree(monomials[static_cast<std::size_t>(r)]);
    if (!best || d < *best) best = d;
  }
  return best;
}

struct Piece {
  std::vector<Exponent> monomials;
  std::vector<std::vector<Rational>> membership_rows;  ///< rational c with these rows = 0 are members
  RationalMatrix members;
};

Piece galois_piece(unsigned m, unsigned k, unsigned delta) {
  Piece piece;
  piece.monomials = piece_monomials(m, delta);
  const std::size_t nmon = piece.monomials.size();
  std::map<Exponent, std::size_t> index;
  for (std::size_t i = 0; i < nmon; ++i) index.emplace(piece.monomials[i], i);

  Exponent sdeg{m - 1, 0};
  const auto y = QuadraticPolynomial::variable(2, 1) - QuadraticPolynomial::monomial(sdeg, Quadratic::sqrt_of(2));
  std::vector<std::vector<Quadratic>> columns;
  for (unsigned p = 0; p <= k; ++p) {
    const unsigned gen_weight = m * k - p;
    if (gen_weight > delta) continue;
    const auto generator = pow(y, p) * QuadraticPolynomial::monomial({m * (k - p), 0}, Quadratic(1));
    for (const auto& cof : piece_monomials(m, delta - gen_weight)) {
      const auto product = generator * QuadraticPolynomial::monomial(cof, Quadratic(1));
      std::vector<Quadratic> col(nmon, Quadratic(0));
      for (const auto& [e, c] : product.terms()) col[index.at(e)] = c;
      columns.push_back(std::move(col));
    }
  }
  if (columns.empty()) {
    piece.members = RationalMatrix::Zero(static_cast<Eigen::Index>(nmon), 0);
    return piece;
  }
  // Transpose of the span: one row per product.
  Matrix<Quadratic> span_t(static_cast<Eigen::Index>(columns.size()), static_cast<Eigen::Index>(nmon));
  for (std::size_t r = 0; r < columns.size(); ++r) {
    for (std::size_t c = 0; c < nmon; ++c) span_t(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = columns[r][c];
  }
  const Matrix<Quadratic> annihilator = nullspace(span_t);
  append_split_rows(Matrix<Quadratic>(annihilator.transpose()), piece.membership_rows);
  piece.members = rational_nullspace(piece.membership_rows, nmon);
  return piece;
}

RationalPolynomial select_witness(const Piece& piece, unsigned m, unsigned best) {
  const auto nu = galois_valuation(m);
  const std::size_t nmon = piece.monomials.size();
  // Image of each piece monomial in the (s, y) coordinates.
  std::vector<QuadraticPolynomial> images;
  for (const auto& e : piece.monomials) images.push_back(nu.untwist(QuadraticPolynomial::monomial(e, Quadratic(1))));

  auto column_with_degree = [&](const RationalMatrix& basis) -> std::optional<Eigen::Index> {
    for (Eigen::Index c = 0; c < basis.cols(); ++c) {
      for (Eigen::Index r = 0; r < basis.rows(); ++r) {
        if (!basis(r, c).is_zero() && total_degree(piece.monomials[static_cast<std::size_t>(r)]) == best) return c;
      }
    }
    return std::nullopt;
  };

  RationalMatrix chosen = piece.members;
  for (unsigned v = 1;; ++v) {
    // Conditions nu >= v: every (s, y)-coefficient of weight < v vanishes.
    std::map<Exponent, std::vector<Quadratic>, GradedOrder> low;
    for (std::size_t a = 0; a < nmon; ++a) {
      for (const auto& [e, c] : images[a].terms()) {
        if (e[0] + m * e[1] >= v) continue;
        auto& row = low[e];
        if (row.empty()) row.assign(nmon, Quadratic(0));
        row[a] = c;
      }
    }
    auto rows = piece.membership_rows;
    Matrix<Quadratic> functionals(static_cast<Eigen::Index>(low.size()), static_cast<Eigen::Index>(nmon));
    Eigen::Index r = 0;
    for (const auto& kv : low) {
      for (std::size_t a = 0; a < nmon; ++a) functionals(r, static_cast<Eigen::Index>(a)) = kv.second[a];
      ++r;
    }
    append_split_rows(functionals, rows);
    RationalMatrix candidate = rational_nullspace(rows, nmon);
    if (!column_with_degree(candidate)) break;
    chosen = std::move(candidate);
  }

  const Eigen::Index col = *column_with_degree(chosen);
  RationalPolynomial witness(2);
  for (std::size_t a = 0; a < nmon; ++a) witness.add_term(piece.monomials[a], chosen(static_cast<Eigen::Index>(a), col));
  // Scale so the term with the highest power of t is monic.
  const Exponent* lead = nullptr;
  Rational lead_coeff;
  for (const auto& [e, c] : witness.terms()) {
    if (lead == nullptr || e[1] >= (*lead)[1]) {
      lead = &e;
      lead_coeff = c;
    }
  }
  witness *= Rational(1) / lead_coeff;
  return witness;
}

}  // namespace

GaloisResult galois_min_mult(unsigned m, unsigned k, std::optional<unsigned> degree_cap) {
  if (m < 2) throw std::invalid_argument("galois_min_mult: m must be >= 2");
  if (k < 1) throw std::invalid_argument("galois_min_mult: k must be >= 1");
  if (degree_cap && *degree_cap == 0) throw std::invalid_argument("galois_min_mult: degree cap must be >= 1");
  unsigned cap = degree_cap.value_or(galois_default_cap(m, k));
  const unsigned ceiling = std::max(16 * m * k, cap);

  GaloisResult out;
  out.bound = Rational(2 * m * k) / Rational(2 * m - 1);
  std::optional<unsigned> best;
  std::optional<Piece> best_piece;
  // y^k has the smallest weight among the generators.
  for (unsigned delta = k * (m - 1);; ++delta) {
    // Every monomial of weight delta has total degree >= delta / (m - 1).
    if (best && (delta + m - 2) / (m - 1) >= *best) {
      out.complete = true;
      break;
    }
    if (delta > cap) {
      if (cap >= ceiling) break;
      cap = std::min(2 * cap, ceiling);
    }
    Piece piece = galois_piece(m, k, delta);
    const auto d = min_support_degree(piece.members, piece.monomials);
    if (d && (!best || *d < *best)) {
      best = d;
      best_piece = std::move(piece);
    }
  }
  if (!best) {
    throw std::runtime_error("galois_min_mult: no rational member of J_k up to weighted degree " +
                             std::to_string(cap));
  }
  out.min_mult = *best;
  out.degree_cap = cap;
  out.witness = select_witness(*best_piece, m, *best);
  if (Rational(out.min_mult) < out.bound) {
    throw std::logic_error("galois_min_mult: multiplicity " + std::to_string(out.min_mult) + " is below 2mk/(2m-1)");
  }
  return out;
}

}  // namespace seshadri
