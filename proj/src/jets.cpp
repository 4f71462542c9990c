#include "seshadri/jets.hpp"

#include <algorithm>
#include <stdexcept>

namespace seshadri {

namespace {

void check_point(const Point& x, std::size_t n, const char* what) {
  if (x.size() != n) {
    throw std::invalid_argument(std::string(what) + ": point has " + std::to_string(x.size()) +
                                " coordinates, expected " + std::to_string(n));
  }
}

bool dominates(const Exponent& alpha, const Exponent& beta) {
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] < beta[i]) return false;
  }
  return true;
}

RationalMatrix coefficient_columns(const std::vector<RationalPolynomial>& polys, const std::vector<Exponent>& monomials,
                                   std::size_t n, unsigned degree) {
  RationalMatrix out = RationalMatrix::Zero(static_cast<Eigen::Index>(monomials.size()),
                                            static_cast<Eigen::Index>(polys.size()));
  for (std::size_t j = 0; j < polys.size(); ++j) {
    const auto& f = polys[j];
    if (f.nvars() != n) throw std::invalid_argument("span condition: polynomial in the wrong number of variables");
    if (f.degree() > degree) throw std::invalid_argument("span condition: basis polynomial exceeds the system degree");
    for (std::size_t i = 0; i < monomials.size(); ++i) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = f.coefficient(monomials[i]);
    }
  }
  return out;
}

/// C(n + s, n) for s = 0..degree: number of jet conditions of order <= s.
std::vector<std::size_t> jet_counts(std::size_t n, unsigned degree) {
  std::vector<std::size_t> out;
  for (unsigned s = 0; s <= degree; ++s) out.push_back(binomial(static_cast<unsigned>(n) + s, s).get_ui());
  return out;
}

bool surjective_exact(const LinearSystem& w, const Point& x, unsigned s) {
  const auto m = jet_matrix(w, x, s);
  if (m.rows() > m.cols()) return false;
  return exact_rank(m) == static_cast<std::size_t>(m.rows());
}

int jet_separation_exact(const LinearSystem& w, const Point& x) {
  int s = -1;
  for (unsigned order = 0; order <= w.degree(); ++order) {
    if (!surjective_exact(w, x, order)) break;
    s = static_cast<int>(order);
  }
  return s;
}

/// Number of leading jet rows (graded order, orders <= degree) that are
/// linearly independent mod p, or nullopt if x or the basis does not reduce.
std::optional<std::size_t> independent_prefix_mod_p(const LinearSystem& w, const Point& x, std::uint64_t p) {
  const std::size_t n = w.ambient_dimension();
  const unsigned d = w.degree();
  std::vector<std::uint64_t> xr(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = residue(x[i], p);
    if (!r) return std::nullopt;
    xr[i] = *r;
  }
  const auto& mons = w.monomials();
  const std::size_t nmon = mons.size();
  const std::size_t dim = w.dimension();

  std::vector<std::vector<std::uint64_t>> basis_mod;
  if (!w.is_complete()) {
    const RationalMatrix b = w.basis();
    basis_mod.assign(nmon, std::vector<std::uint64_t>(dim));
    for (std::size_t i = 0; i < nmon; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        const auto r = residue(b(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)), p);
        if (!r) return std::nullopt;
        basis_mod[i][j] = *r;
      }
    }
  }

  std::vector<std::vector<std::uint64_t>> powers(n, std::vector<std::uint64_t>(d + 1, 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (unsigned k = 1; k <= d; ++k) powers[i][k] = modp::mul(powers[i][k - 1], xr[i], p);
  }
  std::vector<std::vector<std::uint64_t>> pascal(d + 1, std::vector<std::uint64_t>(d + 1, 0));
  for (unsigned a = 0; a <= d; ++a) {
    pascal[a][0] = 1;
    for (unsigned b = 1; b <= a; ++b) pascal[a][b] = modp::add(pascal[a - 1][b - 1], b < a ? pascal[a - 1][b] : 0, p);
  }

  modp::EchelonBasis echelon(dim, p);
  std::vector<std::uint64_t> mono_row(nmon);
  std::size_t independent = 0;
  for (const auto& beta : mons) {
    for (std::size_t a = 0; a < nmon; ++a) {
      const auto& alpha = mons[a];
      if (!dominates(alpha, beta)) {
        mono_row[a] = 0;
        continue;
      }
      std::uint64_t v = 1;
      for (std::size_t i = 0; i < n; ++i) {
        v = modp::mul(v, modp::mul(pascal[alpha[i]][beta[i]], powers[i][alpha[i] - beta[i]], p), p);
      }
      mono_row[a] = v;
    }
    std::vector<std::uint64_t> row;
    if (w.is_complete()) {
      row = mono_row;
    } else {
      row.assign(dim, 0);
      for (std::size_t a = 0; a < nmon; ++a) {
        if (mono_row[a] == 0) continue;
        for (std::size_t j = 0; j < dim; ++j) {
          if (basis_mod[a][j] != 0) row[j] = modp::add(row[j], modp::mul(mono_row[a], basis_mod[a][j], p), p);
        }
      }
    }
    if (!echelon.insert(std::move(row))) break;
    ++independent;
  }
  return independent;
}

}  // namespace

LinearSystem::LinearSystem(std::size_t n, unsigned degree, std::vector<Constraint> constraints)
    : n_(n), degree_(degree), constraints_(std::move(constraints)) {
  if (n_ == 0) throw std::invalid_argument("linear system: ambient dimension must be >= 1");
  monomials_ = monomials_up_to(n_, degree_);
  if (constraints_.empty()) {
    dimension_ = monomials_.size();
    return;
  }
  std::vector<RationalMatrix> blocks;
  Eigen::Index total_rows = 0;
  const auto ncols = static_cast<Eigen::Index>(monomials_.size());
  for (const auto& c : constraints_) {
    if (const auto* mult = std::get_if<MultiplicityCondition>(&c)) {
      check_point(mult->point, n_, "multiplicity condition");
      if (mult->order == 0) continue;
      RationalMatrix rows = monomial_jet_matrix(n_, degree_, mult->point, std::min(mult->order - 1, degree_));
      total_rows += rows.rows();
      blocks.push_back(std::move(rows));
    } else {
      const auto& span = std::get<SpanCondition>(c);
      const RationalMatrix cols = coefficient_columns(span.basis, monomials_, n_, degree_);
      RationalMatrix annihilator = nullspace(RationalMatrix(cols.transpose())).transpose();
      total_rows += annihilator.rows();
      blocks.push_back(std::move(annihilator));
    }
  }
  RationalMatrix stacked = RationalMatrix::Zero(total_rows, ncols);
  Eigen::Index at = 0;
  for (const auto& b : blocks) {
    stacked.middleRows(at, b.rows()) = b;
    at += b.rows();
  }
  basis_ = nullspace(stacked);
  dimension_ = static_cast<std::size_t>(basis_->cols());
}

RationalMatrix LinearSystem::basis() const {
  if (basis_) return *basis_;
  const auto size = static_cast<Eigen::Index>(monomials_.size());
  RationalMatrix identity = RationalMatrix::Zero(size, size);
  for (Eigen::Index i = 0; i < size; ++i) identity(i, i) = Rational(1);
  return identity;
}

std::vector<RationalPolynomial> LinearSystem::basis_polynomials() const {
  const RationalMatrix b = basis();
  std::vector<RationalPolynomial> out;
  for (Eigen::Index j = 0; j < b.cols(); ++j) {
    RationalPolynomial f(n_);
    for (Eigen::Index i = 0; i < b.rows(); ++i) f.add_term(monomials_[static_cast<std::size_t>(i)], b(i, j));
    out.push_back(std::move(f));
  }
  return out;
}

RationalMatrix monomial_jet_matrix(std::size_t n, unsigned degree, const Point& x, unsigned jet_order) {
  check_point(x, n, "jet matrix");
  const auto cols = monomials_up_to(n, degree);
  const auto rows = monomials_up_to(n, jet_order);
  std::vector<std::vector<Rational>> powers(n, std::vector<Rational>(degree + 1, Rational(1)));
  for (std::size_t i = 0; i < n; ++i) {
    for (unsigned k = 1; k <= degree; ++k) powers[i][k] = powers[i][k - 1] * x[i];
  }
  RationalMatrix out = RationalMatrix::Zero(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (!dominates(cols[c], rows[r])) continue;
      Rational v(1);
      for (std::size_t i = 0; i < n; ++i) {
        const unsigned a = cols[c][i];
        const unsigned b = rows[r][i];
        v *= Rational(binomial(a, b)) * powers[i][a - b];
      }
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v;
    }
  }
  return out;
}

RationalMatrix jet_matrix(const LinearSystem& w, const Point& x, unsigned jet_order) {
  RationalMatrix mj = monomial_jet_matrix(w.ambient_dimension(), w.degree(), x, jet_order);
  if (w.is_complete()) return mj;
  return mj * w.basis();
}

int jet_separation(const LinearSystem& w, const Point& x) {
  check_point(x, w.ambient_dimension(), "jet separation");
  if (w.dimension() == 0) return -1;
  const auto prefix = independent_prefix_mod_p(w, x, kCertificatePrime);
  if (!prefix) return jet_separation_exact(w, x);

  // Full row rank mod p certifies full row rank over Q, so every order whose
  // jet rows fit in the independent prefix is surjective.
  const auto counts = jet_counts(w.ambient_dimension(), w.degree());
  int s = -1;
  for (unsigned order = 0; order <= w.degree(); ++order) {
    if (counts[order] > *prefix) break;
    s = static_cast<int>(order);
  }
  // The first order that failed mod p is rechecked exactly.
  for (unsigned order = static_cast<unsigned>(s + 1); order <= w.degree(); ++order) {
    if (counts[order] > w.dimension() || !surjective_exact(w, x, order)) break;
    s = static_cast<int>(order);
  }
  return s;
}

int jet_separation_max(const LinearSystem& w, const std::vector<Point>& points) {
  if (points.empty()) throw std::invalid_argument("jet_separation_max: no points");
  int best = -1;
  for (const auto& x : points) best = std::max(best, jet_separation(w, x));
  return best;
}

Point RandomPointSampler::sample(std::size_t n) {
  Point out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t span = 2 * height_ + 1;
    const long long num = static_cast<long long>(engine_() % span) - static_cast<long long>(height_);
    const long long den = static_cast<long long>(engine_() % height_) + 1;
    out.emplace_back(Integer(std::to_string(num)), Integer(std::to_string(den)));
  }
  return out;
}

std::vector<Point> RandomPointSampler::sample_many(std::size_t n, std::size_t count) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(sample(n));
  return out;
}

CurveUpperBound seshadri_upper_via_curve(const Rational& pairing, unsigned mult, bool meets_base_locus) {
  if (mult == 0) throw std::invalid_argument("curve bound: mult_x C must be >= 1 (C must pass through x)");
  if (pairing.sign() < 0) throw std::invalid_argument("curve bound: L.C must be >= 0");
  return {pairing / Rational(mult), meets_base_locus};
}

SeshadriEstimate moving_seshadri_lower(const SeriesRule& series, const std::vector<Point>& points, unsigned m_max,
                                       const std::vector<CurveRegistration>& curves) {
  if (m_max < 1) throw std::invalid_argument("moving_seshadri_lower: m_max must be >= 1");
  SeshadriEstimate out;
  std::vector<CurveUpperBound> bounds;
  for (const auto& c : curves) bounds.push_back(seshadri_upper_via_curve(c.pairing, c.mult, c.meets_base_locus));

  std::optional<Rational> best;
  for (unsigned m = 1; m <= m_max; ++m) {
    const int s = jet_separation_max(series(m), points);
    out.m_values.push_back(m);
    out.s_values.push_back(s);
    const Rational ratio = Rational(s) / Rational(m);
    if (!best || ratio > *best) best = ratio;
    for (const auto& b : bounds) {
      const Rational cap = Rational(m) * b.bound;
      const bool ok = b.strict ? Rational(s) < cap : Rational(s) <= cap;
      if (!ok) {
        throw std::logic_error("s(series(" + std::to_string(m) + ")) = " + std::to_string(s) +
                               " violates the registered curve bound " + b.bound.str() + (b.strict ? " (strict)" : ""));
      }
    }
  }
  out.lower = *best;
  for (const auto& b : bounds) {
    if (!out.upper || b.bound < *out.upper) out.upper = b.bound;
  }
  if (out.upper) {
    if (out.lower > *out.upper) throw std::logic_error("moving_seshadri_lower: lower bound exceeds curve upper bound");
    out.certified_equal = out.lower == *out.upper;
  }
  return out;
}

SeriesRule complete_series(std::size_t n, unsigned d) {
  return [n, d](unsigned m) { return LinearSystem(n, d * m); };
}

SeriesRule multiplicity_series(std::size_t n, unsigned d, const Point& p, unsigned order) {
  return [n, d, p, order](unsigned m) {
    return LinearSystem(n, d * m, {MultiplicityCondition{p, order * m}});
  };
}

}  // namespace seshadri
