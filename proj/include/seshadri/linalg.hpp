#pragma once

#include "seshadri/matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

namespace seshadri {

namespace detail {

/// Row-major working copy used by the elimination kernels.
template <class T>
struct Dense {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<T> data;

  T& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const T& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols; ++c) std::swap(at(a, c), at(b, c));
  }
};

template <class Derived>
Dense<typename Derived::Scalar> to_dense(const Eigen::MatrixBase<Derived>& m) {
  using T = typename Derived::Scalar;
  Dense<T> out;
  out.rows = static_cast<std::size_t>(m.rows());
  out.cols = static_cast<std::size_t>(m.cols());
  out.data.reserve(out.rows * out.cols);
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) out.data.push_back(m(r, c));
  }
  return out;
}

/// Rational rows scaled by the lcm of their denominators.
template <class Derived>
Dense<Integer> integral_rows(const Eigen::MatrixBase<Derived>& m) {
  Dense<Integer> out;
  out.rows = static_cast<std::size_t>(m.rows());
  out.cols = static_cast<std::size_t>(m.cols());
  out.data.resize(out.rows * out.cols);
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const Rational& v = m(r, c);
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.raw().get_den_mpz_t());
    }
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const Rational& v = m(r, c);
      out.at(r, c) = v.num() * (l / v.den());
    }
  }
  return out;
}

/// Fraction-free (Bareiss) forward elimination in place. Returns the rank and,
/// when the matrix is square, leaves the determinant (up to the sign recorded
/// in `swaps`) in the last pivot.
template <class T>
std::size_t bareiss_eliminate(Dense<T>& a, std::size_t* swaps = nullptr, T* last_pivot = nullptr) {
  std::size_t rank = 0;
  T prev(1);
  std::size_t nswaps = 0;
  for (std::size_t col = 0; col < a.cols && rank < a.rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < a.rows && is_zero(a.at(pivot, col))) ++pivot;
    if (pivot == a.rows) continue;
    if (pivot != rank) {
      a.swap_rows(pivot, rank);
      ++nswaps;
    }
    const T p = a.at(rank, col);
    for (std::size_t r = rank + 1; r < a.rows; ++r) {
      const T lead = a.at(r, col);
      for (std::size_t c = col + 1; c < a.cols; ++c) {
        T v = p * a.at(r, c);
        if (!is_zero(lead)) v -= lead * a.at(rank, c);
        a.at(r, c) = exact_quotient(v, prev);
      }
      a.at(r, col) = T(0);
    }
    prev = p;
    ++rank;
  }
  if (swaps != nullptr) *swaps = nswaps;
  if (last_pivot != nullptr) *last_pivot = prev;
  return rank;
}

/// Gauss-Jordan reduction over a field. Returns pivot columns in order.
template <class T>
std::vector<std::size_t> reduce_row_echelon(Dense<T>& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols && row < a.rows; ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows && is_zero(a.at(pivot, col))) ++pivot;
    if (pivot == a.rows) continue;
    a.swap_rows(pivot, row);
    const T inv = T(1) / a.at(row, col);
    for (std::size_t c = col; c < a.cols; ++c) a.at(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows; ++r) {
      if (r == row || is_zero(a.at(r, col))) continue;
      const T factor = a.at(r, col);
      for (std::size_t c = col; c < a.cols; ++c) {
        if (!is_zero(a.at(row, c))) a.at(r, c) -= factor * a.at(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

/// Rank over the coefficient field by fraction-free elimination.
///
/// Rational input is first scaled row by row to integers, so all the
/// elimination runs in Z with exact divisions.
template <class Derived>
std::size_t exact_rank(const Eigen::MatrixBase<Derived>& m) {
  using T = typename Derived::Scalar;
  if constexpr (std::is_same_v<T, Rational>) {
    auto work = detail::integral_rows(m);
    return detail::bareiss_eliminate(work);
  } else {
    auto work = detail::to_dense(m);
    return detail::bareiss_eliminate(work);
  }
}

template <class Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  using T = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0) return T(1);
  auto work = detail::to_dense(m);
  std::size_t swaps = 0;
  T last(1);
  const std::size_t rank = detail::bareiss_eliminate(work, &swaps, &last);
  if (rank < work.rows) return T(0);
  return swaps % 2 == 0 ? last : -last;
}

/// Basis of the right nullspace, one vector per column, in the order of the
/// free columns of the reduced row echelon form.
template <class Derived>
Matrix<typename Derived::Scalar> nullspace(const Eigen::MatrixBase<Derived>& m) {
  using T = typename Derived::Scalar;
  auto work = detail::to_dense(m);
  const auto pivots = detail::reduce_row_echelon(work);
  const std::size_t n = work.cols;
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix<T> basis = Matrix<T>::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n - pivots.size()));
  Eigen::Index k = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    basis(static_cast<Eigen::Index>(free), k) = T(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (!is_zero(work.at(i, free))) basis(static_cast<Eigen::Index>(pivots[i]), k) = -work.at(i, free);
    }
    ++k;
  }
  return basis;
}

/// Unique solution of A x = b; throws std::domain_error if A is singular.
template <class DerivedA, class DerivedB>
Vector<typename DerivedA::Scalar> solve_unique(const Eigen::MatrixBase<DerivedA>& a,
                                               const Eigen::MatrixBase<DerivedB>& b) {
  using T = typename DerivedA::Scalar;
  if (a.rows() != a.cols() || b.rows() != a.rows()) throw std::invalid_argument("solve_unique: shape mismatch");
  Matrix<T> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  auto work = detail::to_dense(aug);
  const auto pivots = detail::reduce_row_echelon(work);
  if (pivots.size() != static_cast<std::size_t>(a.cols()) ||
      (!pivots.empty() && pivots.back() == static_cast<std::size_t>(a.cols()))) {
    throw std::domain_error("solve_unique: singular system");
  }
  Vector<T> x(a.cols());
  for (Eigen::Index i = 0; i < a.cols(); ++i) x(i) = work.at(static_cast<std::size_t>(i), work.cols - 1);
  return x;
}

/// Rank of a rational matrix reduced modulo the prime p, or nullopt when some
/// denominator vanishes mod p. The modular rank never exceeds the rank over Q,
/// so a full-row-rank answer here certifies full row rank over Q.
std::optional<std::size_t> modular_rank(const RationalMatrix& m, std::uint64_t p);

/// Residue of a rational modulo the prime p, or nullopt if p divides the
/// denominator.
std::optional<std::uint64_t> residue(const Rational& x, std::uint64_t p);

inline constexpr std::uint64_t kCertificatePrime = 2305843009213693951ULL;  // 2^61 - 1

namespace modp {

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}
inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  const std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a >= b ? a - b : a + p - b; }
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
inline std::uint64_t inv(std::uint64_t a, std::uint64_t p) { return pow(a, p - 2, p); }

/// Incremental row-echelon basis over F_p. `insert` reports whether the row
/// was independent of the rows inserted so far.
class EchelonBasis {
 public:
  EchelonBasis(std::size_t cols, std::uint64_t p) : cols_(cols), p_(p) {}
  bool insert(std::vector<std::uint64_t> row);
  [[nodiscard]] std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t cols_;
  std::uint64_t p_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::size_t> pivot_cols_;
};

}  // namespace modp

}  // namespace seshadri
