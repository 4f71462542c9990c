#include "seshadri/linalg.hpp"

namespace seshadri {

namespace modp {

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1U) result = mul(result, a, p);
    a = mul(a, a, p);
    e >>= 1U;
  }
  return result;
}

bool EchelonBasis::insert(std::vector<std::uint64_t> row) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::uint64_t f = row[pivot_cols_[i]];
    if (f == 0) continue;
    const auto& base = rows_[i];
    for (std::size_t c = pivot_cols_[i]; c < cols_; ++c) {
      if (base[c] != 0) row[c] = sub(row[c], mul(f, base[c], p_), p_);
    }
  }
  std::size_t lead = 0;
  while (lead < cols_ && row[lead] == 0) ++lead;
  if (lead == cols_) return false;
  const std::uint64_t scale = inv(row[lead], p_);
  for (std::size_t c = lead; c < cols_; ++c) {
    if (row[c] != 0) row[c] = mul(row[c], scale, p_);
  }
  rows_.push_back(std::move(row));
  pivot_cols_.push_back(lead);
  return true;
}

}  // namespace modp

std::optional<std::uint64_t> residue(const Rational& x, std::uint64_t p) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  const std::uint64_t d = mpz_fdiv_ui(x.raw().get_den_mpz_t(), p);
  if (d == 0) return std::nullopt;
  const std::uint64_t n = mpz_fdiv_ui(x.raw().get_num_mpz_t(), p);
  return modp::mul(n, modp::inv(d, p), p);
}

std::optional<std::size_t> modular_rank(const RationalMatrix& m, std::uint64_t p) {
  const auto cols = static_cast<std::size_t>(m.cols());
  modp::EchelonBasis basis(cols, p);
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    std::vector<std::uint64_t> row(cols);
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const auto v = residue(m(r, c), p);
      if (!v) return std::nullopt;
      row[static_cast<std::size_t>(c)] = *v;
    }
    basis.insert(std::move(row));
  }
  return basis.rank();
}

}  // namespace seshadri
