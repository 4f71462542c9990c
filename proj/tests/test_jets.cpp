#include "oracles.hpp"

#include "seshadri/jets.hpp"

#include <doctest.h>

using namespace seshadri;

namespace {

const Point kOrigin{Rational(0), Rational(0)};

Point small_point(std::mt19937_64& rng, std::size_t n) {
  Point p;
  for (std::size_t i = 0; i < n; ++i) p.emplace_back(Integer(oracle::uniform(rng, -40, 40)), Integer(oracle::uniform(rng, 1, 9)));
  return p;
}

}  // namespace

TEST_CASE("jet separation examples") {
  RandomPointSampler sampler(kDefaultSeed);
  const auto x = sampler.sample(2);
  CHECK(jet_separation(LinearSystem(2, 3), x) == 3);
  const LinearSystem through_p(2, 3, {MultiplicityCondition{kOrigin, 1}});
  CHECK(through_p.dimension() == 9);
  CHECK(jet_separation(through_p, x) == 2);
  const LinearSystem empty(2, 3, {MultiplicityCondition{kOrigin, 4}});
  CHECK(empty.dimension() == 0);
  CHECK(jet_separation(empty, x) == -1);
  // A base point: every section vanishes at p itself.
  CHECK(jet_separation(through_p, kOrigin) == -1);
}

TEST_CASE("monomial jet matrix matches Taylor expansion") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 1, 3));
    const unsigned d = static_cast<unsigned>(oracle::uniform(rng, 0, 4));
    const unsigned s = static_cast<unsigned>(oracle::uniform(rng, 0, 3));
    const Point x = small_point(rng, n);
    const auto m = monomial_jet_matrix(n, d, x, s);
    const auto rows = monomials_up_to(n, s);
    const auto cols = monomials_up_to(n, d);
    REQUIRE(static_cast<std::size_t>(m.rows()) == oracle::count_monomials(n, s));
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const auto shifted = RationalPolynomial::monomial(cols[c], Rational(1)).translate(x);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        CHECK(m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) == shifted.coefficient(rows[r]));
      }
    }
  }
}

TEST_CASE("jet separation agrees with the Taylor-rank oracle") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 1, 2));
    const unsigned d = static_cast<unsigned>(oracle::uniform(rng, 1, 4));
    const unsigned k = static_cast<unsigned>(oracle::uniform(rng, 0, d + 1));
    const Point p = small_point(rng, n);
    // Mix generic points with the constraint point itself.
    const Point x = (i % 5 == 0) ? p : small_point(rng, n);
    const LinearSystem w(n, d, {MultiplicityCondition{p, k}});
    const auto sections = oracle::sections_with_multiplicity(n, d, p, k);
    CHECK(w.dimension() == sections.size());
    CHECK(jet_separation(w, x) == oracle::jet_separation(sections, x, d));
  }
}

TEST_CASE("span constraints") {
  const auto basis = std::vector<RationalPolynomial>{parse_rational_polynomial("1", 2), parse_rational_polynomial("s^2", 2),
                                                     parse_rational_polynomial("t^2", 2)};
  const LinearSystem w(2, 2, {SpanCondition{basis}});
  CHECK(w.dimension() == 3);
  const Point x{Rational(3, 7), Rational(-5, 2)};
  CHECK(jet_separation(w, x) == oracle::jet_separation(basis, x, 2));
  CHECK(jet_separation(w, x) == 1);
  // At the origin the differentials of s^2 and t^2 vanish.
  CHECK(jet_separation(w, kOrigin) == 0);

  const LinearSystem both(2, 2, {SpanCondition{basis}, MultiplicityCondition{x, 1}});
  CHECK(both.dimension() == 2);
  CHECK_THROWS_AS(LinearSystem(2, 1, {SpanCondition{basis}}), std::invalid_argument);
}

TEST_CASE("complete systems separate exactly m*d jets") {
  RandomPointSampler sampler(kDefaultSeed);
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto points = sampler.sample_many(n, 1);
    for (unsigned d = 1; d <= 4; ++d) {
      const auto series = complete_series(n, d);
      for (unsigned m = 1; m <= 4; ++m) CHECK(jet_separation_max(series(m), points) == static_cast<int>(m * d));
    }
  }
}

TEST_CASE("generic value is reached at independent random points") {
  RandomPointSampler sampler(7);
  const LinearSystem w(2, 6, {MultiplicityCondition{kOrigin, 2}, MultiplicityCondition{{Rational(1), Rational(2)}, 2}});
  const auto points = sampler.sample_many(2, 5);
  const int first = jet_separation(w, points[0]);
  for (const auto& x : points) CHECK(jet_separation(w, x) == first);
}

TEST_CASE("moving Seshadri estimates") {
  RandomPointSampler sampler(kDefaultSeed);
  const auto points = sampler.sample_many(2, kDefaultSamples);

  const auto full = moving_seshadri_lower(complete_series(2, 3), points, 2);
  CHECK(full.lower == Rational(3));
  CHECK(full.m_values == std::vector<unsigned>{1, 2});
  CHECK_FALSE(full.upper.has_value());
  CHECK_FALSE(full.certified_equal);

  // Blowup of the plane at p: degree 3m with multiplicity m, the line
  // through p gives L.C = 2 without meeting the base locus.
  const auto blowup = moving_seshadri_lower(multiplicity_series(2, 3, kOrigin, 1), points, 3, {{Rational(2), 1, false}});
  CHECK(blowup.s_values == std::vector<int>{2, 4, 6});
  CHECK(blowup.lower == Rational(2));
  CHECK(blowup.upper == Rational(2));
  CHECK(blowup.certified_equal);

  // As a subsystem of |O(3m)| the same line has L.C = 3 and meets the base point.
  const auto strict = moving_seshadri_lower(multiplicity_series(2, 3, kOrigin, 1), points, 3, {{Rational(3), 1, true}});
  for (std::size_t i = 0; i < strict.s_values.size(); ++i) CHECK(strict.s_values[i] < 3 * static_cast<int>(strict.m_values[i]));
  CHECK_FALSE(strict.certified_equal);

  const auto empty = moving_seshadri_lower(multiplicity_series(2, 3, kOrigin, 4), points, 1);
  CHECK(empty.lower == Rational(-1));

  CHECK_THROWS_AS(moving_seshadri_lower(multiplicity_series(2, 3, kOrigin, 1), points, 2, {{Rational(1), 1, false}}),
                  std::logic_error);
  CHECK_THROWS_AS(moving_seshadri_lower(complete_series(2, 3), points, 0), std::invalid_argument);
}

TEST_CASE("moving Seshadri lower bound never exceeds the plane's constant") {
  RandomPointSampler sampler(kDefaultSeed);
  const auto points = sampler.sample_many(2, kDefaultSamples);
  for (unsigned m_max = 1; m_max <= 4; ++m_max) {
    const auto est = moving_seshadri_lower(multiplicity_series(2, 3, kOrigin, 1), points, m_max);
    CHECK(est.lower <= Rational(3));
    CHECK(est.lower == Rational(2));
  }
}

TEST_CASE("curve upper bound") {
  const auto line = seshadri_upper_via_curve(Rational(3), 1, true);
  CHECK(line.bound == Rational(3));
  CHECK(line.strict);
  const auto conic = seshadri_upper_via_curve(Rational(4), 2, false);
  CHECK(conic.bound == Rational(2));
  CHECK_FALSE(conic.strict);
  CHECK(seshadri_upper_via_curve(Rational(0), 1, false).bound == Rational(0));
  CHECK_THROWS_AS(seshadri_upper_via_curve(Rational(3), 0, false), std::invalid_argument);
  CHECK_THROWS_AS(seshadri_upper_via_curve(Rational(-1), 1, false), std::invalid_argument);
}

TEST_CASE("random point sampler is reproducible") {
  RandomPointSampler a(99);
  RandomPointSampler b(99);
  RandomPointSampler c(100);
  const auto pa = a.sample_many(3, 4);
  CHECK(pa == b.sample_many(3, 4));
  CHECK(pa != c.sample_many(3, 4));
  for (const auto& p : pa) {
    for (const auto& x : p) {
      CHECK(abs(x.num()) <= (1 << 20));
      CHECK(x.den() >= 1);
      CHECK(x.den() <= (1 << 20));
    }
  }
  CHECK_THROWS_AS(jet_separation(LinearSystem(2, 2), Point{Rational(1)}), std::invalid_argument);
}
