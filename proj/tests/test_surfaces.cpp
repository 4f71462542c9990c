#include "oracles.hpp"

#include "seshadri/surfaces.hpp"

#include <doctest.h>

using namespace seshadri;

namespace {

Rational q(long p, long r = 1) { return Rational(Integer(p), Integer(r)); }

RationalMatrix matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  RationalMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    Eigen::Index c = 0;
    for (const auto& v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

// The plane blown up at two points: H, E1, E2 with the exceptional curves, the
// line through both points, and a line through the marked general point.
SurfaceLattice two_point_blowup() {
  const auto gram = matrix({{q(1), q(0), q(0)}, {q(0), q(-1), q(0)}, {q(0), q(0), q(-1)}});
  auto cls = [](long h, long a, long b) { return DivisorClass{(RationalVector(3) << q(h), q(a), q(b)).finished()}; };
  return SurfaceLattice({"H", "E1", "E2"}, gram,
                        {{"E1", cls(0, 1, 0), false, 0},
                         {"E2", cls(0, 0, 1), false, 0},
                         {"L12", cls(1, -1, -1), false, 0},
                         {"line", cls(1, 0, 0), true, 1}});
}

void check_axioms(const SurfaceLattice& lat, const DivisorClass& d, const ZariskiDecomposition& z) {
  CHECK(z.positive + z.negative == d);
  for (const auto& c : lat.curves()) CHECK(lat.intersect(z.positive, c.cls) >= Rational(0));
  RationalMatrix g(static_cast<Eigen::Index>(z.support.size()), static_cast<Eigen::Index>(z.support.size()));
  DivisorClass n{RationalVector::Zero(static_cast<Eigen::Index>(lat.rank()))};
  for (std::size_t i = 0; i < z.support.size(); ++i) {
    const auto& ci = lat.curves()[z.support[i]].cls;
    CHECK(z.coefficients[i] > Rational(0));
    CHECK(lat.intersect(z.positive, ci) == Rational(0));
    n = n + z.coefficients[i] * ci;
    for (std::size_t j = 0; j < z.support.size(); ++j) {
      g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = lat.intersect(ci, lat.curves()[z.support[j]].cls);
    }
  }
  CHECK(n == z.negative);
  CHECK(is_negative_definite(g));
  CHECK(z.checks.nef);
  CHECK(z.checks.orthogonal);
  CHECK(z.checks.negdef);
  CHECK(z.checks.effective);
}

}  // namespace

TEST_CASE("lattice validation and pairing") {
  const auto lat = ruled_surface_lattice(2, 10);
  const auto e = lat.make_class({q(1), q(0)});
  const auto f = lat.make_class({q(0), q(1)});
  CHECK(lat.self_intersection(e) == q(-10));
  CHECK(lat.intersect(e, f) == q(1));
  CHECK(lat.intersect(f, e) == q(1));
  CHECK(lat.self_intersection(f) == q(0));
  CHECK_THROWS_AS((void)lat.make_class({q(1)}), std::invalid_argument);
  CHECK_THROWS_AS(SurfaceLattice({"A", "B"}, matrix({{q(0), q(1)}, {q(2), q(0)}}), {}), std::invalid_argument);
  CHECK_THROWS_AS(SurfaceLattice({"A"}, matrix({{q(-1)}}), {{"C", DivisorClass{(RationalVector(1) << q(1)).finished()}, true, 0}}),
                  std::invalid_argument);
}

TEST_CASE("negative definiteness") {
  CHECK(is_negative_definite(RationalMatrix(0, 0)));
  CHECK(is_negative_definite(matrix({{q(-2), q(1)}, {q(1), q(-2)}})));
  CHECK_FALSE(is_negative_definite(matrix({{q(-1), q(2)}, {q(2), q(-1)}})));
  CHECK_FALSE(is_negative_definite(matrix({{q(0)}})));
}

TEST_CASE("Zariski decomposition examples") {
  const auto lat = ruled_surface_lattice(2, 10);
  const auto minus_k = lat.make_class({q(2), q(8)});
  const auto z = zariski_decomposition(lat, minus_k);
  CHECK(z.positive == lat.make_class({q(4, 5), q(8)}));
  CHECK(z.positive == q(4, 5) * lat.make_class({q(1), q(10)}));
  CHECK(z.negative == lat.make_class({q(6, 5), q(0)}));
  CHECK(z.support == std::vector<std::size_t>{0});
  check_axioms(lat, minus_k, z);

  const auto nef = lat.make_class({q(1), q(10)});
  const auto zn = zariski_decomposition(lat, nef);
  CHECK(zn.positive == nef);
  CHECK(zn.negative == lat.make_class({q(0), q(0)}));
  CHECK(zn.support.empty());

  const auto ze = zariski_decomposition(lat, lat.make_class({q(1), q(0)}));
  CHECK(ze.positive == lat.make_class({q(0), q(0)}));
  CHECK(ze.negative == lat.make_class({q(1), q(0)}));
}

TEST_CASE("Zariski decomposition errors") {
  const auto lat = ruled_surface_lattice(2, 10);
  // D.F < 0 puts F in the support, and F^2 = 0.
  CHECK_THROWS_AS(zariski_decomposition(lat, lat.make_class({q(-1), q(3)})), ZariskiError);
  // -E is not pseudo-effective: its E-coefficient comes out negative.
  CHECK_THROWS_AS(zariski_decomposition(lat, lat.make_class({q(-1), q(0)})), ZariskiError);
}

TEST_CASE("Zariski axioms on random pseudo-effective classes") {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 150; ++i) {
    const unsigned g = static_cast<unsigned>(oracle::uniform(rng, 0, 3));
    const unsigned d = static_cast<unsigned>(oracle::uniform(rng, 1, 12));
    const auto lat = ruled_surface_lattice(g, d);
    const auto cls = lat.make_class({q(oracle::uniform(rng, 0, 20), oracle::uniform(rng, 1, 6)),
                                     q(oracle::uniform(rng, 0, 40), oracle::uniform(rng, 1, 6))});
    check_axioms(lat, cls, zariski_decomposition(lat, cls));
  }
  const auto blow = two_point_blowup();
  for (int i = 0; i < 150; ++i) {
    DivisorClass cls{RationalVector::Zero(3)};
    for (const auto& c : blow.curves()) cls = cls + q(oracle::uniform(rng, 0, 9), oracle::uniform(rng, 1, 4)) * c.cls;
    check_axioms(blow, cls, zariski_decomposition(blow, cls));
  }
}

TEST_CASE("Zariski decomposition ignores the declaration order") {
  const auto blow = two_point_blowup();
  const auto& curves = blow.curves();
  std::vector<std::size_t> order{0, 1, 2, 3};
  std::mt19937_64 rng(72);
  for (int i = 0; i < 40; ++i) {
    DivisorClass cls{RationalVector::Zero(3)};
    for (const auto& c : curves) cls = cls + q(oracle::uniform(rng, 0, 9), oracle::uniform(rng, 1, 4)) * c.cls;
    const auto base = zariski_decomposition(blow, cls);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<DeclaredCurve> permuted;
    for (auto j : order) permuted.push_back(curves[j]);
    const SurfaceLattice other(blow.generators(), blow.gram(), permuted);
    const auto z = zariski_decomposition(other, cls);
    CHECK(z.positive == base.positive);
    CHECK(z.negative == base.negative);
  }
  const auto ruled = ruled_surface_lattice(2, 10);
  const SurfaceLattice flipped(ruled.generators(), ruled.gram(), {ruled.curves()[1], ruled.curves()[0]});
  const auto d = ruled.make_class({q(2), q(8)});
  CHECK(zariski_decomposition(flipped, d).positive == zariski_decomposition(ruled, d).positive);
  CHECK(zariski_decomposition(flipped, d).negative == zariski_decomposition(ruled, d).negative);
}

TEST_CASE("Seshadri constant at the marked point") {
  const auto lat = ruled_surface_lattice(2, 10);
  const auto p = lat.make_class({q(4, 5), q(8)});
  const auto s = seshadri_at_marked_point(lat, p);
  CHECK(s.value == q(4, 5));
  CHECK(s.minimizer == "F");
  CHECK(s.value_squared == q(16, 25));
  CHECK(s.volume == q(32, 5));
  CHECK(s.certified);

  const auto zero = seshadri_at_marked_point(lat, lat.make_class({q(0), q(1)}));
  CHECK(zero.value == q(0));
  CHECK(zero.certified);

  // On ruled(1, 5), -K = 2E + 5F has (-K).E = -10 + 5 < 0, so it is not nef.
  // Its positive part E + 5F carries the constant.
  const auto r = ruled_surface_lattice(1, 5);
  CHECK_THROWS_AS(seshadri_at_marked_point(r, r.make_class({q(2), q(5)})), std::invalid_argument);
  const auto pr = seshadri_at_marked_point(r, r.make_class({q(1), q(5)}));
  CHECK(pr.value == q(1));
  CHECK(pr.minimizer == "F");
  CHECK(pr.value_squared == q(1));
  CHECK(pr.volume == q(5));
  CHECK(pr.certified);

  const SurfaceLattice no_through({"A"}, matrix({{q(1)}}), {});
  CHECK_THROWS_AS(seshadri_at_marked_point(no_through, no_through.make_class({q(1)})), std::invalid_argument);
}

TEST_CASE("ruled surface model examples") {
  const auto a = ruled_surface_model(2, 10);
  CHECK(a.epsilon_m == q(4, 5));
  CHECK(a.minus_k == a.lattice.make_class({q(2), q(8)}));
  CHECK(a.decomposition.negative == a.lattice.make_class({q(6, 5), q(0)}));
  CHECK(a.seshadri.certified);
  CHECK(ruled_surface_model(1, 5).epsilon_m == q(1));
  CHECK(ruled_surface_model(3, 8).epsilon_m == q(1, 2));
  CHECK_THROWS_AS(ruled_surface_model(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(ruled_surface_model(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(ruled_surface_model(0, 0), std::invalid_argument);
  // Over P^1 with d = 1, -K = 2E + 3F is ample and the fiber gives 2, not
  // the closed form's 3.
  const auto p1 = ruled_surface_model(0, 1);
  CHECK_FALSE(p1.closed_form_applies);
  CHECK(p1.epsilon_m == q(2));
}

TEST_CASE("ruled family through the full pipeline") {
  for (unsigned g = 0; g <= 4; ++g) {
    const unsigned lo = g == 0 ? 1U : std::max(1U, 2 * g - 1);
    for (unsigned d = lo + 1; d <= 20; ++d) {
      CAPTURE(g);
      CAPTURE(d);
      const auto model = ruled_surface_model(g, d);
      const Rational expected = q(1) - q(2 * static_cast<long>(g) - 2, d);
      CHECK(model.closed_form_applies);
      CHECK(model.epsilon_m == expected);
      // Volume of -K is the square of its positive part.
      const Rational vol = model.lattice.self_intersection(model.decomposition.positive);
      CHECK(vol == expected * expected * q(d));
      CHECK(model.seshadri.volume == vol);
    }
  }
}
