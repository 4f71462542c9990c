#include "oracles.hpp"

#include "seshadri/bounds.hpp"
#include "seshadri/wps.hpp"

#include <doctest.h>

using namespace seshadri;

namespace {

Rational q(long p, long r = 1) { return Rational(Integer(p), Integer(r)); }

}  // namespace

TEST_CASE("volume bound at explicit parameters") {
  CHECK(volume_bound({2, q(1), q(3, 4), q(1, 8), q(1, 16)}) == q(1024));
  CHECK(volume_bound({1, q(1), q(1, 2), q(1, 4), q(1, 8)}) == q(8));
  try {
    volume_bound({2, q(1), q(1, 2), q(1, 8), q(1, 16)});
    FAIL("infeasible a accepted");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("a-constraint") != std::string::npos);
  }
  CHECK_THROWS_AS(volume_bound({2, q(1), q(3, 4), q(1, 8), q(1, 8)}), std::invalid_argument);   // a+b+c = 1
  CHECK_THROWS_AS(volume_bound({2, q(1), q(3, 4), q(0), q(1, 16)}), std::invalid_argument);
  CHECK_THROWS_AS(volume_bound({2, q(2), q(3, 4), q(1, 16), q(1, 16)}), std::invalid_argument);
  CHECK_THROWS_AS(volume_bound({0, q(1), q(3, 4), q(1, 16), q(1, 16)}), std::invalid_argument);
}

TEST_CASE("best volume bound examples") {
  const auto r = best_volume_bound(2, q(1));
  CHECK(r.m == q(100));
  CHECK(r.a == q(3, 4));
  CHECK(r.b == q(1, 20));
  CHECK(r.c == q(1, 5));
  CHECK_FALSE(r.attained);
  // The infimum sits on the boundary a + b + c = 1, where both terms agree.
  CHECK(r.a + r.b + r.c == q(1));
  CHECK(pow(q(1, 2) / r.b, 2) == r.m);
  CHECK(pow(q(2) / r.c, 2) == r.m);
  CHECK(best_volume_bound(1, q(1)).m == q(3));
  CHECK(best_volume_bound(2, q(1, 2)).m > best_volume_bound(2, q(1)).m);
  CHECK_THROWS_AS(best_volume_bound(2, q(0)), std::invalid_argument);
  CHECK_THROWS_AS(best_volume_bound(2, q(-1)), std::invalid_argument);
  CHECK_THROWS_AS(best_volume_bound(2, q(2)), std::invalid_argument);
  CHECK_THROWS_AS(best_volume_bound(2, q(5, 2)), std::invalid_argument);
  CHECK_THROWS_AS(best_volume_bound(0, q(1)), std::invalid_argument);
  CHECK(conjectured_optimal(2, q(1, 2)) == q(8));
}

TEST_CASE("closed form lies in the grid bracket") {
  const auto bracket = volume_bound_grid(2, q(1), 256);
  CHECK(bracket.resolution == 256);
  CHECK(bracket.lower == q(16384, 169));
  CHECK(bracket.upper == q(65536, 625));
  CHECK(grid_confirms(bracket, q(100)));
  for (unsigned n = 1; n <= 4; ++n) {
    for (const auto& eps : {q(1, 4), q(1, 2), q(1), q(3, 2)}) {
      const auto b = volume_bound_grid(n, eps, 256);
      CHECK(grid_confirms(b, best_volume_bound(n, eps).m));
    }
  }
}

TEST_CASE("an independent coarse grid never beats the closed form") {
  // Every feasible point of the 1/64 grid is also on the 1/256 grid.
  for (unsigned n = 1; n <= 3; ++n) {
    for (const auto& eps : {q(1, 2), q(1)}) {
      const Rational m = best_volume_bound(n, eps).m;
      const Rational a_min = (q(n) - 1 + eps / 2) / (q(n) - 1 + eps);
      std::optional<Rational> coarse;
      for (long ai = 1; ai < 64; ++ai) {
        const Rational a = q(ai, 64);
        if (a < a_min) continue;
        for (long bi = 1; ai + bi < 64; ++bi) {
          for (long ci = 1; ai + bi + ci < 64; ++ci) {
            const Rational v = volume_bound({n, eps, a, q(bi, 64), q(ci, 64)});
            CHECK(v >= m);
            if (!coarse || v < *coarse) coarse = v;
          }
        }
      }
      REQUIRE(coarse.has_value());
      CHECK(volume_bound_grid(n, eps, 256).upper <= *coarse);
    }
  }
}

TEST_CASE("random feasible parameters never beat the closed form") {
  std::mt19937_64 rng(81);
  for (int i = 0; i < 400; ++i) {
    const unsigned n = static_cast<unsigned>(oracle::uniform(rng, 1, 5));
    const Rational eps = q(oracle::uniform(rng, 1, 15), 8);
    const Rational a_min = (q(n) - 1 + eps / 2) / (q(n) - 1 + eps);
    const Rational budget = q(1) - a_min;
    const Rational a = a_min + budget * q(oracle::uniform(rng, 0, 50), 100);
    const Rational rest = q(1) - a;
    const Rational b = rest * q(oracle::uniform(rng, 1, 98), 100);
    const Rational c = (rest - b) * q(oracle::uniform(rng, 1, 99), 100);
    CHECK(volume_bound({n, eps, a, b, c}) >= best_volume_bound(n, eps).m);
  }
}

TEST_CASE("growth of the best bound") {
  for (unsigned n = 1; n <= 5; ++n) {
    for (const auto& eps : {q(1, 4), q(1, 2), q(1)}) {
      const Rational m = best_volume_bound(n, eps).m;
      const Rational nn = pow(q(n), n);
      CHECK(m <= pow(q(8), n) * nn * nn / pow(eps, n));
      CHECK(m >= nn);
    }
  }
}

TEST_CASE("monotone in eps at fixed dimension") {
  for (unsigned n = 1; n <= 5; ++n) {
    Rational prev = best_volume_bound(n, q(1, 16)).m;
    for (long k = 2; k < 32; ++k) {
      const Rational cur = best_volume_bound(n, q(k, 16)).m;
      CHECK(cur < prev);
      prev = cur;
    }
  }
}

TEST_CASE("volume bound predicate") {
  CHECK(volume_bound_predicate(wps_anticanonical_volume(WeightVector{{1, 1, 2}}), 2, q(1)));
  CHECK(volume_bound_predicate(q(9), 2, q(1)));
  CHECK_FALSE(volume_bound_predicate(q(101), 2, q(1)));
  CHECK(volume_bound_predicate(q(42 * 42, 40), 2, q(1, 20)));
  CHECK_THROWS_AS(volume_bound_predicate(q(1), 2, q(0)), std::invalid_argument);
}

TEST_CASE("weighted projective family satisfies its own window") {
  for (unsigned n = 1; n <= 4; ++n) {
    for (unsigned d = 1; d <= 20; ++d) {
      WeightVector w{std::vector<unsigned>(n + 1, d)};
      w.weights[0] = 1;
      if (n >= 1) w.weights[1] = 1;
      const Rational vol = wps_anticanonical_volume(w);
      CHECK(vol == pow(q(2 + static_cast<long>((n - 1) * d)), n) / pow(q(d), n - 1));
      CHECK(volume_bound_predicate(vol, n, q(1, d)));
    }
  }
}
