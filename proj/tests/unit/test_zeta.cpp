#include <doctest.h>

#include <random>
#include <set>

#include "dislokit/error.hpp"
#include "dislokit/zeta.hpp"
#include "oracles.hpp"

using namespace dislokit;

namespace {

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST_SUITE("zeta") {
  TEST_CASE("explicit sets") {
    const LatticeRing g = LatticeRing::gauss(), e = LatticeRing::eisenstein();
    const std::vector<LatticePoint2> one{{1, 0, 0}};
    CHECK(truncated_zeta(g, 2, 0.0, one).value == 1.0);
    CHECK(truncated_zeta(g, 7, 0.0, one).value == 1.0);
    const std::vector<LatticePoint2> gu{{1, 0, 0}, {0, 1, 0}, {-1, 0, 0}, {0, -1, 0}};
    CHECK(truncated_zeta(g, 2, 0.0, gu).value == doctest::Approx(4.0).epsilon(1e-15));
    const std::vector<LatticePoint2> eu{{1, 0, 0}, {0, 1, 0}, {-1, 1, 0}, {-1, 0, 0}, {0, -1, 0}, {1, -1, 0}};
    const auto r = truncated_zeta(e, 3, 0.0, eu);
    CHECK(r.value == doctest::Approx(6.0).epsilon(1e-14));
    CHECK(r.explicit_set);
    CHECK(r.terms == 6);
    CHECK(truncated_zeta(g, 2, 0.0, {}).value == 0.0);
    CHECK_THROWS_AS(truncated_zeta(g, 0.0, 0.0, one), Error);
    CHECK_THROWS_AS(truncated_zeta(g, -1.0, 0.0, one), Error);
    try {
      truncated_zeta(g, 2, Complex(-1, 0), one);
      FAIL("expected a domain error");
    } catch (const Error& err) {
      CHECK(err.code() == ErrorCode::Domain);
      CHECK(std::string(err.what()).find("(1, 0)") != std::string::npos);
    }
  }

  TEST_CASE("annulus bounds") {
    const LatticeRing g = LatticeRing::gauss();
    CHECK_THROWS_AS(zeta_annulus(g, 2, {0.5, 0.5}, 5, 5), Error);
    CHECK_THROWS_AS(zeta_annulus(g, 2, {0.5, 0.5}, 6, 5), Error);
    // additivity over nested annuli
    const Complex z{0.3, -0.2};
    const double whole = zeta_annulus(g, 2, z, 2, 40).value;
    const double inner = zeta_annulus(g, 2, z, 2, 17.5).value;
    // |l + z| = 17.5 is not attained for this z, so the split is clean
    const double outer = zeta_annulus(g, 2, z, 17.5, 40).value;
    CHECK(rel(inner + outer, whole) <= 1e-13);
    // monotone in N
    double prev = 0;
    for (double N : kDefaultScanNs) {
      const double v = zeta_annulus(g, 2.5, z, 2, N).value;
      CHECK(v > prev);
      prev = v;
    }
  }

  TEST_CASE("matches the brute-force sum") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0, 1);
    for (RingKind kind : {RingKind::Gauss, RingKind::Eisenstein}) {
      const LatticeRing ring = LatticeRing::of(kind);
      for (int i = 0; i < 6; ++i) {
        const Complex z = u(rng) + u(rng) * ring.tau;
        const double s = 1.5 + 2 * u(rng);
        std::size_t n = 0;
        const double want = oracle::zeta_annulus(ring.tau, s, z, 3.3, 60, &n);
        const ZetaResult got = zeta_annulus(ring, s, z, 3.3, 60);
        CHECK(got.terms == n);
        CHECK(rel(got.value, want) <= 1e-12);
        CHECK(got.s == s);
        CHECK(got.ring == kind);
        CHECK_FALSE(got.explicit_set);
      }
    }
  }

  TEST_CASE("symmetries") {
    const Complex z0{0.23, 0.41};
    for (RingKind kind : {RingKind::Gauss, RingKind::Eisenstein}) {
      const LatticeRing ring = LatticeRing::of(kind);
      const double base = zeta_annulus(ring, 2, z0, 4.1, 50).value;
      // rotation by the unit, conjugation and lattice translation
      CHECK(rel(zeta_annulus(ring, 2, z0 * ring.tau, 4.1, 50).value, base) <= 1e-12);
      CHECK(rel(zeta_annulus(ring, 2, std::conj(z0), 4.1, 50).value, base) <= 1e-12);
      CHECK(rel(zeta_annulus(ring, 2, -z0, 4.1, 50).value, base) <= 1e-12);
      CHECK(rel(zeta_annulus(ring, 2, z0 + 1.0 + ring.tau, 4.1, 50).value, base) <= 1e-12);
    }
  }

  TEST_CASE("annulus index sets") {
    const LatticeRing e = LatticeRing::eisenstein();
    const Complex z{0.2, 0.1};
    const auto plain = zeta_annulus_points(e, z, 2.0, 20.0);
    for (const auto& p : plain) {
      const double r = std::abs(p.value(e) + z);
      CHECK(r > 2.0);
      CHECK(r < 20.0);
      CHECK(p.sheet == 0);
    }
    AnnulusOptions adj;
    adj.rule = AnnulusRule::EisensteinAdjacency;
    const auto a = zeta_annulus_points(e, z, 7.2, 20.0, adj);
    std::set<LatticePoint2> ps(plain.begin(), plain.end());
    for (const auto& p : a) {
      CHECK(ps.count(p) == 1);
      for (int j = 0; j < 6; ++j) CHECK(std::abs(p.value(e) + nu(j) + z) < 20.0);
    }
    CHECK(a.size() < plain.size());
    CHECK_THROWS_AS(zeta_annulus_points(LatticeRing::gauss(), z, 2.0, 20.0, adj), Error);
  }

  TEST_CASE("scan") {
    const LatticeRing g = LatticeRing::gauss();
    const std::vector<double> Ns{10, 20, 40};
    const auto rs = zeta_scan(g, 3, {0.5, 0.5}, 1, Ns);
    REQUIRE(rs.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(rs[i].N == Ns[i]);
      CHECK(rs[i].value == zeta_annulus(g, 3, {0.5, 0.5}, 1, Ns[i]).value);
    }
    // s = 3 converges: the tail beyond 40 is below 2 pi / (s - 2) / 40
    CHECK(rs[2].value - rs[1].value < 2 * oracle::pi / 20);
    CHECK(rs[2].value - rs[1].value > 0);
  }

  TEST_CASE("grid") {
    const LatticeRing g = LatticeRing::gauss();
    const ZetaGrid grid = zeta_grid(g, 2, 7.2, 30, 8);
    REQUIRE(grid.values.size() == 64);
    CHECK(grid.x[0] == 0.5 / 8);
    CHECK(grid.y[7] == 7.5 / 8);
    CHECK(grid.at(3, 5) == zeta_annulus(g, 2, grid.x[3] + grid.y[5] * g.tau, 7.2, 30).value);
    CHECK(grid.min == *std::min_element(grid.values.begin(), grid.values.end()));
    CHECK(grid.max == *std::max_element(grid.values.begin(), grid.values.end()));
    // the square lattice is symmetric under x <-> y and x -> 1 - x
    for (int ix = 0; ix < 8; ++ix)
      for (int iy = 0; iy < 8; ++iy) {
        CHECK(rel(grid.at(ix, iy), grid.at(iy, ix)) <= 1e-12);
        CHECK(rel(grid.at(ix, iy), grid.at(7 - ix, iy)) <= 1e-12);
      }
    const ZetaGrid g1 = zeta_grid(g, 2, 7.2, 30, 4, {}, 1);
    const ZetaGrid g4 = zeta_grid(g, 2, 7.2, 30, 4, {}, 4);
    CHECK(g1.values == g4.values);
    CHECK_THROWS_AS(zeta_grid(g, 2, 7.2, 30, 0), Error);
    CHECK_NOTHROW(zeta_grid(g, 2, 7.2, 30, 2));
  }

  TEST_CASE("thread independence") {
    const LatticeRing e = LatticeRing::eisenstein();
    const auto pts = zeta_annulus_points(e, {0.4, 0.1}, 1.0, 120.0);
    const double v1 = truncated_zeta(e, 2, {0.4, 0.1}, pts, 1).value;
    for (int t : {2, 5, 8}) CHECK(truncated_zeta(e, 2, {0.4, 0.1}, pts, t).value == v1);
  }
}
