#include <doctest.h>

#include <algorithm>
#include <set>

#include "dislokit/error.hpp"
#include "dislokit/lattice.hpp"
#include "oracles.hpp"

using namespace dislokit;

namespace {

DislocationConfig centred() {
  DislocationConfig cfg;
  cfg.z0 = {0.5, 0.5};
  return cfg;
}

std::set<std::pair<std::int64_t, std::int64_t>> coords(const std::vector<LatticePoint2>& v) {
  std::set<std::pair<std::int64_t, std::int64_t>> out;
  for (const auto& p : v) out.emplace(p.l1, p.l2);
  return out;
}

}  // namespace

TEST_SUITE("lattice") {
  TEST_CASE("bcc constants") {
    for (double a : {1.0, 0.37, 2.5}) {
      const BccConstants k = BccConstants::from(a);
      const auto o = oracle::bcc(a);
      CHECK(k.d0 == doctest::Approx(o.d0).epsilon(1e-15));
      CHECK(k.d1 == doctest::Approx(o.d1).epsilon(1e-15));
      CHECK(k.d2 == doctest::Approx(o.d2).epsilon(1e-15));
      CHECK(k.d3 == doctest::Approx(o.d0 / 3).epsilon(1e-15));
      CHECK(std::abs(std::hypot(k.d3, k.d2) - k.d0) <= 1e-14 * a);
    }
  }

  TEST_CASE("config validation") {
    DislocationConfig cfg;
    cfg.a = 0;
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg.a = 1;
    cfg.kd = -1;
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg.kd = 1;
    cfg.kp = std::nan("");
    CHECK_THROWS_AS(cfg.validate(), Error);
  }

  TEST_CASE("sc base points") {
    const auto cfg = centred();
    const auto unit = sc_base_points(cfg, 1.0);
    REQUIRE(unit.size() == 4);
    CHECK(unit[0] == LatticePoint2{0, 0, 0});
    CHECK(unit[1] == LatticePoint2{0, 1, 0});
    CHECK(unit[2] == LatticePoint2{1, 0, 0});
    CHECK(unit[3] == LatticePoint2{1, 1, 0});
    CHECK(sc_base_points(cfg, std::sqrt(0.5) * (1 - 1e-12)).empty());

    const auto ten = sc_base_points(cfg, 10.0);
    const auto brute = oracle::disc({0, 1}, 0, 1.0, cfg.z0, 10.0);
    CHECK(ten.size() == brute.size());
    CHECK(ten.size() == 316);
    CHECK(coords(ten) == std::set(brute.begin(), brute.end()));
    CHECK(std::is_sorted(ten.begin(), ten.end()));
    CHECK_THROWS_AS(sc_base_points(cfg, 0.0), Error);
  }

  TEST_CASE("sc base points with offset and scale") {
    DislocationConfig cfg;
    cfg.a = 1.7;
    cfg.z0 = {0.3, -2.2};
    cfg.delta = {0.4, 0.1, 0.0};
    const auto pts = sc_base_points(cfg, 9.3);
    const auto brute = oracle::disc({0, 1}, Complex(0.4, 0.1) / 1.7, 1.7, cfg.z0, 9.3);
    CHECK(coords(pts) == std::set(brute.begin(), brute.end()));
  }

  TEST_CASE("bcc base points") {
    DislocationConfig cfg;
    const BccConstants k = BccConstants::from(1.0);
    const auto shell = bcc_base_points(cfg, 0, 1.01 * k.d1);
    CHECK(shell.size() == 7);
    // nu_0, nu_2 and nu_4 all sit at d1/sqrt3 on sheet 1
    CHECK(bcc_base_points(cfg, 1, 0.99 * k.d1 / std::sqrt(3.0)).empty());
    const auto three = bcc_base_points(cfg, 1, 1.01 * k.d1 / std::sqrt(3.0));
    REQUIRE(three.size() == 3);
    CHECK(std::find(three.begin(), three.end(), LatticePoint2{0, 0, 1}) != three.end());
    for (const auto& p : three) {
      const Complex v = bcc_planar(cfg, p) / k.d1;
      CHECK((std::abs(v - nu(0)) <= 1e-15 || std::abs(v - nu(2)) <= 1e-15 || std::abs(v - nu(4)) <= 1e-15));
    }

    const auto ten = bcc_base_points(cfg, 2, 10.0 * k.d1);
    const auto brute = oracle::disc(oracle::omega(), oracle::nu(1), k.d1, 0, 10.0 * k.d1);
    CHECK(ten.size() == brute.size());
    CHECK(ten.size() == 354);
    CHECK(coords(ten) == std::set(brute.begin(), brute.end()));
    for (int c = 0; c < 3; ++c) {
      DislocationConfig off;
      off.z0 = {0.31, 0.77};
      const auto pts = bcc_base_points(off, c, 6.4);
      const oracle::C shift = c == 0 ? oracle::C{} : oracle::nu(c - 1);
      const auto b = oracle::disc(oracle::omega(), shift, k.d1, off.z0, 6.4);
      CHECK(coords(pts) == std::set(b.begin(), b.end()));
    }
    CHECK_THROWS_AS(bcc_base_points(cfg, 3, 1.0), Error);
  }

  TEST_CASE("sc heights") {
    DislocationConfig cfg;
    cfg.z0 = {0.5, 0.0};
    CHECK(sc_height(cfg, {2, 0, 0}, 0) == 0.0);
    CHECK(sc_height(cfg, {-1, 0, 0}, 0) == doctest::Approx(0.5).epsilon(1e-15));
    cfg.z0 = {0.25, 0.25};
    CHECK(sc_height(cfg, {1, 1, 0}, 2) == doctest::Approx(2.125).epsilon(1e-15));
    cfg.z0 = {1.0, 1.0};
    CHECK_THROWS_AS(sc_height(cfg, {1, 1, 0}, 0), Error);
  }

  TEST_CASE("bcc heights") {
    const BccConstants k = BccConstants::from(1.0);
    DislocationConfig cfg;
    cfg.z0 = {-0.5 * k.d1, 0.0};
    CHECK(bcc_height(cfg, {0, 0, 0}, 1) == doctest::Approx(k.d0).epsilon(1e-15));

    cfg.z0 = {-5 * k.d1, 0.0};
    const double expect = k.d0 / 3 + k.d0 / (2 * oracle::pi) * std::arg(oracle::nu(0) * k.d1 + 5 * k.d1);
    CHECK(bcc_height(cfg, {0, 0, 1}, 0) == doctest::Approx(expect).epsilon(1e-14));

    // far line: the sheets stack at d0/3 steps
    cfg.z0 = {1e6 * k.d1, 1e6 * k.d1};
    const double h0 = bcc_height(cfg, {0, 0, 0}, 0);
    const double h1 = bcc_height(cfg, {0, 0, 1}, 0);
    const double h2 = bcc_height(cfg, {0, 0, 2}, 0);
    CHECK(std::abs(h1 - h0 - k.d0 / 3) <= 1e-6 * k.d0);
    CHECK(std::abs(h2 - h1 - k.d0 / 3) <= 1e-6 * k.d0);
  }

  TEST_CASE("additive sheet offsets agree with the multiplicative phase") {
    const BccConstants k = BccConstants::from(1.3);
    DislocationConfig cfg;
    cfg.a = 1.3;
    cfg.z0 = {0.37, 0.21};
    for (int c = 0; c < 3; ++c)
      for (const auto& p : bcc_base_points(cfg, c, 5 * k.d1)) {
        double d = std::fmod(bcc_height(cfg, p, 0) - bcc_height_from_phase(cfg, p), k.d0);
        if (d < 0) d += k.d0;
        CHECK(std::min(d, k.d0 - d) <= 1e-12);
      }
  }

  TEST_CASE("translation along the Burgers direction") {
    auto cfg = centred();
    for (const auto& p : sc_base_points(cfg, 5))
      for (std::int64_t n : {-3, 0, 7}) CHECK(sc_height(cfg, p, n + 1) - sc_height(cfg, p, n) == doctest::Approx(1.0).epsilon(1e-15));
    const BccConstants k = BccConstants::from(1.0);
    for (int c = 0; c < 3; ++c)
      for (const auto& p : bcc_base_points(cfg, c, 5))
        CHECK(bcc_height(cfg, p, 4) - bcc_height(cfg, p, 3) == doctest::Approx(k.d0).epsilon(1e-14));
  }

  TEST_CASE("delta_3 shifts the winding index") {
    auto cfg = centred();
    auto shifted = cfg;
    shifted.delta[2] = cfg.a;
    for (const auto& p : sc_base_points(cfg, 4))
      CHECK(sc_height(shifted, p, 0) == doctest::Approx(sc_height(cfg, p, 1)).epsilon(1e-15));
  }

  TEST_CASE("winding around closed loops") {
    auto cfg = centred();
    auto loop_sum = [&](std::int64_t x0, std::int64_t y0, std::int64_t side) {
      std::vector<LatticePoint2> path;
      for (std::int64_t i = 0; i < side; ++i) path.push_back({x0 + i, y0, 0});
      for (std::int64_t i = 0; i < side; ++i) path.push_back({x0 + side, y0 + i, 0});
      for (std::int64_t i = 0; i < side; ++i) path.push_back({x0 + side - i, y0 + side, 0});
      for (std::int64_t i = 0; i < side; ++i) path.push_back({x0, y0 + side - i, 0});
      double t = 0;
      for (std::size_t i = 0; i < path.size(); ++i)
        t += height_increment(1.0, sc_offset(cfg, path[i]), sc_offset(cfg, path[(i + 1) % path.size()]));
      return t;
    };
    CHECK(loop_sum(-2, -2, 5) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(loop_sum(3, -8, 4)) <= 1e-12);

    // hexagonal loop of sheet-0 points, traversed clockwise
    const BccConstants k = BccConstants::from(1.0);
    DislocationConfig b;
    b.z0 = {0.4 * k.d1, 0.2 * k.d1};
    std::vector<Complex> ring_pts;
    const LatticeRing e = LatticeRing::eisenstein();
    for (int s = 0; s < 6; ++s)
      for (int i = 0; i < 3; ++i) ring_pts.push_back((3.0 * unit_power(e, s) + double(i) * unit_power(e, s + 2)) * k.d1);
    std::reverse(ring_pts.begin(), ring_pts.end());
    double t = 0;
    for (std::size_t i = 0; i < ring_pts.size(); ++i)
      t += height_increment(k.d0, ring_pts[i] - b.z0, ring_pts[(i + 1) % ring_pts.size()] - b.z0);
    CHECK(t == doctest::Approx(-k.d0).epsilon(1e-12));
  }

  TEST_CASE("base lists are closed under the unit rotation") {
    DislocationConfig cfg;
    const auto sc = sc_base_points(cfg, 7.5);
    std::set<LatticePoint2> s(sc.begin(), sc.end());
    for (const auto& p : sc) CHECK(s.count(LatticePoint2{-p.l2, p.l1, 0}) == 1);
    const auto bcc = bcc_base_points(cfg, 0, 7.5);
    std::set<LatticePoint2> b(bcc.begin(), bcc.end());
    for (const auto& p : bcc) CHECK(b.count(LatticePoint2{-p.l2, p.l1 + p.l2, 0}) == 1);
  }

  TEST_CASE("lattice collisions are named") {
    DislocationConfig cfg;
    cfg.z0 = {2.0, 3.0};
    try {
      require_off_lattice(LatticeKind::SC, cfg);
      FAIL("expected a domain error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Domain);
      CHECK(std::string(e.what()).find("l1=2, l2=3") != std::string::npos);
    }
    const BccConstants k = BccConstants::from(1.0);
    cfg.z0 = (Complex(1.0) + nu(0)) * k.d1;
    try {
      bcc_nodes(cfg, 3.0, 0, 1);
      FAIL("expected a domain error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Domain);
      CHECK(std::string(e.what()).find("sheet=1") != std::string::npos);
    }
    cfg.z0 = {0.5, 0.5};
    CHECK_NOTHROW(require_off_lattice(LatticeKind::SC, cfg));
  }

  TEST_CASE("node lists") {
    const auto cfg = centred();
    const auto nodes = sc_nodes(cfg, 1.0, 0, 3);
    REQUIRE(nodes.size() == 12);
    CHECK(nodes[0].base == LatticePoint2{0, 0, 0});
    CHECK(nodes[0].n == 0);
    CHECK(nodes[2].n == 2);
    CHECK(nodes[3].base == LatticePoint2{0, 1, 0});
    for (const auto& v : nodes) CHECK(v.position.z == sc_height(cfg, v.base, v.n));
    CHECK_THROWS_AS(sc_nodes(cfg, 1.0, 2, 1), Error);
    const auto bn = bcc_nodes(cfg, 4.0, -1, 1);
    CHECK(std::is_sorted(bn.begin(), bn.end(), [](const Node3& a, const Node3& b) {
      return std::tie(a.base, a.n) < std::tie(b.base, b.n);
    }));
  }

  TEST_CASE("unit ring enumeration") {
    const auto g = ring_points_within(LatticeRing::gauss(), 0, {0.2, -0.3}, 4.0);
    const auto b = oracle::disc({0, 1}, 0, 1.0, {0.2, -0.3}, 4.0);
    CHECK(coords(g) == std::set(b.begin(), b.end()));
    const auto e = ring_points_within(LatticeRing::eisenstein(), 0, {1.2, 0.3}, 6.0);
    const auto be = oracle::disc(oracle::omega(), 0, 1.0, {1.2, 0.3}, 6.0);
    CHECK(coords(e) == std::set(be.begin(), be.end()));
  }
}
