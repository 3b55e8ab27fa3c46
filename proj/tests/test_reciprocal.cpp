#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>

#include "swcnt/geometry.hpp"
#include "swcnt/reciprocal.hpp"

using namespace swcnt;
using Catch::Approx;

namespace {

constexpr double pi = std::numbers::pi;

TubeGeometry make(int n, int m, int cells = 0) {
  ChiralSpec spec{n, m};
  if (cells == 0) cells = 2 * cell_count_multiple(spec);
  return compute_geometry(spec, cells);
}

// Vertex sets compared as point clouds, robust to starting index and order.
void check_same_vertices(const BrillouinHexagon& a, const BrillouinHexagon& b, double tol) {
  REQUIRE(a.vertices.size() == b.vertices.size());
  for (const auto& v : a.vertices) {
    double best = std::numeric_limits<double>::max();
    for (const auto& w : b.vertices) best = std::min(best, std::hypot(v[0] - w[0], v[1] - w[1]));
    CHECK(best < tol);
  }
}

}  // namespace

TEST_CASE("reciprocal tube scalars") {
  SECTION("armchair axial component is 4pi/a and arc component 2pi^3/(a n^2 sqrt 3)") {
    const TubeGeometry g = make(6, 6);
    const ReciprocalTube rt = reciprocal_tube(g);
    CHECK(rt.b_dprime_plus == Approx(4 * pi / g.a).margin(1e-12));
    CHECK(rt.b_dprime_minus == Approx(-4 * pi / g.a).margin(1e-12));
    CHECK(rt.b_prime_plus ==
          Approx(2 * std::pow(pi, 3) / (g.a * 36 * std::sqrt(3.0))).margin(1e-12));
    CHECK(rt.b_prime_plus == Approx(rt.b_prime_minus).margin(1e-15));
    CHECK(rt.r_tilde == Approx(pi / g.r_t).margin(1e-12));
    const double a_tilde_closed =
        2 * pi / g.a * std::sqrt(4.0 + std::pow(pi, 4) / (3.0 * std::pow(6.0, 4)));
    CHECK(rt.a_tilde == Approx(a_tilde_closed).epsilon(1e-13));
  }
  SECTION("armchair 3d vectors match the specialized forms componentwise") {
    const TubeGeometry g = make(7, 7);
    const ReciprocalTube rt = reciprocal_tube(g);
    const double alpha = pi / 7;
    CHECK(rt.b_tilde_plus[0] == Approx(-pi / g.r_t * std::sin(alpha)).margin(1e-12));
    CHECK(rt.b_tilde_plus[1] == Approx(pi / g.r_t * std::cos(alpha)).margin(1e-12));
    CHECK(rt.b_tilde_plus[2] == Approx(4 * pi / g.a).margin(1e-12));
    CHECK(rt.b_tilde_minus[2] == Approx(-4 * pi / g.a).margin(1e-12));
  }
  SECTION("zigzag plus vector is the pure-rotation branch") {
    const TubeGeometry g = make(5, 0);
    const ReciprocalTube rt = reciprocal_tube(g);
    CHECK(rt.b_prime_plus == Approx(4 * std::pow(pi, 3) / (25 * g.a)).margin(1e-12));
    CHECK(rt.b_dprime_plus == 0.0);
    CHECK(rt.b_prime_minus == Approx(2 * std::pow(pi, 3) / (25 * g.a)).margin(1e-12));
    CHECK(rt.b_dprime_minus == Approx(-4 * pi / (std::sqrt(3.0) * g.a)).margin(1e-12));
    CHECK(rt.b_tilde_plus[2] == 0.0);
  }
}

TEST_CASE("dual products of characteristic and reciprocal vectors") {
  SECTION("armchair (6,6): (3pi, 3pi, -pi, -pi)") {
    const TubeGeometry g = make(6, 6);
    const DualProducts dp = dual_products(characteristic_vectors(g), reciprocal_tube(g));
    CHECK(dp.plus_plus == Approx(3 * pi).margin(1e-12));
    CHECK(dp.minus_minus == Approx(3 * pi).margin(1e-12));
    CHECK(dp.plus_minus == Approx(-pi).margin(1e-12));
    CHECK(dp.minus_plus == Approx(-pi).margin(1e-12));
  }
  SECTION("chiral tubes: diagonal 3pi, cross terms match the closed form") {
    for (auto [n, m] : {std::pair{4, 2}, {6, 1}, {7, 4}, {8, 3}, {12, 5}}) {
      const TubeGeometry g = make(n, m);
      const DualProducts dp = dual_products(characteristic_vectors(g), reciprocal_tube(g));
      INFO("tube (" << n << "," << m << ")");
      CHECK(std::abs(dp.plus_plus - 3 * pi) < 1e-12);
      CHECK(std::abs(dp.minus_minus - 3 * pi) < 1e-12);
      const double cross = std::cos(g.alpha_plus - g.alpha_minus) * pi;
      CHECK(std::abs(dp.plus_minus - (cross - 2 * pi * g.c_plus / g.c_minus)) < 1e-12);
      CHECK(std::abs(dp.minus_plus - (cross - 2 * pi * g.c_minus / g.c_plus)) < 1e-12);
    }
  }
  SECTION("zigzag (5,0): direct values, plus-diagonal equals pi") {
    const TubeGeometry g = make(5, 0);
    const DualProducts dp = dual_products(characteristic_vectors(g), reciprocal_tube(g));
    CHECK(dp.plus_plus == Approx(pi).margin(1e-12));  // not 3pi: c_+ = 0
    CHECK(dp.minus_minus == Approx(3 * pi).margin(1e-12));
    const double cross = std::cos(g.alpha_plus - g.alpha_minus) * pi;
    CHECK(dp.plus_minus == Approx(cross).margin(1e-12));  // c_+/c_- term vanishes
    CHECK(dp.minus_plus == Approx(cross).margin(1e-12));  // singular closed form skipped
  }
}

TEST_CASE("brillouin zone construction") {
  SECTION("area equals the parallelogram area for all classes") {
    for (auto [n, m] :
         {std::pair{4, 4}, {6, 6}, {10, 10}, {4, 2}, {6, 1}, {7, 4}, {5, 0}, {8, 0}, {20, 0}}) {
      const TubeGeometry g = make(n, m);
      const ReciprocalTube rt = reciprocal_tube(g);
      const BrillouinHexagon hex = brillouin_zone(rt);
      INFO("tube (" << n << "," << m << ")");
      CHECK(hex.area == Approx(parallelogram_area(rt)).epsilon(1e-10));
      CHECK(hex.vertices.size() == 6);
    }
  }
  SECTION("hexagon is convex and centrally symmetric about the origin") {
    const ReciprocalTube rt = reciprocal_tube(make(4, 2));
    const BrillouinHexagon hex = brillouin_zone(rt);
    const std::size_t count = hex.vertices.size();
    for (std::size_t i = 0; i < count; ++i) {
      const auto& p = hex.vertices[i];
      const auto& q = hex.vertices[(i + 1) % count];
      const auto& r = hex.vertices[(i + 2) % count];
      const double cross = (q[0] - p[0]) * (r[1] - q[1]) - (q[1] - p[1]) * (r[0] - q[0]);
      CHECK(cross > 0.0);  // counterclockwise, strictly convex
      double best = std::numeric_limits<double>::max();
      for (const auto& w : hex.vertices)
        best = std::min(best, std::hypot(p[0] + w[0], p[1] + w[1]));
      CHECK(best < 1e-10);
    }
  }
  SECTION("armchair hexagon is mirror symmetric in the axial direction") {
    const ReciprocalTube rt = reciprocal_tube(make(6, 6));
    const BrillouinHexagon hex = brillouin_zone(rt);
    for (const auto& v : hex.vertices) {
      double best = std::numeric_limits<double>::max();
      for (const auto& w : hex.vertices)
        best = std::min(best, std::hypot(v[0] - w[0], v[1] + w[1]));
      CHECK(best < 1e-10);
    }
  }
  SECTION("production cell matches a brute-force large-block oracle") {
    // The oracle clips against every lattice point with coefficients up to
    // n + m + 2 in the raw (unreduced) basis.
    for (auto [n, m] : {std::pair{4, 2}, {8, 3}, {6, 6}, {7, 0}}) {
      const ReciprocalTube rt = reciprocal_tube(make(n, m));
      const BrillouinHexagon fast = brillouin_zone(rt);
      const BrillouinHexagon oracle = voronoi_cell({rt.b_prime_plus, rt.b_dprime_plus},
                                                   {rt.b_prime_minus, rt.b_dprime_minus},
                                                   n + m + 2);
      INFO("tube (" << n << "," << m << ")");
      check_same_vertices(fast, oracle, 1e-10);
      CHECK(fast.area == Approx(oracle.area).epsilon(1e-12));
    }
  }
  SECTION("degenerate lattice is rejected") {
    CHECK_THROWS_AS(voronoi_cell({1.0, 2.0}, {0.5, 1.0}), std::domain_error);
  }
}

TEST_CASE("wave-vector domains") {
  SECTION("armchair shares one box between branches") {
    const TubeGeometry g = make(5, 5);
    for (Branch b : {Branch::Plus, Branch::Minus}) {
      const KDomain d = k_domain(g, b);
      CHECK(d.branch == DomainBranch::Shared);
      CHECK_FALSE(d.rotation_only);
      CHECK(d.kappa_max == Approx(2 * pi / g.a).margin(1e-12));
      CHECK(d.kappa_min == Approx(-2 * pi / g.a).margin(1e-12));
      CHECK(d.tau_max == Approx(g.alpha_plus / 2).margin(1e-15));
    }
  }
  SECTION("zigzag minus branch box") {
    const TubeGeometry g = make(5, 0);
    const KDomain d = k_domain(g, Branch::Minus);
    CHECK(d.branch == DomainBranch::Minus);
    CHECK(d.kappa_max == Approx(2 * pi / (std::sqrt(3.0) * g.a)).margin(1e-12));
    CHECK(d.tau_max == Approx(pi / (2.0 * 5)).margin(1e-12));
  }
  SECTION("zigzag plus branch is rotation-only") {
    const TubeGeometry g = make(5, 0);
    const KDomain d = k_domain(g, Branch::Plus);
    CHECK(d.rotation_only);
    CHECK(d.tau_max == Approx(pi / 5).margin(1e-12));
    CHECK(contains_kappa(d, 123.0));
  }
  SECTION("chiral (4,2) kappa bound is pi/c_+") {
    const TubeGeometry g = make(4, 2);
    const KDomain d = k_domain(g, Branch::Plus);
    CHECK(d.kappa_max == Approx(3.9015138584803274).epsilon(1e-14));
    CHECK(d.tau_max == Approx(g.alpha_plus / 2).margin(1e-15));
    const KDomain dm = k_domain(g, Branch::Minus);
    CHECK(dm.kappa_max == Approx(pi / g.c_minus).margin(1e-12));
  }
  SECTION("domain width equals the axial period of the reciprocal transform") {
    for (auto [n, m] : {std::pair{5, 5}, {4, 2}, {7, 4}}) {
      const TubeGeometry g = make(n, m);
      const ReciprocalTube rt = reciprocal_tube(g);
      for (Branch b : {Branch::Plus, Branch::Minus}) {
        const KDomain d = k_domain(g, b);
        const RotTranslation step = reciprocal_transform(rt, b, 1);
        CHECK(d.kappa_max - d.kappa_min == Approx(std::abs(step.dz)).epsilon(1e-13));
      }
    }
  }
}

TEST_CASE("quantized kappa grid") {
  SECTION("basic layout") {
    const TubeGeometry g = make(5, 5);
    const auto grid = sample_kappa(g, 6);
    REQUIRE(grid.size() == 12);
    CHECK(grid[6] == 0.0);
    for (std::size_t i = 1; i < grid.size(); ++i) {
      CHECK(grid[i] > grid[i - 1]);
      CHECK(grid[i] - grid[i - 1] == Approx(pi / (6 * g.c_plus)).epsilon(1e-12));
    }
  }
  SECTION("grid points stay inside the domain") {
    for (auto [n, m] : {std::pair{5, 5}, {4, 2}, {5, 0}}) {
      const TubeGeometry g = make(n, m);
      const Branch branch = axial_branch(g);
      const KDomain d = k_domain(g, branch);
      for (double kappa : sample_kappa(g, 5)) CHECK(contains_kappa(d, kappa));
    }
  }
  SECTION("armchair last point is below the edge") {
    const TubeGeometry g = make(5, 5);
    const auto grid = sample_kappa(g, 4);
    CHECK(grid.back() == Approx(pi * 3 / (4 * g.a / 2)).epsilon(1e-12));
    CHECK(grid.back() < 2 * pi / g.a);
  }
  SECTION("zigzag first point hits the lower domain edge exactly") {
    const TubeGeometry g = make(5, 0);
    const auto grid = sample_kappa(g, 4);
    const KDomain d = k_domain(g, Branch::Minus);
    CHECK(grid.front() == d.kappa_min);
    CHECK(grid.front() == Approx(-2 * pi / (std::sqrt(3.0) * g.a)).epsilon(1e-13));
  }
  SECTION("L must be positive") {
    CHECK_THROWS_AS(sample_kappa(make(5, 5), 0), std::invalid_argument);
  }
}

TEST_CASE("reciprocal rotation-translation transforms") {
  SECTION("armchair step (pi/n, 4pi/a)") {
    const TubeGeometry g = make(5, 5);
    const RotTranslation t = reciprocal_transform(reciprocal_tube(g), Branch::Plus, 1);
    CHECK(t.dtheta == Approx(pi / 5).margin(1e-12));
    CHECK(t.dz == Approx(4 * pi / g.a).margin(1e-12));
  }
  SECTION("j = 0 is the identity") {
    const RotTranslation t = reciprocal_transform(reciprocal_tube(make(4, 2)), Branch::Minus, 0);
    CHECK(t.dtheta == 0.0);
    CHECK(t.dz == 0.0);
  }
  SECTION("zigzag minus step (pi/n, -4pi/(sqrt 3 a))") {
    const TubeGeometry g = make(5, 0);
    const RotTranslation t = reciprocal_transform(reciprocal_tube(g), Branch::Minus, 1);
    CHECK(t.dtheta == Approx(pi / 5).margin(1e-12));
    CHECK(t.dz == Approx(-4 * pi / (std::sqrt(3.0) * g.a)).margin(1e-12));
  }
  SECTION("zigzag plus branch is a pure rotation in reciprocal space") {
    const TubeGeometry g = make(5, 0);
    const RotTranslation t = reciprocal_transform(reciprocal_tube(g), Branch::Plus, 3);
    CHECK(t.dtheta == Approx(3 * g.alpha_plus).margin(1e-12));
    CHECK(t.dz == 0.0);
  }
  SECTION("chiral steps match +-2pi j / c") {
    const TubeGeometry g = make(4, 2);
    const ReciprocalTube rt = reciprocal_tube(g);
    const RotTranslation tp = reciprocal_transform(rt, Branch::Plus, 2);
    CHECK(tp.dz == Approx(2 * two_pi / g.c_plus).epsilon(1e-13));
    const RotTranslation tm = reciprocal_transform(rt, Branch::Minus, 2);
    CHECK(tm.dz == Approx(-2 * two_pi / g.c_minus).epsilon(1e-13));
  }
}
