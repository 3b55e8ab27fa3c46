#pragma once

// Reciprocal tube: reciprocal radius and characteristic vectors, the unrolled
// Brillouin hexagon (a Voronoi cell of the reciprocal lattice), the admissible
// wave-vector rectangles K^{+-}, and the quantized kappa grid.

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "swcnt/geometry.hpp"
#include "swcnt/transforms.hpp"

namespace swcnt {

/// Reciprocal-space data of a tube. b_prime/b_dprime are the arc and axial
/// components of the unrolled reciprocal lattice vectors b_{+-}; the 3d
/// vectors b_tilde_{+-} live on the reciprocal cylinder of radius r_tilde.
/// For zigzag tubes the + branch is a pure rotation and b_dprime_plus = 0.
struct ReciprocalTube {
  double r_tilde = 0.0;
  std::array<double, 3> b_tilde_plus{};
  std::array<double, 3> b_tilde_minus{};
  double b_prime_plus = 0.0;
  double b_prime_minus = 0.0;
  double b_dprime_plus = 0.0;
  double b_dprime_minus = 0.0;
  double a_tilde = 0.0;  // length of the unrolled b_+
};

inline ReciprocalTube reciprocal_tube(const TubeGeometry& g) {
  ReciprocalTube rt;
  rt.r_tilde = std::numbers::pi / g.r_t;
  rt.b_prime_plus = g.alpha_plus * rt.r_tilde;
  rt.b_prime_minus = g.alpha_minus * rt.r_tilde;
  rt.b_dprime_plus = g.c_plus > 0.0 ? two_pi / g.c_plus : 0.0;
  rt.b_dprime_minus = -two_pi / g.c_minus;
  rt.b_tilde_plus = {-rt.r_tilde * std::sin(g.alpha_plus), rt.r_tilde * std::cos(g.alpha_plus),
                     rt.b_dprime_plus};
  rt.b_tilde_minus = {-rt.r_tilde * std::sin(g.alpha_minus), rt.r_tilde * std::cos(g.alpha_minus),
                      rt.b_dprime_minus};
  rt.a_tilde = std::hypot(rt.b_prime_plus, rt.b_dprime_plus);
  return rt;
}

/// The four scalar products a_hat_{+-} . b_tilde_{+-}. Diagonal products are
/// 3pi for armchair and chiral tubes; for zigzag tubes c_+ = 0 makes the
/// plus-diagonal product equal pi and the closed form of one cross term
/// singular, so the values reported here are always the direct dot products.
struct DualProducts {
  double plus_plus = 0.0;
  double minus_minus = 0.0;
  double plus_minus = 0.0;
  double minus_plus = 0.0;
};

inline DualProducts dual_products(const CharacteristicVectors& cv, const ReciprocalTube& rt) {
  const auto dot = [](const std::array<double, 3>& u, const std::array<double, 3>& v) {
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
  };
  return {dot(cv.a_hat_plus, rt.b_tilde_plus), dot(cv.a_hat_minus, rt.b_tilde_minus),
          dot(cv.a_hat_plus, rt.b_tilde_minus), dot(cv.a_hat_minus, rt.b_tilde_plus)};
}

/// Wave-vector on the reciprocal tube: angular coordinate tau, axial kappa.
struct KPoint {
  double tau = 0.0;    // rad
  double kappa = 0.0;  // 1/angstrom
};

enum class DomainBranch { Plus, Minus, Shared };

/// Half-open admissible box [kappa_min, kappa_max) x [tau_min, tau_max).
/// rotation_only marks the degenerate zigzag + branch, where kappa is an
/// unconstrained constant.
struct KDomain {
  double kappa_min = 0.0, kappa_max = 0.0;
  double tau_min = 0.0, tau_max = 0.0;
  DomainBranch branch = DomainBranch::Shared;
  bool rotation_only = false;
};

inline KDomain k_domain(const TubeGeometry& g, Branch branch) {
  KDomain d;
  if (g.sym == SymmetryClass::Armchair) {
    d.branch = DomainBranch::Shared;
    d.kappa_max = std::numbers::pi / g.c_plus;  // = 2pi/a
    d.kappa_min = -d.kappa_max;
    d.tau_max = g.alpha_plus / 2.0;
    d.tau_min = -d.tau_max;
    return d;
  }
  if (branch == Branch::Plus) {
    d.branch = DomainBranch::Plus;
    if (g.sym == SymmetryClass::Zigzag) {
      d.rotation_only = true;  // kappa = const
      d.tau_max = g.alpha_plus / 2.0;
      d.tau_min = -d.tau_max;
      return d;
    }
    d.kappa_max = std::numbers::pi / g.c_plus;
    d.kappa_min = -d.kappa_max;
    d.tau_max = g.alpha_plus / 2.0;
    d.tau_min = -d.tau_max;
    return d;
  }
  d.branch = DomainBranch::Minus;
  d.kappa_max = std::numbers::pi / g.c_minus;
  d.kappa_min = -d.kappa_max;
  d.tau_max = g.alpha_minus / 2.0;
  d.tau_min = -d.tau_max;
  return d;
}

inline bool contains_kappa(const KDomain& d, double kappa) {
  return d.rotation_only || (kappa >= d.kappa_min && kappa < d.kappa_max);
}

/// Quantized axial wave numbers kappa_nu = (pi/c)(nu/L), nu = -L..L-1, with
/// c the axial step (c_+ for armchair/chiral, c_- for zigzag tubes).
inline std::vector<double> sample_kappa(const TubeGeometry& g, int L) {
  if (L < 1) throw std::invalid_argument("sample_kappa requires L >= 1");
  const double scale = std::numbers::pi / axial_step(g);
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(2 * L));
  for (int nu = -L; nu < L; ++nu) grid.push_back(scale * (double(nu) / L));
  return grid;
}

/// Rotation-translation transform acting on (tau, kappa) in reciprocal space:
/// (j*alpha_branch, +-2pi j/c_branch); the zigzag + branch is a pure rotation.
inline RotTranslation reciprocal_transform(const ReciprocalTube& rt, Branch branch, int j) {
  if (branch == Branch::Plus)
    return {j * rt.b_prime_plus / rt.r_tilde, j * rt.b_dprime_plus};
  return {j * rt.b_prime_minus / rt.r_tilde, j * rt.b_dprime_minus};
}

/// Unrolled Brillouin zone: Voronoi cell of the origin in the reciprocal
/// lattice, a nonregular hexagon with the same area as the lattice
/// parallelogram.
struct BrillouinHexagon {
  std::vector<std::array<double, 2>> vertices;  // counterclockwise, (x, z)
  double area = 0.0;
};

namespace detail {

// Lagrange (Gauss) reduction of a 2d lattice basis: returns an equivalent
// basis with |u| <= |v| and |u.v| <= |u|^2/2. For a reduced basis the
// Voronoi-relevant vectors all lie in the surrounding 3x3 coefficient block.
inline void lagrange_reduce(std::array<double, 2>& u, std::array<double, 2>& v) {
  const auto norm2 = [](const std::array<double, 2>& w) { return w[0] * w[0] + w[1] * w[1]; };
  for (int iter = 0; iter < 64; ++iter) {
    if (norm2(v) < norm2(u)) std::swap(u, v);
    const double q = std::round((u[0] * v[0] + u[1] * v[1]) / norm2(u));
    if (q == 0.0) break;
    v[0] -= q * u[0];
    v[1] -= q * u[1];
  }
}

// Clip a convex polygon with the half-plane {p : p.n <= c} (Sutherland-Hodgman).
inline void clip_halfplane(std::vector<std::array<double, 2>>& poly, double nx, double nz,
                           double c) {
  std::vector<std::array<double, 2>> out;
  const std::size_t count = poly.size();
  for (std::size_t i = 0; i < count; ++i) {
    const auto& p = poly[i];
    const auto& q = poly[(i + 1) % count];
    const double dp = nx * p[0] + nz * p[1] - c;
    const double dq = nx * q[0] + nz * q[1] - c;
    if (dp <= 0.0) out.push_back(p);
    if ((dp < 0.0 && dq > 0.0) || (dp > 0.0 && dq < 0.0)) {
      const double t = dp / (dp - dq);
      out.push_back({p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])});
    }
  }
  poly = std::move(out);
}

}  // namespace detail

/// Voronoi cell of the origin against the lattice points l1*b_+ + l2*b_- with
/// |l1|, |l2| <= block (block = 1 covers the 8 surrounding points; larger
/// blocks serve as a brute-force cross-check). Vertices deduplicated at 1e-10.
inline BrillouinHexagon voronoi_cell(const std::array<double, 2>& bp,
                                     const std::array<double, 2>& bm, int block = 1) {
  const double det = bp[0] * bm[1] - bp[1] * bm[0];
  const double scale = std::hypot(bp[0], bp[1]) * std::hypot(bm[0], bm[1]);
  if (std::abs(det) < 1e-12 * scale)
    throw std::domain_error("degenerate reciprocal lattice: b_+ and b_- are collinear");

  const double r = 3.0 * (std::hypot(bp[0], bp[1]) + std::hypot(bm[0], bm[1]));
  std::vector<std::array<double, 2>> poly = {{r, r}, {-r, r}, {-r, -r}, {r, -r}};
  for (int l1 = -block; l1 <= block; ++l1)
    for (int l2 = -block; l2 <= block; ++l2) {
      if (l1 == 0 && l2 == 0) continue;
      const double px = l1 * bp[0] + l2 * bm[0];
      const double pz = l1 * bp[1] + l2 * bm[1];
      detail::clip_halfplane(poly, px, pz, (px * px + pz * pz) / 2.0);
    }

  BrillouinHexagon hex;
  for (const auto& v : poly) {
    if (!hex.vertices.empty()) {
      const auto& last = hex.vertices.back();
      if (std::hypot(v[0] - last[0], v[1] - last[1]) < 1e-10) continue;
    }
    hex.vertices.push_back(v);
  }
  if (hex.vertices.size() > 1) {
    const auto& first = hex.vertices.front();
    const auto& last = hex.vertices.back();
    if (std::hypot(first[0] - last[0], first[1] - last[1]) < 1e-10) hex.vertices.pop_back();
  }
  double area2 = 0.0;
  for (std::size_t i = 0; i < hex.vertices.size(); ++i) {
    const auto& p = hex.vertices[i];
    const auto& q = hex.vertices[(i + 1) % hex.vertices.size()];
    area2 += p[0] * q[1] - q[0] * p[1];
  }
  hex.area = std::abs(area2) / 2.0;
  // Clipping a counterclockwise box keeps the orientation; flip if needed.
  if (area2 < 0.0) std::reverse(hex.vertices.begin(), hex.vertices.end());
  return hex;
}

inline BrillouinHexagon brillouin_zone(const ReciprocalTube& rt) {
  // The printed b_{+-} can be far from a reduced basis (m b_+ + n b_- has no
  // axial component), so reduce before clipping with the surrounding block.
  std::array<double, 2> u{rt.b_prime_plus, rt.b_dprime_plus};
  std::array<double, 2> v{rt.b_prime_minus, rt.b_dprime_minus};
  const double det = u[0] * v[1] - u[1] * v[0];
  const double scale = std::hypot(u[0], u[1]) * std::hypot(v[0], v[1]);
  if (std::abs(det) < 1e-12 * scale)
    throw std::domain_error("degenerate reciprocal lattice: b_+ and b_- are collinear");
  detail::lagrange_reduce(u, v);
  return voronoi_cell(u, v);
}

/// Area of the parallelogram spanned by the unrolled b_+ and b_-.
inline double parallelogram_area(const ReciprocalTube& rt) {
  return std::abs(rt.b_prime_plus * rt.b_dprime_minus - rt.b_dprime_plus * rt.b_prime_minus);
}

}  // namespace swcnt
