#pragma once

// First and second nearest-neighbor tight-binding matrices on the quantized
// kappa grid, the 2x2 secular equation, and band-structure sweeps.

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "swcnt/geometry.hpp"
#include "swcnt/reciprocal.hpp"
#include "swcnt/transforms.hpp"

namespace swcnt {

enum class TBModel { Flat, CurvatureAware };

/// Hopping/overlap parameterization. Flat: constant hopping per shell.
/// CurvatureAware: t(d) = t0 (d_ref/d)^beta (n_i . n_j), with d the 3d chord
/// distance of the bond and n the outward surface normals; overlaps stay
/// constant per shell in both models.
struct TBParams {
  double eps_2p = 0.0;  // onsite energy, eV
  double t1 = 2.7;      // first-shell hopping magnitude, eV
  double t2 = 0.1;      // second-shell hopping magnitude, eV
  double s1 = 0.1;      // first-shell overlap
  double s2 = 0.0;      // second-shell overlap
  TBModel model = TBModel::Flat;
  double t0 = 2.7;                                     // eV
  double d_ref = default_lattice_constant / std::sqrt(3.0);  // angstrom
  double beta = 2.0;
};

inline void validate(const TBParams& p) {
  if (p.t1 < 0.0) throw std::invalid_argument("t1 must be nonnegative");
  if (std::abs(p.s1) >= 1.0) throw std::invalid_argument("|s1| must be below 1");
  if (p.beta < 0.0) throw std::invalid_argument("beta must be nonnegative");
  if (!(p.d_ref > 0.0)) throw std::invalid_argument("d_ref must be positive");
}

namespace detail {

// A bond on the rolled tube, as an angular plus axial displacement.
struct Bond {
  double dtheta = 0.0;
  double dz = 0.0;
};

inline double bond_chord(const TubeGeometry& g, const Bond& b) {
  const double planar = 2.0 * g.r_t * std::sin(b.dtheta / 2.0);
  return std::sqrt(planar * planar + b.dz * b.dz);
}

inline double curvature_hopping(const TBParams& p, const TubeGeometry& g, const Bond& b) {
  const double d = bond_chord(g, b);
  const double alignment = std::clamp(std::cos(b.dtheta), 0.0, 1.0);
  return -p.t0 * std::pow(p.d_ref / d, p.beta) * alignment;
}

inline double shell_hopping(const TBParams& p, const TubeGeometry& g, const Bond& b, int shell) {
  if (p.model == TBModel::Flat) return shell == 1 ? -p.t1 : -p.t2;
  return curvature_hopping(p, g, b);
}

// First-shell bonds from an A site, in the order carrying phases
// {1, e^{i kappa c_+}, e^{-i kappa c_-}}.
inline std::array<Bond, 3> first_shell_bonds(const TubeGeometry& g) {
  const double th0 = (g.alpha_plus + g.alpha_minus) / 3.0;
  const double z0 = (g.c_plus - g.c_minus) / 3.0;
  return {Bond{th0, z0}, Bond{th0 - g.alpha_plus, z0 - g.c_plus},
          Bond{th0 - g.alpha_minus, z0 + g.c_minus}};
}

// Second-shell bonds, one per conjugate pair: along a_+, a_-, and a_+ - a_-,
// carrying phase pairs e^{+-i kappa c_+}, e^{-+i kappa c_-},
// e^{+-i kappa (c_+ + c_-)}.
inline std::array<Bond, 3> second_shell_bonds(const TubeGeometry& g) {
  return {Bond{g.alpha_plus, g.c_plus}, Bond{g.alpha_minus, -g.c_minus},
          Bond{g.alpha_plus - g.alpha_minus, g.c_plus + g.c_minus}};
}

}  // namespace detail

/// Hopping integral between two concrete neighbor sites. The distance and
/// normal alignment use the screw-periodic minimum image.
inline double hopping_value(const TubeGeometry& g, const AtomSite& site_i, const AtomSite& site_j,
                            const TBParams& params, int shell) {
  validate(params);
  if (shell != 1 && shell != 2) throw std::invalid_argument("shell must be 1 or 2");
  const double d = min_image_distance(g, site_i.position, site_j.position);
  const double lo = shell == 1 ? 0.30 * g.a : 0.72 * g.a;
  const double hi = shell == 1 ? 0.72 * g.a : 1.02 * g.a;
  if (d < lo || d > hi)
    throw std::invalid_argument("sites are not shell-" + std::to_string(shell) + " neighbors");
  if (params.model == TBModel::Flat) return shell == 1 ? -params.t1 : -params.t2;
  // Reconstruct the bond as seen through the minimum image.
  const double period = strip_period(g);
  const double twist = strip_twist(g);
  double best = std::numeric_limits<double>::max();
  double best_dtheta = 0.0, best_dz = 0.0;
  const auto angle_of = [](const std::array<double, 3>& p) { return std::atan2(-p[0], p[1]); };
  for (int w = -2; w <= 2; ++w) {
    const double dz = site_j.position[2] + w * period - site_i.position[2];
    const double dth = std::remainder(angle_of(site_j.position) + w * twist -
                                          angle_of(site_i.position),
                                      two_pi);
    const double chord = detail::bond_chord(g, {dth, dz});
    if (chord < best) {
      best = chord;
      best_dtheta = dth;
      best_dz = dz;
    }
  }
  return detail::curvature_hopping(params, g, {best_dtheta, best_dz});
}

/// 2x2 Hamiltonian and overlap matrices at one kappa. Indices: 0 = A, 1 = B.
struct HSMatrices {
  std::array<std::array<Complex, 2>, 2> H{};
  std::array<std::array<Complex, 2>, 2> S{};
  double kappa = 0.0;
};

/// First nearest-neighbor matrices: off-diagonal sums of three phased bond
/// integrals, onsite diagonal. The zigzag forms arise automatically from
/// c_+ = 0 (the rotation term is unphased).
inline HSMatrices build_HS_first_nn(const TubeGeometry& g, const TBParams& params, double kappa) {
  validate(params);
  const auto bonds = detail::first_shell_bonds(g);
  const double h0 = detail::shell_hopping(params, g, bonds[0], 1);
  const double hp = detail::shell_hopping(params, g, bonds[1], 1);
  const double hm = detail::shell_hopping(params, g, bonds[2], 1);
  const Complex ep = std::polar(1.0, kappa * g.c_plus);
  const Complex em = std::polar(1.0, -kappa * g.c_minus);

  HSMatrices hs;
  hs.kappa = kappa;
  hs.H[0][0] = hs.H[1][1] = params.eps_2p;
  hs.H[0][1] = h0 + hp * ep + hm * em;
  hs.H[1][0] = h0 + hp * std::conj(ep) + hm * std::conj(em);
  hs.S[0][0] = hs.S[1][1] = 1.0;
  hs.S[0][1] = params.s1 * (1.0 + ep + em);
  hs.S[1][0] = params.s1 * (1.0 + std::conj(ep) + std::conj(em));
  return hs;
}

/// Second nearest-neighbor matrices: the off-diagonal entries are those of the
/// first-shell approximation; the diagonal gains the six phased same-sublattice
/// terms, which pair into cosines of kappa c_+, kappa c_-, kappa (c_+ + c_-).
inline HSMatrices build_HS_second_nn(const TubeGeometry& g, const TBParams& params, double kappa) {
  HSMatrices hs = build_HS_first_nn(g, params, kappa);
  const auto bonds = detail::second_shell_bonds(g);
  const double gp = detail::shell_hopping(params, g, bonds[0], 2);
  const double gm = detail::shell_hopping(params, g, bonds[1], 2);
  const double gx = detail::shell_hopping(params, g, bonds[2], 2);
  const double diag = 2.0 * (gp * std::cos(kappa * g.c_plus) + gm * std::cos(kappa * g.c_minus) +
                             gx * std::cos(kappa * (g.c_plus + g.c_minus)));
  const double sdiag =
      2.0 * params.s2 *
      (std::cos(kappa * g.c_plus) + std::cos(kappa * g.c_minus) +
       std::cos(kappa * (g.c_plus + g.c_minus)));
  hs.H[0][0] += diag;
  hs.H[1][1] += diag;
  hs.S[0][0] += sdiag;
  hs.S[1][1] += sdiag;
  return hs;
}

namespace detail {

inline Complex det2(const std::array<std::array<Complex, 2>, 2>& mat) {
  return mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0];
}

}  // namespace detail

/// Residual |det(H - eps S)| of a candidate band energy.
inline double secular_residual(const HSMatrices& hs, double eps) {
  std::array<std::array<Complex, 2>, 2> mat;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) mat[i][j] = hs.H[i][j] - eps * hs.S[i][j];
  return std::abs(detail::det2(mat));
}

/// Solve det(H - eps S) = 0 in closed form. Returns (eps_plus, eps_minus)
/// with eps_plus >= eps_minus.
inline std::pair<double, double> solve_secular(const HSMatrices& hs) {
  const Complex det_s_c = detail::det2(hs.S);
  const Complex det_h_c = detail::det2(hs.H);
  const Complex q_c = hs.S[0][1] * hs.H[1][0] + hs.S[1][0] * hs.H[0][1] -
                      hs.S[0][0] * hs.H[1][1] - hs.S[1][1] * hs.H[0][0];
  const double det_s = det_s_c.real();
  const double det_h = det_h_c.real();
  const double q = q_c.real();
  if (det_s <= 0.0) throw std::domain_error("overlap model unphysical: det S <= 0");
  double disc = q * q - 4.0 * det_s * det_h;
  if (disc < 0.0) {
    if (disc < -1e-12) throw std::domain_error("negative discriminant: non-Hermitian input");
    disc = 0.0;  // roundoff clamp
  }
  const double root = std::sqrt(disc);
  return {(-q + root) / (2.0 * det_s), (-q - root) / (2.0 * det_s)};
}

struct BandStructure {
  std::vector<double> kappas;
  std::vector<double> eps_plus;
  std::vector<double> eps_minus;
  std::vector<double> Q_values;
  double gap = 0.0;
  double gap_kappa = 0.0;
};

/// Band energies over an explicit kappa list (used by the dense, non-cyclic
/// sweep of the CLI as well as the quantized sweep below).
inline BandStructure band_structure_at(const TubeGeometry& g, const TBParams& params,
                                       const std::vector<double>& kappas, int order) {
  if (order != 1 && order != 2) throw std::invalid_argument("order must be 1 or 2");
  BandStructure bands;
  bands.kappas = kappas;
  bands.eps_plus.reserve(kappas.size());
  bands.eps_minus.reserve(kappas.size());
  bands.Q_values.reserve(kappas.size());
  bool first = true;
  for (double kappa : kappas) {
    const HSMatrices hs =
        order == 1 ? build_HS_first_nn(g, params, kappa) : build_HS_second_nn(g, params, kappa);
    const auto [up, down] = solve_secular(hs);
    const Complex q_c = hs.S[0][1] * hs.H[1][0] + hs.S[1][0] * hs.H[0][1] -
                        hs.S[0][0] * hs.H[1][1] - hs.S[1][1] * hs.H[0][0];
    bands.eps_plus.push_back(up);
    bands.eps_minus.push_back(down);
    bands.Q_values.push_back(q_c.real());
    const double diff = up - down;
    if (first || diff < bands.gap) {
      bands.gap = diff;
      bands.gap_kappa = kappa;
      first = false;
    }
  }
  return bands;
}

/// Sweep the 2L quantized kappa_nu in ascending nu order.
inline BandStructure band_structure(const TubeGeometry& g, const TBParams& params, int L,
                                    int order) {
  if (L < 2) throw std::invalid_argument("band_structure requires L >= 2");
  return band_structure_at(g, params, sample_kappa(g, L), order);
}

enum class BandClassification { MetalLike, Gapped };

inline std::pair<double, BandClassification> band_gap(const BandStructure& bands) {
  if (bands.kappas.empty()) throw std::invalid_argument("empty band structure");
  const auto kind = bands.gap < 1e-6 ? BandClassification::MetalLike : BandClassification::Gapped;
  return {bands.gap, kind};
}

}  // namespace swcnt
