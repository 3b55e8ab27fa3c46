#pragma once

// Bloch machinery on the tube: phase factors of the screw transforms, Bloch
// sums of localized orbitals, cyclic eigenfunction combinations, overlap
// quadrature over the fundamental strip, and the modified operator acting on
// the periodic factor u of psi = e^{i k.r} u.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "swcnt/geometry.hpp"
#include "swcnt/reciprocal.hpp"
#include "swcnt/surface_function.hpp"
#include "swcnt/transforms.hpp"

namespace swcnt {

/// Eigenphases of the screw transforms at step j:
/// sigma = +-kappa c_pm j (real-space transform), eta = +-2 pi z j / c_pm
/// (reciprocal transform); lambda = e^{i sigma}, mu = e^{i eta}.
struct BlochPhase {
  double sigma = 0.0;
  double eta = 0.0;
  Complex lambda{1.0, 0.0};
  Complex mu{1.0, 0.0};
};

inline BlochPhase bloch_phases(const TubeGeometry& g, const KPoint& k, const TubePoint& r, int j,
                               Branch branch) {
  const double c = branch == Branch::Plus ? g.c_plus : g.c_minus;
  const double sign = branch == Branch::Plus ? 1.0 : -1.0;
  if (!(c > 0.0))
    throw std::domain_error("rotation-only branch has no axial phase");
  BlochPhase ph;
  ph.sigma = sign * k.kappa * c * j;
  ph.eta = sign * two_pi * r.z * j / c;
  ph.lambda = std::polar(1.0, ph.sigma);
  ph.mu = std::polar(1.0, ph.eta);
  return ph;
}

/// Scalar product k.r of a reciprocal-tube point with a real-tube point:
/// pi cos(theta - tau) + kappa z.
inline double phase_inner(const KPoint& k, const TubePoint& r) {
  return std::numbers::pi * std::cos(r.theta - k.tau) + k.kappa * r.z;
}

/// Localized model orbital: a Gaussian bump in geodesic distance, wrapped
/// around the cylinder and over the finite-tube screw identification.
struct ModelOrbital {
  TubePoint center{};
  double width = 0.3 * default_lattice_constant;  // angstrom
  double normalization = 1.0;                     // peak value
};

/// Evaluate the wrapped orbital at (theta, z). Sums all periodic images whose
/// Gaussian tail exceeds machine precision, so the result is exactly
/// invariant under the identification and smooth on the quotient.
inline double evaluate_orbital(const TubeGeometry& g, const ModelOrbital& orb, double theta,
                               double z) {
  if (!(orb.width > 0.0) || orb.width >= g.r_t)
    throw std::invalid_argument("orbital width must lie in (0, r_t)");
  const double period = strip_period(g);
  const double twist = strip_twist(g);
  const double cut = 9.0 * orb.width;
  const int wmax = 1 + static_cast<int>(cut / period);
  const double circumference = two_pi * g.r_t;
  const int kmax = 1 + static_cast<int>(cut / circumference);
  const double inv2w2 = 1.0 / (2.0 * orb.width * orb.width);
  double total = 0.0;
  for (int w = -wmax; w <= wmax; ++w) {
    const double dz = z - (orb.center.z + w * period);
    if (std::abs(dz) > cut) continue;
    const double dth = std::remainder(theta - (orb.center.theta + w * twist), two_pi);
    for (int k = -kmax; k <= kmax; ++k) {
      const double arc = g.r_t * (dth + two_pi * k);
      total += std::exp(-(arc * arc + dz * dz) * inv2w2);
    }
  }
  return orb.normalization * total;
}

inline bool orbital_locality_ok(const TubeGeometry& g, const ModelOrbital& orb) {
  return orb.width <= g.a / std::sqrt(3.0);  // half the cell diameter
}

/// Tight-binding Bloch sum over all cells of the finite tube, placed on the
/// requested sublattice site and normalized by 1/sqrt(N). For armchair and
/// chiral tubes the cell (s, j) carries the phase e^{i s kappa c_-}
/// e^{-i j kappa c_+}; for zigzag tubes only the axial index is phased
/// (c_+ = 0 makes the j factor equal one).
inline SurfaceFunction bloch_sum(const TubeGeometry& g, const ModelOrbital& orbital, double kappa,
                                 Sublattice sub, const GridSpec& grid,
                                 std::vector<std::string>* warnings = nullptr) {
  if (warnings && !orbital_locality_ok(g, orbital))
    warnings->push_back("orbital width exceeds half the cell diameter; locality is poor");
  ModelOrbital placed = orbital;
  placed.center = sublattice_site(g, sub);

  // Rectangular index window: s in [0, m), j in [-L, L) for armchair/chiral,
  // j in [0, n), s in [-L, L) for zigzag.
  std::vector<RotTranslation> moves;
  std::vector<Complex> phases;
  const bool zz = g.sym == SymmetryClass::Zigzag;
  const int s_lo = zz ? -g.L : 0;
  const int s_hi = zz ? g.L : g.m;
  const int j_lo = zz ? 0 : -g.L;
  const int j_hi = zz ? g.n : g.L;
  for (int s = s_lo; s < s_hi; ++s)
    for (int j = j_lo; j < j_hi; ++j) {
      moves.push_back(cell_transform(g, {s, j}));
      phases.push_back(std::polar(1.0, kappa * (s * g.c_minus - j * g.c_plus)));
    }

  const double norm = 1.0 / std::sqrt(double(g.n_cells));
  std::vector<Complex> values(static_cast<std::size_t>(grid.n_theta * grid.n_z));
  for (int a = 0; a < grid.n_theta; ++a) {
    const double theta = two_pi * a / grid.n_theta;
    for (int b = 0; b < grid.n_z; ++b) {
      const double z = grid.period * b / grid.n_z;
      Complex acc = 0.0;
      for (std::size_t i = 0; i < moves.size(); ++i) {
        const TubePoint moved{theta + moves[i].dtheta, z + moves[i].dz};
        acc += phases[i] * evaluate_orbital(g, placed, moved.theta, moved.z);
      }
      values[static_cast<std::size_t>(a * grid.n_z + b)] = norm * acc;
    }
  }
  return SurfaceFunction(g, grid, std::move(values));
}

/// Max-norm residual of the Bloch transformation law
/// f(T_l r) = e^{+- i l kappa c_pm} f(r), evaluated on the grid with the
/// transformed side obtained by spectral interpolation.
inline double verify_bloch_property(const SurfaceFunction& phi, const TubeGeometry& g,
                                    double kappa, Branch branch, int l = 1) {
  if (l == 0) return 0.0;  // identity transform, phase one
  const RotTranslation t = make_transform(g, branch, l);
  const SurfaceFunction moved = phi.transformed_resample(t);
  const double c = branch == Branch::Plus ? g.c_plus : g.c_minus;
  const double sign = branch == Branch::Plus ? 1.0 : -1.0;
  const Complex phase = std::polar(1.0, sign * l * kappa * c);
  double residual = 0.0;
  const auto& a = moved.values();
  const auto& b = phi.values();
  for (std::size_t i = 0; i < a.size(); ++i)
    residual = std::max(residual, std::abs(a[i] - phase * b[i]));
  return residual;
}

namespace detail {

inline int quantization_index(const TubeGeometry& g, double kappa) {
  const double step = std::numbers::pi / (g.L * axial_step(g));
  const double ratio = kappa / step;
  const int nu = static_cast<int>(std::lround(ratio));
  if (std::abs(ratio - nu) > 1e-9)
    throw std::invalid_argument("kappa is not on the quantized grid kappa_nu");
  return nu;
}

}  // namespace detail

/// Cyclic eigenfunction Psi = sum_j e^{-i pi nu j / L} psi(T_j r) built from a
/// localized seed, with the axial branch of the tube (T^+ for armchair and
/// chiral tubes, T^- for zigzag). kappa must be one of the quantized values.
/// On the minus branch the combination phase is conjugated so that the result
/// obeys T_l^- Psi = e^{-i l kappa c_-} Psi at the requested kappa (the
/// c_+ -> -c_- replacement of the transformation law).
inline SurfaceFunction cyclic_eigenfunction(const SurfaceFunction& seed, const TubeGeometry& g,
                                            double kappa) {
  const int nu = detail::quantization_index(g, kappa);
  const Branch branch = axial_branch(g);
  const double sign = branch == Branch::Plus ? -1.0 : 1.0;
  std::vector<Complex> acc(seed.values().size(), Complex(0.0, 0.0));
  for (int j = -g.L; j < g.L; ++j) {
    const SurfaceFunction term = seed.transformed_resample(make_transform(g, branch, j));
    const Complex phase = std::polar(1.0, sign * std::numbers::pi * nu * double(j) / g.L);
    const auto& v = term.values();
    for (std::size_t i = 0; i < v.size(); ++i) acc[i] += phase * v[i];
  }
  return SurfaceFunction(seed.geometry(), seed.grid(), std::move(acc));
}

/// Inner product over the fundamental strip A_0 (2L cells along the axial
/// branch): integral of conj(f) g r_t dtheta dz. The strip is parametrized by
/// lattice coordinates, where the area element is constant and the axial
/// sample count is a multiple of 2L, so the geometric phase cancellation of
/// cyclic eigenfunctions is reproduced exactly.
inline Complex overlap_integral(const SurfaceFunction& f, const SurfaceFunction& g) {
  if (!(f.grid() == g.grid()) || f.geometry().n != g.geometry().n ||
      f.geometry().m != g.geometry().m || f.geometry().n_cells != g.geometry().n_cells)
    throw std::invalid_argument("overlap_integral requires matching grids");
  const TubeGeometry& geom = f.geometry();
  const int L = geom.L;
  const bool zz = geom.sym == SymmetryClass::Zigzag;
  const double ax_alpha = zz ? geom.alpha_minus : geom.alpha_plus;
  const double ax_c = zz ? -geom.c_minus : geom.c_plus;
  const double other_alpha = zz ? geom.alpha_plus : geom.alpha_minus;
  const double other_c = zz ? 0.0 : -geom.c_minus;

  const int per_cell = 8;
  const int nx = 2 * L * per_cell;
  const int ny = 16;
  Complex sum = 0.0;
  for (int ix = 0; ix < nx; ++ix) {
    const double x = -L + double(ix) / per_cell;
    for (int iy = 0; iy < ny; ++iy) {
      const double y = double(iy) / ny;
      const double theta = x * ax_alpha + y * other_alpha;
      const double z = x * ax_c + y * other_c;
      sum += std::conj(f.evaluate(theta, z)) * g.evaluate(theta, z);
    }
  }
  const double strip_area = 2.0 * L * cell_area(geom);
  return sum * (strip_area / (double(nx) * double(ny)));
}

/// Configuration of the single-electron Hamiltonian
/// H = -kinetic_prefactor Laplacian + V.
struct SchrodingerConfig {
  double kinetic_prefactor = 3.8099821161548593;  // hbar^2/(2 m_e), eV A^2
  std::function<double(double, double)> potential;  // V(theta, z), eV
};

/// Largest violation of V(T_1^{+-} r) = V(r) over the grid points.
inline double potential_symmetry_residual(const SchrodingerConfig& cfg, const TubeGeometry& g,
                                          const GridSpec& grid) {
  if (!cfg.potential) return 0.0;
  double residual = 0.0;
  for (Branch branch : {Branch::Plus, Branch::Minus}) {
    const RotTranslation t = make_transform(g, branch, 1);
    for (int a = 0; a < grid.n_theta; ++a)
      for (int b = 0; b < grid.n_z; ++b) {
        const TubePoint p{two_pi * a / grid.n_theta, grid.period * b / grid.n_z};
        const TubePoint q = apply(t, p);
        residual = std::max(residual,
                            std::abs(cfg.potential(q.theta, q.z) - cfg.potential(p.theta, p.z)));
      }
  }
  return residual;
}

/// Apply the modified operator to the periodic factor u(r; k):
/// -kinetic_prefactor * [ u_tt/r^2 + u_zz + (2 pi i / r^2) sin(tau-theta) u_t
///   + 2 i kappa u_z - ( (pi/r^2)(i cos(tau-theta) + pi sin^2(tau-theta))
///   + kappa^2 ) u ] + V u,
/// with derivatives taken spectrally on the grid.
inline SurfaceFunction modified_operator_apply(const SurfaceFunction& u, const KPoint& k,
                                               const TubeGeometry& g,
                                               const SchrodingerConfig& cfg) {
  const SurfaceFunction ut = u.derivative(1, 0);
  const SurfaceFunction utt = u.derivative(2, 0);
  const SurfaceFunction uz = u.derivative(0, 1);
  const SurfaceFunction uzz = u.derivative(0, 2);

  const double inv_r2 = 1.0 / (g.r_t * g.r_t);
  const double pref = cfg.kinetic_prefactor;
  const GridSpec& grid = u.grid();
  std::vector<Complex> out(u.values().size());
  for (int a = 0; a < grid.n_theta; ++a) {
    const double theta = two_pi * a / grid.n_theta;
    const double s = std::sin(k.tau - theta);
    const double c = std::cos(k.tau - theta);
    const Complex drift_theta(0.0, two_pi * inv_r2 * s);
    const Complex drift_z(0.0, 2.0 * k.kappa);
    const Complex zero_order =
        -Complex(std::numbers::pi * inv_r2 * std::numbers::pi * s * s + k.kappa * k.kappa,
                 std::numbers::pi * inv_r2 * c);
    for (int b = 0; b < grid.n_z; ++b) {
      const std::size_t i = static_cast<std::size_t>(a * grid.n_z + b);
      const Complex nabla = inv_r2 * utt.values()[i] + uzz.values()[i] +
                            drift_theta * ut.values()[i] + drift_z * uz.values()[i] +
                            zero_order * u.values()[i];
      const double v =
          cfg.potential ? cfg.potential(theta, grid.period * b / grid.n_z) : 0.0;
      out[i] = -pref * nabla + v * u.values()[i];
    }
  }
  return SurfaceFunction(u.geometry(), grid, std::move(out));
}

}  // namespace swcnt
