#pragma once

// Rotation-translation symmetry of the real tube: the screw transforms
// T_j^{+-}, their compositions, cell enumeration with cyclic closure, and
// 3d atom-position generation with neighbor-shell detection.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "swcnt/geometry.hpp"

namespace swcnt {

enum class Branch { Plus, Minus };

/// A screw move: rotation about the tube axis plus an axial shift.
/// Composition adds componentwise; identity is (0, 0).
struct RotTranslation {
  double dtheta = 0.0;  // rad
  double dz = 0.0;      // angstrom
};

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Reduce an angle to [0, 2pi) with a 1e-12 snap at the seam so that
/// enumeration stays deterministic.
inline double wrap_angle(double x) {
  double y = std::fmod(x, two_pi);
  if (y < 0.0) y += two_pi;
  if (two_pi - y < 1e-12) y = 0.0;
  return y;
}

/// T_j^{branch}: rotation by j*alpha_branch with axial shift +-j*c_branch.
inline RotTranslation make_transform(const TubeGeometry& g, Branch branch, int j) {
  if (branch == Branch::Plus) return {j * g.alpha_plus, j * g.c_plus};
  return {j * g.alpha_minus, -j * g.c_minus};
}

inline RotTranslation compose(const RotTranslation& t1, const RotTranslation& t2) {
  return {t1.dtheta + t2.dtheta, t1.dz + t2.dz};
}

inline RotTranslation inverse(const RotTranslation& t) { return {-t.dtheta, -t.dz}; }

/// Point on the cylinder of radius r_t, theta reduced to [0, 2pi).
struct TubePoint {
  double theta = 0.0;
  double z = 0.0;
};

inline TubePoint apply(const RotTranslation& t, const TubePoint& p) {
  return {wrap_angle(p.theta + t.dtheta), p.z + t.dz};
}

inline std::array<double, 3> to_cartesian(double r_t, const TubePoint& p) {
  return {-r_t * std::sin(p.theta), r_t * std::cos(p.theta), p.z};
}

/// Cell label (s, j); ranges depend on the symmetry class.
struct CellIndex {
  int s = 0;
  int j = 0;
};

/// The transform mapping the reference cell to cell (s, j).
/// Armchair/chiral: M^{-+}_{s,j} = T_s^- T_j^+; zigzag: M^{+-}_{j,s} = R_j T_s^-.
/// Both reduce to dtheta = j*alpha_+ + s*alpha_-, dz = j*c_+ - s*c_-.
inline RotTranslation cell_transform(const TubeGeometry& g, const CellIndex& c) {
  return {c.j * g.alpha_plus + c.s * g.alpha_minus, c.j * g.c_plus - c.s * g.c_minus};
}

/// List the N cells of the finite tube, each exactly once.
/// Armchair/chiral: s in [0, m), j in [-L+s, L+s). Zigzag: j in [0, n),
/// s in [-L, L). The closure identity pairs j = -L+s with j = L+s through
/// the finite-tube period.
inline std::vector<CellIndex> enumerate_cells(const TubeGeometry& g) {
  std::vector<CellIndex> cells;
  cells.reserve(static_cast<std::size_t>(g.n_cells));
  if (g.sym == SymmetryClass::Zigzag) {
    for (int j = 0; j < g.n; ++j)
      for (int s = -g.L; s < g.L; ++s) cells.push_back({s, j});
  } else {
    for (int s = 0; s < g.m; ++s)
      for (int j = -g.L + s; j < g.L + s; ++j) cells.push_back({s, j});
  }
  return cells;
}

/// Branch whose repeated application runs along the tube axis:
/// + for armchair/chiral tubes, - for zigzag tubes (+ is a pure rotation there).
inline Branch axial_branch(const TubeGeometry& g) {
  return g.sym == SymmetryClass::Zigzag ? Branch::Minus : Branch::Plus;
}

inline double axial_step(const TubeGeometry& g) {
  return g.sym == SymmetryClass::Zigzag ? g.c_minus : g.c_plus;
}

/// Axial period of the finite tube: 2L axial steps.
inline double strip_period(const TubeGeometry& g) { return 2.0 * g.L * axial_step(g); }

/// Twist accumulated over one axial period, reduced to (-pi, pi].
/// The finite tube identifies (theta, z) with (theta + twist, z + period).
inline double strip_twist(const TubeGeometry& g) {
  const double raw = g.sym == SymmetryClass::Zigzag ? -2.0 * g.L * g.alpha_minus
                                                    : 2.0 * g.L * g.alpha_plus;
  return std::remainder(raw, two_pi);
}

enum class Sublattice { A, B };

/// Rolled coordinates of the two basis atoms; B is the flat graphene basis
/// offset (a_+ + a_-)/3 pushed through the same arc-length-preserving map
/// as the lattice vectors.
inline TubePoint sublattice_site(const TubeGeometry& g, Sublattice s) {
  if (s == Sublattice::A) return {0.0, 0.0};
  return {(g.alpha_plus + g.alpha_minus) / 3.0, (g.c_plus - g.c_minus) / 3.0};
}

struct AtomSite {
  std::array<double, 3> position{};  // cartesian, angstrom
  Sublattice sublattice = Sublattice::A;
  CellIndex cell;
};

/// The 2N atoms of the finite tube, two per cell, in enumeration order.
inline std::vector<AtomSite> atom_positions(const TubeGeometry& g) {
  std::vector<AtomSite> atoms;
  atoms.reserve(static_cast<std::size_t>(2 * g.n_cells));
  const TubePoint site_a = sublattice_site(g, Sublattice::A);
  const TubePoint site_b = sublattice_site(g, Sublattice::B);
  for (const CellIndex& c : enumerate_cells(g)) {
    const RotTranslation t = cell_transform(g, c);
    atoms.push_back({to_cartesian(g.r_t, apply(t, site_a)), Sublattice::A, c});
    atoms.push_back({to_cartesian(g.r_t, apply(t, site_b)), Sublattice::B, c});
  }
  return atoms;
}

/// Distance between two atoms, minimized over the screw-periodic images of
/// the second one.
inline double min_image_distance(const TubeGeometry& g, const std::array<double, 3>& p,
                                 const std::array<double, 3>& q) {
  const double period = strip_period(g);
  const double twist = strip_twist(g);
  double best = std::numeric_limits<double>::max();
  for (int w = -2; w <= 2; ++w) {
    const double c = std::cos(w * twist), s = std::sin(w * twist);
    const double x = c * q[0] - s * q[1];
    const double y = s * q[0] + c * q[1];
    const double z = q[2] + w * period;
    const double dx = p[0] - x, dy = p[1] - y, dz = p[2] - z;
    best = std::min(best, std::sqrt(dx * dx + dy * dy + dz * dz));
  }
  return best;
}

struct NeighborInfo {
  int index = 0;
  double distance = 0.0;
};

struct NeighborShells {
  std::vector<std::vector<NeighborInfo>> shell1;  // 3 per atom, opposite sublattice
  std::vector<std::vector<NeighborInfo>> shell2;  // 6 per atom, same sublattice
};

/// Nearest-neighbor shells with periodic closure across the cyclic boundary.
/// shells = 1 keeps only the first shell; shells = 2 adds the second.
inline NeighborShells neighbor_shells(const TubeGeometry& g, const std::vector<AtomSite>& atoms,
                                      int shells) {
  if (shells != 1 && shells != 2)
    throw std::invalid_argument("neighbor_shells supports shells = 1 or 2");
  const int count = static_cast<int>(atoms.size());
  const int needed = shells == 1 ? 3 : 9;
  if (count <= needed)
    throw std::invalid_argument("too few atoms for the requested shells");

  NeighborShells out;
  out.shell1.resize(atoms.size());
  if (shells == 2) out.shell2.resize(atoms.size());

  std::vector<NeighborInfo> cand;
  for (int i = 0; i < count; ++i) {
    cand.clear();
    for (int j = 0; j < count; ++j) {
      if (j == i) continue;
      cand.push_back({j, min_image_distance(g, atoms[i].position, atoms[j].position)});
    }
    std::sort(cand.begin(), cand.end(), [](const NeighborInfo& a, const NeighborInfo& b) {
      return a.distance != b.distance ? a.distance < b.distance : a.index < b.index;
    });
    if (cand[3].distance - cand[2].distance < 1e-6)
      throw std::runtime_error("ambiguous shell split: gap below 1e-6 angstrom after shell 1");
    out.shell1[i].assign(cand.begin(), cand.begin() + 3);
    for (const NeighborInfo& nb : out.shell1[i])
      if (atoms[nb.index].sublattice == atoms[i].sublattice)
        throw std::runtime_error("shell-1 neighbor on the same sublattice");
    if (shells == 2) {
      if (cand[9].distance - cand[8].distance < 1e-6)
        throw std::runtime_error("ambiguous shell split: gap below 1e-6 angstrom after shell 2");
      out.shell2[i].assign(cand.begin() + 3, cand.begin() + 9);
      for (const NeighborInfo& nb : out.shell2[i])
        if (atoms[nb.index].sublattice != atoms[i].sublattice)
          throw std::runtime_error("shell-2 neighbor on the opposite sublattice");
    }
  }
  return out;
}

}  // namespace swcnt
