#pragma once

// Closed-form geometry of a single-walled carbon nanotube: every scalar
// derived from the chiral indices (n, m) and the graphene lattice constant,
// plus the 3d characteristic vectors of the rolled tube.

#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace swcnt {

inline constexpr double default_lattice_constant = 2.46;  // graphene, angstrom

/// Chiral indices (n, m) and lattice constant; the sole input defining a tube.
struct ChiralSpec {
  int n = 1;
  int m = 0;
  double a = default_lattice_constant;
};

enum class SymmetryClass { Armchair, Zigzag, Chiral };

inline const char* to_string(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::Armchair: return "armchair";
    case SymmetryClass::Zigzag: return "zigzag";
    default: return "chiral";
  }
}

inline void validate(const ChiralSpec& spec) {
  if (spec.n < 1)
    throw std::invalid_argument("chiral index n must satisfy n >= 1");
  if (spec.m < 0 || spec.m > spec.n)
    throw std::invalid_argument("chiral indices require m <= n and m >= 0");
  if (!(spec.a > 0.0))
    throw std::invalid_argument("lattice constant a must be positive");
}

inline SymmetryClass classify(const ChiralSpec& spec) {
  validate(spec);
  if (spec.m == spec.n) return SymmetryClass::Armchair;
  if (spec.m == 0) return SymmetryClass::Zigzag;
  return SymmetryClass::Chiral;
}

/// The cell count of a finite tube must be a positive multiple of this:
/// 2m for armchair/chiral tubes, 2n for zigzag tubes.
inline int cell_count_multiple(const ChiralSpec& spec) {
  return spec.m == 0 ? 2 * spec.n : 2 * spec.m;
}

/// All derived scalars of a tube (n, m) with N = n_cells hexagonal cells.
///
/// Angles theta_pm are the chiral angles between C_h and the two graphene
/// lattice vectors; alpha_pm the rotation angles of one lattice step around
/// the axis; c_pm the axial projections of the lattice vectors; chord_pm the
/// 3d chord lengths of the rolled lattice vectors.
struct TubeGeometry {
  int n = 0, m = 0;
  double a = default_lattice_constant;
  SymmetryClass sym = SymmetryClass::Zigzag;

  double r_t = 0;                            // tube radius
  double theta_plus = 0, theta_minus = 0;    // chiral angles, theta_+ + theta_- = pi/3
  double alpha_plus = 0, alpha_minus = 0;    // rotation angles, r_t*alpha_pm = a*cos(theta_pm)
  double c_plus = 0, c_minus = 0;            // axial shifts, c_+ = 0 iff zigzag
  double chord_plus = 0, chord_minus = 0;    // rolled chord lengths, <= a
  double ch_len = 0;                         // |C_h|
  double t_len = 0;                          // |T|, translation period
  int t1 = 0, t2 = 0;                        // translation vector components
  int d = 0;                                 // gcd(n, m)
  int d_R = 0;                               // gcd(2n + m, n + 2m)
  int n_cells = 0;                           // N
  int L = 0;                                 // N = 2mL (armchair/chiral), N = 2nL (zigzag)
};

struct TranslationVector {
  int t1 = 0, t2 = 0, d = 0, d_R = 0;
  double t_len = 0;
};

/// Smallest graphene lattice translation parallel to the tube axis.
inline TranslationVector translation_vector(const ChiralSpec& spec) {
  validate(spec);
  const int n = spec.n, m = spec.m;
  TranslationVector tv;
  tv.d = std::gcd(n, m);
  tv.d_R = std::gcd(2 * n + m, n + 2 * m);
  tv.t1 = (n + 2 * m) / tv.d_R;
  tv.t2 = -(2 * n + m) / tv.d_R;
  const double dd = double(n) * n + double(m) * m + double(n) * m;
  tv.t_len = std::sqrt(3.0) * spec.a * std::sqrt(dd) / tv.d_R;
  return tv;
}

/// Populate every TubeGeometry field for a finite tube with n_cells cells.
/// n_cells must be a positive multiple of cell_count_multiple(spec).
inline TubeGeometry compute_geometry(const ChiralSpec& spec, int n_cells) {
  validate(spec);
  const int base = cell_count_multiple(spec);
  if (n_cells <= 0 || n_cells % base != 0)
    throw std::invalid_argument("n_cells must be a positive multiple of " +
                                std::to_string(base) + " for tube (" +
                                std::to_string(spec.n) + "," + std::to_string(spec.m) + ")");

  const int n = spec.n, m = spec.m;
  const double a = spec.a;
  const double dd = double(n) * n + double(m) * m + double(n) * m;
  const double root = std::sqrt(dd);

  TubeGeometry g;
  g.n = n;
  g.m = m;
  g.a = a;
  g.sym = classify(spec);
  g.ch_len = a * root;
  g.r_t = g.ch_len / (2.0 * std::numbers::pi);
  g.theta_plus = std::acos((2.0 * n + m) / (2.0 * root));
  g.theta_minus = std::acos((n + 2.0 * m) / (2.0 * root));
  g.alpha_plus = std::numbers::pi * (2.0 * n + m) / dd;
  g.alpha_minus = std::numbers::pi * (n + 2.0 * m) / dd;
  g.c_plus = std::sqrt(3.0) * m * a / (2.0 * root);
  g.c_minus = std::sqrt(3.0) * n * a / (2.0 * root);
  const auto chord = [&](double theta, double alpha) {
    const double s = a * std::sin(theta);
    const double t = 2.0 * g.r_t * std::sin(alpha / 2.0);
    return std::sqrt(s * s + t * t);
  };
  g.chord_plus = chord(g.theta_plus, g.alpha_plus);
  g.chord_minus = chord(g.theta_minus, g.alpha_minus);

  const TranslationVector tv = translation_vector(spec);
  g.t1 = tv.t1;
  g.t2 = tv.t2;
  g.d = tv.d;
  g.d_R = tv.d_R;
  g.t_len = tv.t_len;

  g.n_cells = n_cells;
  g.L = n_cells / base;
  return g;
}

/// 3d analogues of the graphene lattice vectors for the rolled tube.
struct CharacteristicVectors {
  std::array<double, 3> a_hat_plus{};
  std::array<double, 3> a_hat_minus{};
};

inline CharacteristicVectors characteristic_vectors(const TubeGeometry& g) {
  CharacteristicVectors cv;
  cv.a_hat_plus = {-g.r_t * std::sin(g.alpha_plus), g.r_t * std::cos(g.alpha_plus), g.c_plus};
  cv.a_hat_minus = {-g.r_t * std::sin(g.alpha_minus), g.r_t * std::cos(g.alpha_minus), -g.c_minus};
  return cv;
}

/// Area of one (flat or rolled) unit cell; rolling preserves it.
inline double cell_area(const TubeGeometry& g) {
  return std::sqrt(3.0) * g.a * g.a / 2.0;
}

}  // namespace swcnt
