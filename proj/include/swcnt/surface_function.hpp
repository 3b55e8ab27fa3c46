#pragma once

// Complex scalar fields sampled on the tube surface. The finite tube is the
// quotient of the cylinder by a screw move: (theta, z) ~ (theta + twist,
// z + period). A function on that quotient is 2pi-periodic in theta but only
// twisted-periodic in z, so the natural spectral basis is
//
//   e_{q,p}(theta, z) = exp(i q theta) exp(i (2 pi p - q twist) z / period),
//
// each basis function itself invariant under the identification. Forward and
// inverse transforms below are direct DFTs plus a per-row twist alignment;
// grid sizes stay small (<= 128), so no FFT library is needed.

#include <cassert>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include "swcnt/geometry.hpp"
#include "swcnt/transforms.hpp"

namespace swcnt {

using Complex = std::complex<double>;

struct GridSpec {
  int n_theta = 64;
  int n_z = 64;
  double period = 0.0;  // axial extent, angstrom
  double twist = 0.0;   // rad, in (-pi, pi]
};

inline bool operator==(const GridSpec& a, const GridSpec& b) {
  return a.n_theta == b.n_theta && a.n_z == b.n_z && a.period == b.period && a.twist == b.twist;
}

/// Grid covering one axial period of the finite tube described by geom.
inline GridSpec default_grid(const TubeGeometry& g, int n_theta = 64, int n_z = 64) {
  return {n_theta, n_z, strip_period(g), strip_twist(g)};
}

namespace detail {

// e^{-2 pi i k / n} lookup for exact periodic indexing.
inline std::vector<Complex> unit_roots(int n) {
  std::vector<Complex> w(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) w[k] = std::polar(1.0, -two_pi * k / n);
  return w;
}

inline int mod_index(long long k, int n) {
  long long r = k % n;
  if (r < 0) r += n;
  return static_cast<int>(r);
}

}  // namespace detail

/// Immutable complex field on the (theta, z) grid of one axial strip.
/// Spectral coefficients in the twisted basis are computed at construction;
/// all queries are const and safe to run concurrently.
class SurfaceFunction {
 public:
  SurfaceFunction(const TubeGeometry& geom, const GridSpec& grid, std::vector<Complex> values)
      : geom_(geom), grid_(grid), values_(std::move(values)) {
    if (grid_.n_theta < 8 || grid_.n_z < 8)
      throw std::invalid_argument("SurfaceFunction grid must be at least 8 x 8");
    if (!(grid_.period > 0.0)) throw std::invalid_argument("grid period must be positive");
    if (values_.size() != static_cast<std::size_t>(grid_.n_theta * grid_.n_z))
      throw std::invalid_argument("value array does not match the grid");
    compute_coefficients();
  }

  SurfaceFunction(const TubeGeometry& geom, const GridSpec& grid,
                  const std::function<Complex(double, double)>& sampler)
      : SurfaceFunction(geom, grid, sample(grid, sampler)) {}

  const TubeGeometry& geometry() const { return geom_; }
  const GridSpec& grid() const { return grid_; }
  const std::vector<Complex>& values() const { return values_; }

  double theta_at(int a) const { return two_pi * a / grid_.n_theta; }
  double z_at(int b) const { return grid_.period * b / grid_.n_z; }
  Complex value(int a, int b) const { return values_[index(a, b)]; }

  /// Spectral interpolation at an arbitrary point of the quotient surface.
  Complex evaluate(double theta, double z) const {
    const int nt = grid_.n_theta, nz = grid_.n_z;
    Complex total = 0.0;
    for (int qi = 0; qi < nt; ++qi) {
      const int q = frequency(qi, nt);
      Complex row = 0.0;
      for (int pi = 0; pi < nz; ++pi) {
        const int p = frequency(pi, nz);
        row += coeffs_[index(qi, pi)] * std::polar(1.0, two_pi * p * z / grid_.period);
      }
      total += row * std::polar(1.0, q * (theta - grid_.twist * z / grid_.period));
    }
    return total;
  }

  /// Samples of f(T p) on this grid, i.e. the field pulled back through a
  /// screw move. Exact for fields resolved by the grid.
  SurfaceFunction transformed_resample(const RotTranslation& t) const {
    return synthesize(t.dtheta, t.dz, [](int, double) { return Complex(1.0, 0.0); });
  }

  /// Mixed spectral derivative d^{o_theta}/dtheta^{o_theta} d^{o_z}/dz^{o_z}.
  SurfaceFunction derivative(int order_theta, int order_z) const {
    return synthesize(0.0, 0.0, [order_theta, order_z](int q, double kz) {
      Complex f = 1.0;
      for (int i = 0; i < order_theta; ++i) f *= Complex(0.0, q);
      for (int i = 0; i < order_z; ++i) f *= Complex(0.0, kz);
      return f;
    });
  }

  double max_abs() const {
    double m = 0.0;
    for (const Complex& v : values_) m = std::max(m, std::abs(v));
    return m;
  }

 private:
  int index(int a, int b) const { return a * grid_.n_z + b; }

  static int frequency(int i, int n) { return i < (n + 1) / 2 ? i : i - n; }

  static std::vector<Complex> sample(const GridSpec& grid,
                                     const std::function<Complex(double, double)>& f) {
    std::vector<Complex> v(static_cast<std::size_t>(grid.n_theta * grid.n_z));
    for (int a = 0; a < grid.n_theta; ++a)
      for (int b = 0; b < grid.n_z; ++b)
        v[static_cast<std::size_t>(a * grid.n_z + b)] =
            f(two_pi * a / grid.n_theta, grid.period * b / grid.n_z);
    return v;
  }

  void compute_coefficients() {
    const int nt = grid_.n_theta, nz = grid_.n_z;
    const auto wt = detail::unit_roots(nt);
    const auto wz = detail::unit_roots(nz);
    std::vector<Complex> g(values_.size());
    // DFT over theta, one z-column at a time.
    for (int qi = 0; qi < nt; ++qi) {
      for (int b = 0; b < nz; ++b) {
        Complex acc = 0.0;
        for (int a = 0; a < nt; ++a)
          acc += values_[index(a, b)] * wt[detail::mod_index(1LL * qi * a, nt)];
        g[index(qi, b)] = acc / double(nt);
      }
    }
    // Align the twist so every row becomes plainly z-periodic, then DFT over z.
    coeffs_.assign(values_.size(), 0.0);
    for (int qi = 0; qi < nt; ++qi) {
      const int q = frequency(qi, nt);
      for (int pi = 0; pi < nz; ++pi) {
        Complex acc = 0.0;
        for (int b = 0; b < nz; ++b) {
          const Complex aligned =
              g[index(qi, b)] * std::polar(1.0, q * grid_.twist * z_at(b) / grid_.period);
          acc += aligned * wz[detail::mod_index(1LL * pi * b, nz)];
        }
        coeffs_[index(qi, pi)] = acc / double(nz);
      }
    }
  }

  /// Inverse transform evaluated on the grid shifted by (dtheta, dz), with a
  /// per-mode multiplier lambda(q, k_z). Cost O(n^2 (n_theta + n_z)).
  SurfaceFunction synthesize(double dtheta, double dz,
                             const std::function<Complex(int, double)>& mult) const {
    const int nt = grid_.n_theta, nz = grid_.n_z;
    std::vector<Complex> stage(values_.size());
    for (int qi = 0; qi < nt; ++qi) {
      const int q = frequency(qi, nt);
      std::vector<Complex> modified(static_cast<std::size_t>(nz));
      for (int pi = 0; pi < nz; ++pi) {
        const int p = frequency(pi, nz);
        const double kz = (two_pi * p - q * grid_.twist) / grid_.period;
        modified[static_cast<std::size_t>(pi)] =
            coeffs_[index(qi, pi)] * mult(q, kz) * std::polar(1.0, two_pi * p * dz / grid_.period);
      }
      for (int b = 0; b < nz; ++b) {
        Complex acc = 0.0;
        for (int pi = 0; pi < nz; ++pi) {
          const int p = frequency(pi, nz);
          acc += modified[static_cast<std::size_t>(pi)] *
                 std::polar(1.0, two_pi * p * z_at(b) / grid_.period);
        }
        stage[index(qi, b)] = acc;
      }
    }
    std::vector<Complex> out(values_.size());
    for (int b = 0; b < nz; ++b) {
      const double zshift = z_at(b) + dz;
      for (int a = 0; a < nt; ++a) {
        const double th = theta_at(a) + dtheta - grid_.twist * zshift / grid_.period;
        Complex acc = 0.0;
        for (int qi = 0; qi < nt; ++qi) {
          const int q = frequency(qi, nt);
          acc += stage[index(qi, b)] * std::polar(1.0, q * th);
        }
        out[index(a, b)] = acc;
      }
    }
    return SurfaceFunction(geom_, grid_, std::move(out));
  }

  TubeGeometry geom_;
  GridSpec grid_;
  std::vector<Complex> values_;
  std::vector<Complex> coeffs_;
};

}  // namespace swcnt
