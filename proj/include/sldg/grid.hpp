#pragma once

#include <cmath>
#include <stdexcept>

namespace sldg {

// Uniform rectangular phase-space grid on [x_min, x_min+length] x [-v_max, v_max]
// with Legendre polynomials of degree <= degree per cell in each direction.
struct GridSpec {
  double length = 0.0;  // spatial period L
  double v_max = 0.0;
  int n_x = 0;
  int n_v = 0;
  int degree = 0;  // ell
  double x_min = 0.0;

  double hx() const { return length / n_x; }
  double hv() const { return 2.0 * v_max / n_v; }
  double x_left(int i) const { return x_min + i * hx(); }
  double v_left(int j) const { return -v_max + j * hv(); }
  double x_center(int i) const { return x_min + (i + 0.5) * hx(); }
  double v_center(int j) const { return -v_max + (j + 0.5) * hv(); }
  int n_basis() const { return degree + 1; }

  void validate() const {
    if (!(length > 0.0)) throw std::invalid_argument("grid: length must be positive");
    if (!(v_max > 0.0)) throw std::invalid_argument("grid: v_max must be positive");
    if (n_x < 1 || n_v < 1) throw std::invalid_argument("grid: cell counts must be >= 1");
    if (degree < 0 || degree > 12) throw std::invalid_argument("grid: unsupported degree");
  }

  bool same_domain(const GridSpec& o, double tol = 1e-12) const {
    auto close = [tol](double a, double b) { return std::abs(a - b) <= tol * (1.0 + std::abs(a)); };
    return close(length, o.length) && close(v_max, o.v_max) && close(x_min, o.x_min);
  }
};

}  // namespace sldg
