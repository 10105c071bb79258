#pragma once

#include <functional>
#include <span>
#include <vector>

#include "sldg/dg_field.hpp"

namespace sldg {

// One-dimensional piecewise polynomial in the per-cell scaled Legendre basis,
// used for the charge density and the electric field.
struct PiecewisePoly1D {
  double x_min = 0.0;
  double length = 0.0;
  int n_cells = 0;
  int degree = 0;
  std::vector<double> coeffs;  // n_cells * (degree+1), cell-major

  PiecewisePoly1D() = default;
  PiecewisePoly1D(double x_min_, double length_, int n, int deg)
      : x_min(x_min_), length(length_), n_cells(n), degree(deg),
        coeffs(size_t(n) * (deg + 1), 0.0) {}

  double h() const { return length / n_cells; }
  int n_basis() const { return degree + 1; }
  double cell_left(int i) const { return x_min + i * h(); }
  std::span<double> cell(int i) { return {coeffs.data() + size_t(i) * n_basis(), size_t(n_basis())}; }
  std::span<const double> cell(int i) const {
    return {coeffs.data() + size_t(i) * n_basis(), size_t(n_basis())};
  }

  double eval(double x) const;
  double eval_ref(int i, double xi) const;  // at reference coordinate xi in [-1,1]
  double integral() const;                  // int over [x_min, x_min+length]
  double mean() const { return integral() / length; }
};

// L2 projection of a scalar function onto the piecewise basis.
PiecewisePoly1D project_1d(const std::function<double(double)>& g, double x_min, double length,
                           int n_cells, int degree, int quad_nodes);

// Charge density rho(x) = int f dv; degree equals the field degree.
PiecewisePoly1D density(const DGField& f);

// Electric field with E' = rho - 1 (exact per-cell antidifferentiation,
// constants chained across cells for continuity, overall constant fixed by a
// zero mean over the period). Throws numerical_error if the neutrality
// condition |int (rho - 1)| <= 1e-4 * L is violated.
PiecewisePoly1D electric_field(const PiecewisePoly1D& rho);

// int E^2 dx, exact from the Legendre coefficients.
double electric_energy(const PiecewisePoly1D& e);

// Signals a numerical failure of a run (NaN field, broken neutrality).
struct numerical_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace sldg
