#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "sldg/poly.hpp"
#include "sldg/rational.hpp"

namespace sldg {

// Overlap integrals of a Legendre basis function against a translated one,
// as exact polynomials in the fractional shift d in [0,1):
//
//   same[l][m](d)     = (1/h) int_{dh}^{h} P_l(x) P_m(x - dh) dx
//   neighbor[l][m](d) = (1/h) int_{0}^{dh} P_l(x) P_m(x - dh + h) dx
//
// where P_l is the scaled Legendre basis of a cell of width h; the result is
// independent of h. The first index is the target degree, the second the
// source degree. A translated cell overlaps exactly two target cells, so
// these two tables carry the whole translate-then-project update.
struct ShiftTable {
  int degree = 0;
  std::vector<RatPoly> same_exact;      // (degree+1)^2, row-major (l,m)
  std::vector<RatPoly> neighbor_exact;
  std::vector<Poly> same;               // double versions used at runtime
  std::vector<Poly> neighbor;

  int n_basis() const { return degree + 1; }
  const Poly& same_poly(int l, int m) const { return same[l * n_basis() + m]; }
  const Poly& neighbor_poly(int l, int m) const { return neighbor[l * n_basis() + m]; }
};

// Builds the table by exact rational polynomial algebra.
ShiftTable build_shift_table(int degree);

// Writes the exact table polynomials in a plain-text form, one per line.
void dump_shift_table(const ShiftTable& table, std::ostream& os);

enum class Boundary { periodic, zero_inflow };

// Translate-then-project update of one line of cells.
//
// in/out hold n_cells blocks of (degree+1)^2 coefficients; within a block the
// first index is the degree along the shifted direction, the second the
// degree along the transverse direction. delta is the total displacement in
// units of the cell width, as a polynomial in the transverse reference
// coordinate xi in [-1,1]. The transverse integral is split at every point
// where floor(delta) changes and evaluated by Gauss quadrature of exact
// order, so the update is exact up to rounding.
//
// Returns the summed cell-average (0,0) coefficient transported past the ends
// of the line (zero for the periodic boundary); multiply by the cell measure
// to obtain the lost mass.
double shift_line(std::span<const double> in, std::span<double> out, int n_cells,
                  const Poly& delta, const ShiftTable& table, Boundary boundary);

}  // namespace sldg
