#pragma once

#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "sldg/grid.hpp"

namespace sldg {

// Piecewise-Legendre representation of a phase-space density. Coefficients are
// stored cell-major: (i,j) outer, (k,m) inner, with k the x-degree and m the
// v-degree. The restriction to cell (i,j) is
//   f(x,v) = sum_{k,m} coeff(i,j,k,m) P_k(x) P_m(v)
// in the scaled Legendre basis of that cell.
struct DGField {
  GridSpec grid;
  std::vector<double> coeffs;

  DGField() = default;
  explicit DGField(const GridSpec& g)
      : grid(g), coeffs(size_t(g.n_x) * g.n_v * g.n_basis() * g.n_basis(), 0.0) {
    grid.validate();
  }

  size_t index(int i, int j, int k, int m) const {
    int nb = grid.n_basis();
    return ((size_t(i) * grid.n_v + j) * nb + k) * nb + m;
  }
  double& coeff(int i, int j, int k, int m) { return coeffs[index(i, j, k, m)]; }
  double coeff(int i, int j, int k, int m) const { return coeffs[index(i, j, k, m)]; }
  std::span<double> cell(int i, int j) {
    int nb = grid.n_basis();
    return {coeffs.data() + index(i, j, 0, 0), size_t(nb) * nb};
  }
  std::span<const double> cell(int i, int j) const {
    int nb = grid.n_basis();
    return {coeffs.data() + index(i, j, 0, 0), size_t(nb) * nb};
  }

  // Point evaluation; cells own their left/bottom boundary, the last cell is
  // closed. Throws std::domain_error outside the domain.
  double evaluate(double x, double v) const;

  double mass() const;
  bool finite() const;
};

enum class NormKind { L1, L2, Linf };

// Orthogonal projection of g onto the DG space by per-cell tensor-product
// Gauss quadrature with quad_nodes_per_dim nodes per direction. Cells are
// independent, so the work parallelizes over rows; the result does not
// depend on the worker count.
DGField project(const std::function<double(double, double)>& g, const GridSpec& grid,
                int quad_nodes_per_dim, int workers = 1);

// L2 exactly from the coefficients; L1/Linf sampled on a per-cell tensor grid
// with max(degree+2, 4) points per direction.
double norm(const DGField& f, NormKind which);

// Plain-text dump: header with the grid, then one coefficient per line in
// storage order, 17 significant digits.
void dump_field(const DGField& f, std::ostream& os);
DGField load_field(std::istream& is);

}  // namespace sldg
