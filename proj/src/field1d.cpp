#include "sldg/field1d.hpp"

#include <cmath>
#include <stdexcept>

#include "sldg/legendre.hpp"

namespace sldg {

double PiecewisePoly1D::eval_ref(int i, double xi) const {
  auto c = cell(i);
  double pb[16];
  legendre_eval_all(degree, xi, {pb, size_t(n_basis())});
  double sum = 0.0;
  for (int k = 0; k < n_basis(); ++k) sum += c[k] * pb[k];
  return sum;
}

double PiecewisePoly1D::eval(double x) const {
  int i = int(std::floor((x - x_min) / h()));
  if (i == n_cells && x <= x_min + length) i = n_cells - 1;
  if (i < 0 || i >= n_cells) throw std::domain_error("PiecewisePoly1D: point outside the domain");
  return eval_ref(i, 2.0 * (x - cell_left(i)) / h() - 1.0);
}

double PiecewisePoly1D::integral() const {
  double sum = 0.0;
  for (int i = 0; i < n_cells; ++i) sum += cell(i)[0];
  return sum * h();
}

PiecewisePoly1D project_1d(const std::function<double(double)>& g, double x_min, double length,
                           int n_cells, int degree, int quad_nodes) {
  if (quad_nodes < degree + 1)
    throw std::invalid_argument("project_1d: need at least degree+1 quadrature nodes");
  const QuadratureRule& rule = gauss_rule(quad_nodes);
  PiecewisePoly1D p(x_min, length, n_cells, degree);
  double hh = p.h();
  std::vector<double> basis(size_t(rule.size()) * (degree + 1));
  for (int q = 0; q < rule.size(); ++q)
    legendre_eval_all(degree, rule.nodes[q], {&basis[size_t(q) * (degree + 1)], size_t(degree + 1)});
  for (int i = 0; i < n_cells; ++i) {
    auto c = p.cell(i);
    for (int q = 0; q < rule.size(); ++q) {
      double x = p.cell_left(i) + 0.5 * hh * (rule.nodes[q] + 1.0);
      double val = g(x);
      if (!std::isfinite(val)) throw std::domain_error("project_1d: non-finite sample");
      for (int k = 0; k <= degree; ++k)
        c[k] += 0.5 * (2 * k + 1) * rule.weights[q] * basis[size_t(q) * (degree + 1) + k] * val;
    }
  }
  return p;
}

PiecewisePoly1D density(const DGField& f) {
  const GridSpec& g = f.grid;
  int nb = g.n_basis();
  PiecewisePoly1D rho(g.x_min, g.length, g.n_x, g.degree);
  double hv = g.hv();
  for (int i = 0; i < g.n_x; ++i) {
    auto c = rho.cell(i);
    for (int j = 0; j < g.n_v; ++j) {
      auto b = f.cell(i, j);
      // Only the m=0 basis functions have a nonzero v-integral.
      for (int k = 0; k < nb; ++k) c[k] += hv * b[k * nb + 0];
    }
  }
  return rho;
}

PiecewisePoly1D electric_field(const PiecewisePoly1D& rho) {
  int n = rho.n_cells;
  double hh = rho.h();
  double L = rho.length;

  // Neutrality: int (rho - 1) over the period must vanish. The tolerance
  // admits the flux through the velocity cutoff (a coarse piecewise-constant
  // strong-Landau run leaks ~1e-4 of mass by T=1 at v_max = 6) while still
  // catching undersized domains and non-neutral initial data.
  double excess = rho.integral() - L;
  if (std::abs(excess) > 1e-4 * L)
    throw numerical_error("electric_field: density is not neutral (mass lost at the velocity "
                          "boundary or bad initial condition)");

  PiecewisePoly1D e(rho.x_min, L, n, rho.degree + 1);
  int nbr = rho.n_basis();

  // Per-cell antiderivative of rho - 1 in the Legendre basis, using
  // int_{-1}^{xi} p_k = (p_{k+1} - p_{k-1})/(2k+1) for k >= 1 and
  // int_{-1}^{xi} p_0 = p_1 + p_0.
  double chain = 0.0;  // value of E at the left edge of the current cell
  for (int i = 0; i < n; ++i) {
    auto src = rho.cell(i);
    auto dst = e.cell(i);
    double c0 = src[0] - 1.0;
    dst[0] = chain + 0.5 * hh * c0;
    dst[1] = 0.5 * hh * c0;
    for (int k = 1; k < nbr; ++k) {
      double ck = src[k];
      dst[k + 1] += 0.5 * hh * ck / (2 * k + 1);
      dst[k - 1] -= 0.5 * hh * ck / (2 * k + 1);
    }
    chain += hh * c0;  // increment of the antiderivative across this cell
  }

  double m = e.mean();
  for (int i = 0; i < n; ++i) e.cell(i)[0] -= m;
  return e;
}

double electric_energy(const PiecewisePoly1D& e) {
  double sum = 0.0;
  for (int i = 0; i < e.n_cells; ++i) {
    auto c = e.cell(i);
    for (int k = 0; k < e.n_basis(); ++k) sum += c[k] * c[k] / double(2 * k + 1);
  }
  return sum * e.h();
}

}  // namespace sldg
