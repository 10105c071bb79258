#include "sldg/dg_field.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "sldg/legendre.hpp"
#include "sldg/parallel.hpp"

namespace sldg {

namespace {

int locate_cell(double s, double lo, double h, int n) {
  int c = int(std::floor((s - lo) / h));
  if (c == n && s <= lo + n * h) c = n - 1;  // right domain edge belongs to the last cell
  if (c < 0 || c >= n) throw std::domain_error("evaluate: point outside the domain");
  return c;
}

}  // namespace

double DGField::evaluate(double x, double v) const {
  double hx = grid.hx(), hv = grid.hv();
  int i = locate_cell(x, grid.x_min, hx, grid.n_x);
  int j = locate_cell(v, -grid.v_max, hv, grid.n_v);
  int nb = grid.n_basis();
  double xi = 2.0 * (x - grid.x_left(i)) / hx - 1.0;
  double eta = 2.0 * (v - grid.v_left(j)) / hv - 1.0;
  double px[16], pv[16];
  legendre_eval_all(grid.degree, xi, {px, size_t(nb)});
  legendre_eval_all(grid.degree, eta, {pv, size_t(nb)});
  auto c = cell(i, j);
  double sum = 0.0;
  for (int k = 0; k < nb; ++k) {
    double row = 0.0;
    for (int m = 0; m < nb; ++m) row += c[k * nb + m] * pv[m];
    sum += px[k] * row;
  }
  return sum;
}

double DGField::mass() const {
  double sum = 0.0;
  for (int i = 0; i < grid.n_x; ++i)
    for (int j = 0; j < grid.n_v; ++j) sum += coeffs[index(i, j, 0, 0)];
  return grid.hx() * grid.hv() * sum;
}

bool DGField::finite() const {
  double s = 0.0;
  for (double c : coeffs) s += c * c;
  return std::isfinite(s);
}

DGField project(const std::function<double(double, double)>& g, const GridSpec& grid,
                int quad_nodes_per_dim, int workers) {
  grid.validate();
  if (quad_nodes_per_dim < grid.degree + 1)
    throw std::invalid_argument("project: need at least degree+1 quadrature nodes per direction");
  const QuadratureRule& rule = gauss_rule(quad_nodes_per_dim);
  int nq = rule.size();
  int nb = grid.n_basis();
  double hx = grid.hx(), hv = grid.hv();

  // Basis values at the quadrature nodes, shared by all cells.
  std::vector<double> basis(size_t(nq) * nb);
  for (int q = 0; q < nq; ++q)
    legendre_eval_all(grid.degree, rule.nodes[q], {&basis[size_t(q) * nb], size_t(nb)});

  DGField f(grid);
  parallel_for(grid.n_x, workers, [&](int i) {
    std::vector<double> samples(size_t(nq) * nq);
    for (int j = 0; j < grid.n_v; ++j) {
      double xl = grid.x_left(i), vl = grid.v_left(j);
      for (int q = 0; q < nq; ++q) {
        double x = xl + 0.5 * hx * (rule.nodes[q] + 1.0);
        for (int r = 0; r < nq; ++r) {
          double v = vl + 0.5 * hv * (rule.nodes[r] + 1.0);
          double val = g(x, v);
          if (!std::isfinite(val)) throw std::domain_error("project: non-finite sample");
          samples[size_t(q) * nq + r] = val;
        }
      }
      auto c = f.cell(i, j);
      for (int k = 0; k < nb; ++k) {
        for (int m = 0; m < nb; ++m) {
          double acc = 0.0;
          for (int q = 0; q < nq; ++q) {
            double inner = 0.0;
            for (int r = 0; r < nq; ++r)
              inner += rule.weights[r] * basis[size_t(r) * nb + m] * samples[size_t(q) * nq + r];
            acc += rule.weights[q] * basis[size_t(q) * nb + k] * inner;
          }
          // b_km = (2k+1)(2m+1)/(hx hv) * int P_k P_m g, with the cell measure
          // hx*hv/4 absorbed from the reference-square quadrature.
          c[k * nb + m] = acc * (2 * k + 1) * (2 * m + 1) * 0.25;
        }
      }
    }
  });
  return f;
}

double norm(const DGField& f, NormKind which) {
  const GridSpec& grid = f.grid;
  int nb = grid.n_basis();
  double hx = grid.hx(), hv = grid.hv();
  if (which == NormKind::L2) {
    double sum = 0.0;
    for (int i = 0; i < grid.n_x; ++i)
      for (int j = 0; j < grid.n_v; ++j) {
        auto c = f.cell(i, j);
        for (int k = 0; k < nb; ++k)
          for (int m = 0; m < nb; ++m)
            sum += c[k * nb + m] * c[k * nb + m] / double((2 * k + 1) * (2 * m + 1));
      }
    return std::sqrt(sum * hx * hv);
  }

  int nq = std::max(grid.degree + 2, 4);
  const QuadratureRule& rule = gauss_rule(nq);
  std::vector<double> basis(size_t(nq) * nb);
  for (int q = 0; q < nq; ++q)
    legendre_eval_all(grid.degree, rule.nodes[q], {&basis[size_t(q) * nb], size_t(nb)});

  double acc = 0.0;
  for (int i = 0; i < grid.n_x; ++i)
    for (int j = 0; j < grid.n_v; ++j) {
      auto c = f.cell(i, j);
      for (int q = 0; q < nq; ++q)
        for (int r = 0; r < nq; ++r) {
          double val = 0.0;
          for (int k = 0; k < nb; ++k) {
            double row = 0.0;
            for (int m = 0; m < nb; ++m) row += c[k * nb + m] * basis[size_t(r) * nb + m];
            val += basis[size_t(q) * nb + k] * row;
          }
          if (which == NormKind::Linf)
            acc = std::max(acc, std::abs(val));
          else
            acc += rule.weights[q] * rule.weights[r] * std::abs(val);
        }
    }
  if (which == NormKind::Linf) return acc;
  return acc * hx * hv * 0.25;
}

void dump_field(const DGField& f, std::ostream& os) {
  os.precision(17);
  os << "sldg-field 1\n";
  os << f.grid.x_min << ' ' << f.grid.length << ' ' << f.grid.v_max << ' ' << f.grid.n_x << ' '
     << f.grid.n_v << ' ' << f.grid.degree << '\n';
  for (double c : f.coeffs) os << c << '\n';
}

DGField load_field(std::istream& is) {
  std::string tag;
  int version = 0;
  is >> tag >> version;
  if (tag != "sldg-field" || version != 1)
    throw std::runtime_error("load_field: not a field dump (bad header)");
  GridSpec g;
  is >> g.x_min >> g.length >> g.v_max >> g.n_x >> g.n_v >> g.degree;
  if (!is) throw std::runtime_error("load_field: truncated header");
  DGField f(g);
  for (double& c : f.coeffs) {
    if (!(is >> c)) throw std::runtime_error("load_field: truncated coefficient data");
  }
  return f;
}

}  // namespace sldg
