#pragma once

#include <span>
#include <vector>

#include "sldg/poly.hpp"

namespace sldg {

// Gauss--Legendre quadrature rule on [-1,1]. A rule with n nodes integrates
// polynomials of degree <= 2n-1 exactly; the weights sum to 2.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int size() const { return int(nodes.size()); }
};

// Legendre polynomial p_l(xi) with the standard normalization
// int_{-1}^{1} p_l p_j = 2/(2l+1) delta_lj.
double legendre_eval(int l, double xi);

// Fills out[0..l] with p_0(xi) .. p_l(xi); out.size() must be l+1.
void legendre_eval_all(int l, double xi, std::span<double> out);

// p_l mapped to the cell [cell_left, cell_left + cell_width].
double scaled_legendre_eval(int l, double x, double cell_left, double cell_width);

// Nodes by Newton iteration with Chebyshev initial guesses; cached per n.
const QuadratureRule& gauss_rule(int n);

// p_l as monomial coefficients (exact dyadic rationals); cached per l.
const Poly& legendre_monomial(int l);

// Converts a Legendre expansion sum_k coeffs[k] p_k into monomial form.
Poly legendre_to_monomial(std::span<const double> coeffs);

}  // namespace sldg
