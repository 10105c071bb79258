#pragma once

#include <cmath>
#include <vector>

namespace sldg {

// Dense polynomial in one variable, monomial coefficients, lowest power first.
// An empty coefficient list is the zero polynomial.
struct Poly {
  std::vector<double> c;

  Poly() = default;
  explicit Poly(std::vector<double> coeffs) : c(std::move(coeffs)) {}

  int degree() const {
    int d = int(c.size()) - 1;
    while (d > 0 && c[d] == 0.0) --d;
    return d < 0 ? 0 : d;
  }

  double operator()(double x) const {
    double acc = 0.0;
    for (size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
    return acc;
  }

  bool finite() const {
    for (double a : c)
      if (!std::isfinite(a)) return false;
    return true;
  }
};

}  // namespace sldg
