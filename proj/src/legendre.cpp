#include "sldg/legendre.hpp"

#include <cassert>
#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

#include "sldg/rational.hpp"

namespace sldg {

double legendre_eval(int l, double xi) {
  assert(l >= 0);
  if (l == 0) return 1.0;
  double pm1 = 1.0, p = xi;
  for (int n = 1; n < l; ++n) {
    double next = ((2 * n + 1) * xi * p - n * pm1) / (n + 1);
    pm1 = p;
    p = next;
  }
  return p;
}

void legendre_eval_all(int l, double xi, std::span<double> out) {
  assert(int(out.size()) == l + 1);
  out[0] = 1.0;
  if (l == 0) return;
  out[1] = xi;
  for (int n = 1; n < l; ++n) out[n + 1] = ((2 * n + 1) * xi * out[n] - n * out[n - 1]) / (n + 1);
}

double scaled_legendre_eval(int l, double x, double cell_left, double cell_width) {
  return legendre_eval(l, 2.0 * (x - cell_left) / cell_width - 1.0);
}

namespace {

QuadratureRule make_gauss_rule(int n) {
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Chebyshev guess for the i-th root (descending), then Newton on p_n.
    double x = std::cos(std::numbers::pi * (4.0 * i + 3.0) / (4.0 * n + 2.0));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p = legendre_eval(n, x);
      double pm1 = legendre_eval(n - 1, x);
      dp = n * (pm1 - x * p) / (1.0 - x * x);
      double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    // One clean-up step so the weight uses a consistent derivative.
    {
      double p = legendre_eval(n, x);
      double pm1 = legendre_eval(n - 1, x);
      dp = n * (pm1 - x * p) / (1.0 - x * x);
      x -= p / dp;
      p = legendre_eval(n, x);
      pm1 = legendre_eval(n - 1, x);
      dp = n * (pm1 - x * p) / (1.0 - x * x);
    }
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[n - 1 - i] = x;
    rule.weights[n - 1 - i] = w;
    rule.nodes[i] = -x;
    rule.weights[i] = w;
  }
  if (n % 2 == 1) {
    // Middle node is exactly 0 by symmetry.
    double dp = n * legendre_eval(n - 1, 0.0);
    rule.nodes[n / 2] = 0.0;
    rule.weights[n / 2] = 2.0 / (dp * dp);
  }
  return rule;
}

}  // namespace

const QuadratureRule& gauss_rule(int n) {
  if (n < 1) throw std::invalid_argument("gauss_rule: node count must be >= 1");
  static std::mutex mtx;
  static std::unordered_map<int, QuadratureRule> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_gauss_rule(n)).first;
  return it->second;
}

const Poly& legendre_monomial(int l) {
  static std::mutex mtx;
  static std::vector<Poly> cache;
  std::lock_guard<std::mutex> lock(mtx);
  while (int(cache.size()) <= l) cache.emplace_back(legendre_ratpoly(int(cache.size())).to_doubles());
  return cache[l];
}

Poly legendre_to_monomial(std::span<const double> coeffs) {
  Poly r;
  r.c.assign(coeffs.size(), 0.0);
  for (size_t k = 0; k < coeffs.size(); ++k) {
    const Poly& pk = legendre_monomial(int(k));
    for (size_t a = 0; a < pk.c.size(); ++a) r.c[a] += coeffs[k] * pk.c[a];
  }
  if (r.c.empty()) r.c.push_back(0.0);
  return r;
}

}  // namespace sldg
