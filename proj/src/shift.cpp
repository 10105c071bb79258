#include "sldg/shift.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "sldg/legendre.hpp"

namespace sldg {

namespace {

// Polynomial in u whose coefficients are polynomials in the shift d.
struct BiPoly {
  std::vector<RatPoly> u;  // u[r] is the coefficient of u^r

  static BiPoly from_u_poly(const RatPoly& p) {
    BiPoly b;
    b.u.reserve(p.degree() + 1);
    for (int r = 0; r <= p.degree(); ++r) b.u.push_back(RatPoly::constant(p.coeff(r)));
    return b;
  }

  // p(u + s) for a polynomial p in one variable and s a RatPoly in d.
  static BiPoly from_shifted_argument(const RatPoly& p, const RatPoly& s) {
    BiPoly arg;  // u + s
    arg.u = {s, RatPoly::constant(Rational(1))};
    BiPoly acc;
    for (int k = p.degree(); k >= 0; --k) {
      acc = acc * arg;
      acc.add_constant(p.coeff(k));
    }
    return acc;
  }

  void add_constant(const Rational& r) {
    if (u.empty()) u.emplace_back();
    u[0] = u[0] + RatPoly::constant(r);
  }

  BiPoly operator*(const BiPoly& o) const {
    BiPoly r;
    if (u.empty() || o.u.empty()) return r;
    r.u.assign(u.size() + o.u.size() - 1, RatPoly());
    for (size_t i = 0; i < u.size(); ++i)
      for (size_t j = 0; j < o.u.size(); ++j) r.u[i + j] = r.u[i + j] + u[i] * o.u[j];
    return r;
  }

  BiPoly antiderivative_u() const {
    BiPoly r;
    r.u.assign(u.size() + 1, RatPoly());
    for (size_t k = 0; k < u.size(); ++k) r.u[k + 1] = u[k].scaled(Rational(1, 1 + (long long)k));
    return r;
  }

  // Substitute u = e(d); the result is a polynomial in d.
  RatPoly eval_at(const RatPoly& e) const {
    RatPoly acc;
    for (size_t k = u.size(); k-- > 0;) acc = acc * e + u[k];
    return acc;
  }
};

}  // namespace

ShiftTable build_shift_table(int degree) {
  if (degree < 0) throw std::invalid_argument("build_shift_table: degree must be >= 0");
  ShiftTable t;
  t.degree = degree;
  int nb = degree + 1;
  t.same_exact.resize(size_t(nb) * nb);
  t.neighbor_exact.resize(size_t(nb) * nb);
  t.same.resize(size_t(nb) * nb);
  t.neighbor.resize(size_t(nb) * nb);

  const Rational half(1, 2);
  const RatPoly two_d({Rational(0), Rational(2)});                 // 2d
  const RatPoly one_minus_2d({Rational(1), Rational(-2)});         // 1 - 2d
  const RatPoly two_d_minus_one({Rational(-1), Rational(2)});      // 2d - 1
  const RatPoly two_minus_2d({Rational(2), Rational(-2)});         // 2 - 2d
  const RatPoly minus_one = RatPoly::constant(Rational(-1));

  std::vector<RatPoly> p(nb);
  for (int l = 0; l < nb; ++l) p[l] = legendre_ratpoly(l);

  for (int l = 0; l < nb; ++l) {
    for (int m = 0; m < nb; ++m) {
      // same:     (1/2) int_{-1}^{1-2d} p_l(u + 2d)   p_m(u) du
      // neighbor: (1/2) int_{-1}^{2d-1} p_l(u) p_m(u + 2 - 2d) du
      BiPoly fs = BiPoly::from_shifted_argument(p[l], two_d) * BiPoly::from_u_poly(p[m]);
      BiPoly Fs = fs.antiderivative_u();
      RatPoly same = (Fs.eval_at(one_minus_2d) - Fs.eval_at(minus_one)).scaled(half);

      BiPoly fn = BiPoly::from_u_poly(p[l]) * BiPoly::from_shifted_argument(p[m], two_minus_2d);
      BiPoly Fn = fn.antiderivative_u();
      RatPoly neigh = (Fn.eval_at(two_d_minus_one) - Fn.eval_at(minus_one)).scaled(half);

      assert(same.degree() <= 2 * degree + 1 && neigh.degree() <= 2 * degree + 1);
      t.same_exact[size_t(l) * nb + m] = same;
      t.neighbor_exact[size_t(l) * nb + m] = neigh;
      t.same[size_t(l) * nb + m] = Poly(same.to_doubles());
      t.neighbor[size_t(l) * nb + m] = Poly(neigh.to_doubles());
    }
  }
  return t;
}

void dump_shift_table(const ShiftTable& t, std::ostream& os) {
  os << "shift table, degree " << t.degree << ", fractional shift d in [0,1)\n";
  int nb = t.n_basis();
  for (int l = 0; l < nb; ++l)
    for (int m = 0; m < nb; ++m)
      os << "same[" << l << "][" << m << "] = " << t.same_exact[size_t(l) * nb + m].str("d")
         << '\n';
  for (int l = 0; l < nb; ++l)
    for (int m = 0; m < nb; ++m)
      os << "neighbor[" << l << "][" << m << "] = "
         << t.neighbor_exact[size_t(l) * nb + m].str("d") << '\n';
}

namespace {

// Integer-cell relabeling for exactly integral constant shifts; keeps the
// identity and pure re-indexing bit-exact.
double shift_integer(std::span<const double> in, std::span<double> out, int n_cells,
                     long long offset, int block, Boundary bc) {
  double lost = 0.0;
  for (int c = 0; c < n_cells; ++c) {
    long long s = c - offset;
    if (bc == Boundary::periodic) {
      s %= n_cells;
      if (s < 0) s += n_cells;
    } else if (s < 0 || s >= n_cells) {
      for (int k = 0; k < block; ++k) out[size_t(c) * block + k] = 0.0;
      continue;
    }
    for (int k = 0; k < block; ++k) out[size_t(c) * block + k] = in[size_t(s) * block + k];
  }
  if (bc == Boundary::zero_inflow) {
    for (int s = 0; s < n_cells; ++s) {
      long long c = s + offset;
      if (c < 0 || c >= n_cells) lost += in[size_t(s) * block];
    }
  }
  return lost;
}

// Breakpoints in [-1,1] where floor(delta(xi)) changes, by scan + bisection.
std::vector<double> floor_crossings(const Poly& delta) {
  std::vector<double> cuts;
  constexpr int kScan = 1024;
  double prev_xi = -1.0;
  double prev_val = delta(prev_xi);
  for (int s = 1; s <= kScan; ++s) {
    double xi = -1.0 + 2.0 * s / kScan;
    double val = delta(xi);
    double flo = std::floor(std::min(prev_val, val));
    double fhi = std::floor(std::max(prev_val, val));
    for (double k = flo + 1.0; k <= fhi; k += 1.0) {
      double a = prev_xi, b = xi;
      double fa = delta(a) - k;
      if (fa == 0.0) {
        cuts.push_back(a);
        continue;
      }
      for (int it = 0; it < 80 && b - a > 1e-14; ++it) {
        double m = 0.5 * (a + b);
        double fm = delta(m) - k;
        if (fm == 0.0) {
          a = b = m;
          break;
        }
        if ((fa < 0.0) == (fm < 0.0)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      cuts.push_back(0.5 * (a + b));
    }
    prev_xi = xi;
    prev_val = val;
  }
  std::sort(cuts.begin(), cuts.end());
  return cuts;
}

}  // namespace

double shift_line(std::span<const double> in, std::span<double> out, int n_cells,
                  const Poly& delta, const ShiftTable& table, Boundary boundary) {
  int nb = table.n_basis();
  int block = nb * nb;
  assert(int(in.size()) == n_cells * block && int(out.size()) == n_cells * block);
  if (!delta.finite()) throw std::domain_error("shift_line: non-finite shift");

  int deg_delta = delta.degree();
  bool constant = true;
  for (size_t k = 1; k < delta.c.size(); ++k) constant = constant && delta.c[k] == 0.0;
  double d0 = delta.c.empty() ? 0.0 : delta.c[0];

  double dmax = 0.0;
  for (int s = 0; s <= 64; ++s) dmax = std::max(dmax, std::abs(delta(-1.0 + s / 32.0)));
  if (dmax > 1e6) throw std::domain_error("shift_line: shift magnitude out of range");

  if (constant && std::floor(d0) == d0)
    return shift_integer(in, out, n_cells, (long long)d0, block, boundary);

  // Exactness degree of the transverse integrand: p_j p_n is of degree 2*ell,
  // H composed with delta of degree (2*ell+1)*deg(delta).
  int ell = table.degree;
  int d = 2 * ell + (2 * ell + 1) * (constant ? 0 : deg_delta);
  const QuadratureRule& rule = gauss_rule(d / 2 + 1);

  std::vector<double> breaks;
  breaks.push_back(-1.0);
  if (!constant)
    for (double c : floor_crossings(delta)) breaks.push_back(c);
  breaks.push_back(1.0);

  std::fill(out.begin(), out.end(), 0.0);
  double lost = 0.0;

  std::vector<double> S(block), G(block), pb(nb), T(block);
  for (size_t seg = 0; seg + 1 < breaks.size(); ++seg) {
    double a = breaks[seg], b = breaks[seg + 1];
    if (!(b - a > 0.0)) continue;
    double n0d = std::floor(delta(0.5 * (a + b)));
    long long n0 = (long long)n0d;

    for (int q = 0; q < rule.size(); ++q) {
      double xi = a + 0.5 * (b - a) * (rule.nodes[q] + 1.0);
      double w = 0.5 * (b - a) * rule.weights[q];
      double frac = delta(xi) - n0d;
      for (int l = 0; l < nb; ++l)
        for (int m = 0; m < nb; ++m) {
          S[l * nb + m] = table.same_poly(l, m)(frac);
          G[l * nb + m] = table.neighbor_poly(l, m)(frac);
        }
      legendre_eval_all(ell, xi, pb);

      long long c_lo = 0, c_hi = n_cells;
      if (boundary == Boundary::zero_inflow) {
        c_lo = std::min<long long>(0, n0);
        c_hi = std::max<long long>(n_cells, n_cells + n0 + 1);
      }
      for (long long c = c_lo; c < c_hi; ++c) {
        long long s1 = c - n0, s2 = c - n0 - 1;
        if (boundary == Boundary::periodic) {
          s1 = ((s1 % n_cells) + n_cells) % n_cells;
          s2 = ((s2 % n_cells) + n_cells) % n_cells;
        }
        const double* b1 =
            (s1 >= 0 && s1 < n_cells) ? in.data() + size_t(s1) * block : nullptr;
        const double* b2 =
            (s2 >= 0 && s2 < n_cells) ? in.data() + size_t(s2) * block : nullptr;
        if (!b1 && !b2) continue;

        bool virtual_cell = (c < 0 || c >= n_cells);
        int lmax = virtual_cell ? 1 : nb;
        for (int l = 0; l < lmax; ++l)
          for (int n = 0; n < nb; ++n) {
            double acc = 0.0;
            if (b1)
              for (int m = 0; m < nb; ++m) acc += S[l * nb + m] * b1[m * nb + n];
            if (b2)
              for (int m = 0; m < nb; ++m) acc += G[l * nb + m] * b2[m * nb + n];
            T[l * nb + n] = acc;
          }

        if (virtual_cell) {
          double u0 = 0.0;
          for (int n = 0; n < nb; ++n) u0 += T[n] * pb[n];
          lost += 0.5 * w * u0;
          continue;
        }
        double* o = out.data() + size_t(c) * block;
        for (int l = 0; l < nb; ++l) {
          double u = 0.0;
          for (int n = 0; n < nb; ++n) u += T[l * nb + n] * pb[n];
          double fl = 0.5 * w * (2 * l + 1) * u;
          for (int j = 0; j < nb; ++j) o[l * nb + j] += fl * (2 * j + 1) * pb[j];
        }
      }
    }
  }
  return lost;
}

}  // namespace sldg
