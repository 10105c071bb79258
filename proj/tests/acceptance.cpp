// Acceptance suite: runs every benchmark at its pinned tolerance and prints
// one pass/fail line per criterion. Exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "sldg/diagnostics.hpp"
#include "support/oracles.hpp"

using namespace sldg;

namespace {

constexpr double kPi = std::numbers::pi;

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail,
            double seconds) {
  std::printf("%s  criterion %d (%s): %s  [%.1fs]\n", pass ? "PASS" : "FAIL", id, name.c_str(),
              detail.c_str(), seconds);
  std::fflush(stdout);
  if (!pass) ++failures;
}

template <typename F>
void criterion(int id, const std::string& name, F&& body) {
  auto t0 = std::chrono::steady_clock::now();
  bool pass = false;
  std::string detail;
  try {
    auto [p, d] = body();
    pass = p;
    detail = d;
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(id, name, pass, detail, secs);
}

RunOptions opts(int record_every = 1) {
  RunOptions o;
  o.record_every = record_every;
  unsigned hw = std::thread::hardware_concurrency();
  o.workers = hw > 0 ? int(hw) : 1;
  return o;
}

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list args;
  va_start(args, f);
  std::vsnprintf(buf, sizeof(buf), f, args);
  va_end(args);
  return buf;
}

// 1. Spatial convergence order on strong Landau damping.
std::pair<bool, std::string> spatial_order() {
  ProblemSpec p = landau(0.5);
  std::vector<ConvergenceReport> reps =
      convergence_study(p, {0, 1, 2}, {16, 32, 64}, 0.1, 1.0, 256, 2, opts(1 << 20));
  bool pass = true;
  std::string detail;
  for (int ell = 0; ell <= 2; ++ell) {
    double slope = reps[ell].slope;
    bool ok = std::abs(slope - (ell + 1.0)) <= 0.35;
    pass = pass && ok;
    detail += fmt("order(degree %d) = %.2f (want %d +- 0.35)  ", ell, slope, ell + 1);
  }
  return {pass, detail};
}

// 2. Temporal self-convergence order on weak Landau damping.
std::pair<bool, std::string> temporal_order() {
  ProblemSpec p = landau(0.01);
  GridSpec grid{p.length, p.v_max, 64, 64, 2, p.x_min};
  ConvergenceReport rep = tau_convergence_study(p, grid, {0.4, 0.2, 0.1}, 0.025, 1.0, opts(1 << 20));
  bool pass = std::abs(rep.slope - 2.0) <= 0.3;
  return {pass, fmt("order = %.2f (want 2.0 +- 0.3)", rep.slope)};
}

// 3. Free-streaming electric-energy law.
std::pair<bool, std::string> energy_law() {
  ProblemSpec p = advection_recurrence();
  GridSpec grid{p.length, p.v_max, 64, 64, 2, p.x_min};
  RunResult r = run(p, grid, 0.05, 8.0, opts());
  double worst = 0.0, at = 0.0;
  for (const auto& row : r.series.rows) {
    double exact = p.exact_electric_energy(row.time);
    double rel = std::abs(row.electric_energy - exact) / exact;
    if (rel > worst) {
      worst = rel;
      at = row.time;
    }
  }
  return {worst < 0.05, fmt("max relative energy error %.3g at t = %.2f (want < 0.05)", worst, at)};
}

// 4. Recurrence period of the piecewise-constant velocity approximation.
std::pair<bool, std::string> recurrence_period() {
  ProblemSpec p = advection_recurrence();
  GridSpec grid{p.length, p.v_max, 32, 33, 0, p.x_min};
  double hv = grid.hv();
  double expect = 4.0 * kPi / hv;
  double tau = 0.05;
  RunResult r = run(p, grid, tau, 2.2 * expect, opts());
  auto period = detect_recurrence(r.series);
  if (!period) return {false, "no recurrence detected"};
  bool pass = std::abs(*period - expect) <= tau;
  return {pass, fmt("period = %.4f (want %.4f +- %.2f)", *period, expect, tau)};
}

// 5. Weak Landau damping rate.
std::pair<bool, std::string> landau_decay() {
  ProblemSpec p = landau(0.01);
  GridSpec grid{p.length, p.v_max, 128, 128, 2, p.x_min};
  RunResult r = run(p, grid, 0.2, 60.0, opts());
  double gamma = fit_decay_rate(r.series, 2.0, 25.0);
  bool pass = gamma >= 0.138 && gamma <= 0.169;
  return {pass, fmt("gamma = %.4f (want 0.1533 +- 10%%)", gamma)};
}

// 6. Molenkamp--Crowley stability and one-revolution accuracy. The default
// runs 10 revolutions; --long extends the stability run to the full 60.
bool long_mode = false;

std::pair<bool, std::string> rotation_stability() {
  ProblemSpec p = molenkamp_crowley();
  GridSpec grid{p.length, p.v_max, 40, 40, 2, p.x_min};
  RunResult r = run(p, grid, 0.02, long_mode ? 60.0 : 10.0, opts());
  double n0 = r.series.rows.front().l2_norm;
  double worst = 0.0;
  for (const auto& row : r.series.rows) {
    if (!std::isfinite(row.l2_norm)) return {false, "non-finite norm"};
    worst = std::max(worst, row.l2_norm / n0);
  }
  bool stable = worst <= 1.05;

  // One revolution returns to the initial cone; the error decays with N.
  // The spatial order is measured at tau = 0.005, below the splitting-error
  // floor of the coarser grids.
  std::vector<double> errs;
  for (int n : {20, 40}) {
    GridSpec g{p.length, p.v_max, n, n, 2, p.x_min};
    RunResult one = run(p, g, 0.005, 1.0, opts(1 << 20));
    errs.push_back(l2_error_vs_function(one.state.f, p.f0, 6));
  }
  double order = std::log2(errs[0] / errs[1]);
  bool converges = order >= 2.0;
  return {stable && converges,
          fmt("max norm ratio %.4f (want <= 1.05), one-revolution order %.2f (want >= 2)", worst,
              order)};
}

// 7. Property suites at their pinned tolerances.
std::pair<bool, std::string> properties() {
  std::string detail;
  bool pass = true;

  {  // Mass conservation on periodic runs.
    double worst = 0.0;
    for (auto [prob, n, ell, tau, T] :
         {std::tuple{landau(0.5), 32, 2, 0.1, 2.0}, std::tuple{advection_recurrence(), 24, 1, 0.1, 4.0}}) {
      GridSpec grid{prob.length, prob.v_max, n, n, ell, prob.x_min};
      RunResult r = run(prob, grid, tau, T, opts());
      double m0 = r.series.rows.front().mass;
      for (const auto& row : r.series.rows)
        worst = std::max(worst, std::abs(row.mass - m0 + row.lost_mass) / m0);
    }
    bool ok = worst <= 1e-10;
    pass = pass && ok;
    detail += fmt("mass drift %.2g (<=1e-10)  ", worst);
  }

  {  // shift_line against the dense-sampling oracle.
    std::mt19937_64 rng(777);
    double worst = 0.0;
    struct Case {
      int ell;
      Poly delta;
      bool periodic;
    };
    for (const Case& cs :
         {Case{2, Poly({0.25, 1.7}), true}, Case{2, Poly({0.1, -0.3, 1.2, 0.5}), true},
          Case{1, Poly({-1.2, 0.7}), false}}) {
      ShiftTable t = build_shift_table(cs.ell);
      int nb = cs.ell + 1;
      auto line = oracles::random_line(rng, 7, nb, 1.0);
      std::vector<double> out(line.size());
      shift_line(line, out, 7, cs.delta, t,
                 cs.periodic ? Boundary::periodic : Boundary::zero_inflow);
      auto expect = oracles::shift_line_oracle(line, 7, nb, cs.delta, cs.periodic);
      for (size_t i = 0; i < out.size(); ++i)
        worst = std::max(worst, std::abs(out[i] - expect[i]));
    }
    bool ok = worst <= 1e-10;
    pass = pass && ok;
    detail += fmt("shift vs oracle %.2g (<=1e-10)  ", worst);
  }

  {  // Antiderivative field against the kernel quadrature.
    std::mt19937_64 rng(778);
    std::uniform_real_distribution<double> u(-0.5, 0.5), ux(0.0, 4.0 * kPi);
    PiecewisePoly1D rho(0.0, 4.0 * kPi, 14, 2);
    for (double& c : rho.coeffs) c = u(rng);
    double excess = rho.integral() - rho.length;
    for (int i = 0; i < rho.n_cells; ++i) rho.cell(i)[0] -= excess / rho.length;
    PiecewisePoly1D e = electric_field(rho);
    double worst = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
      double x = ux(rng);
      worst = std::max(worst, std::abs(e.eval(x) - oracles::kernel_field_oracle(rho, x)));
    }
    bool ok = worst <= 1e-10;
    pass = pass && ok;
    detail += fmt("field vs kernel %.2g (<=1e-10)  ", worst);
  }

  {  // Quadrature exactness against the rational oracle.
    std::mt19937_64 rng(779);
    std::uniform_int_distribution<int> num(-30, 30);
    double worst = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
      int d = int(rng() % 16);
      std::vector<Rational> coeffs(d + 1);
      for (auto& c : coeffs) c = Rational(num(rng), 1 + (long long)(rng() % 5));
      double exact = oracles::rational_integral(coeffs).to_double();
      const QuadratureRule& rule = gauss_rule(d / 2 + 1);
      double acc = 0.0;
      for (int q = 0; q < rule.size(); ++q) {
        double x = rule.nodes[q], val = 0.0;
        for (size_t k = coeffs.size(); k-- > 0;) val = val * x + coeffs[k].to_double();
        acc += rule.weights[q] * val;
      }
      worst = std::max(worst, std::abs(acc - exact) / std::max(1.0, std::abs(exact)));
    }
    bool ok = worst <= 1e-13;
    pass = pass && ok;
    detail += fmt("quadrature %.2g (<=1e-13)  ", worst);
  }

  {  // Projection error orders, smooth and small-jump.
    auto fit = [](const std::vector<double>& h, const std::vector<double>& e) {
      double xm = 0, ym = 0;
      for (size_t i = 0; i < h.size(); ++i) xm += std::log(h[i]), ym += std::log(e[i]);
      xm /= double(h.size());
      ym /= double(h.size());
      double nu = 0, de = 0;
      for (size_t i = 0; i < h.size(); ++i) {
        nu += (std::log(h[i]) - xm) * (std::log(e[i]) - ym);
        de += (std::log(h[i]) - xm) * (std::log(h[i]) - xm);
      }
      return nu / de;
    };
    auto smooth = [](double x, double v) { return std::exp(-(v - 0.5) * (v - 0.5)) * std::cos(x); };
    bool ok = true;
    std::string part;
    for (int ell : {0, 1, 2}) {
      std::vector<double> hs, errs;
      for (int n : {8, 16, 32, 64}) {
        GridSpec grid{2.0 * kPi, 3.0, n, n, ell};
        DGField f = project(smooth, grid, ell + 5);
        double worst = 0.0;
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            for (double a : {-0.95, -0.3, 0.4, 0.9})
              for (double b : {-0.9, 0.0, 0.8}) {
                double x = grid.x_left(i) + 0.5 * grid.hx() * (a + 1.0);
                double v = grid.v_left(j) + 0.5 * grid.hv() * (b + 1.0);
                worst = std::max(worst, std::abs(f.evaluate(x, v) - smooth(x, v)));
              }
        hs.push_back(grid.hx());
        errs.push_back(worst);
      }
      double slope = fit(hs, errs);
      ok = ok && std::abs(slope - (ell + 1.0)) <= 0.3;
      part += fmt("smooth l=%d: %.2f  ", ell, slope);
    }
    for (int ell : {1, 2}) {
      std::vector<double> hs, errs;
      for (int n : {8, 16, 32, 64}) {
        double h = 1.0 / n;
        int jump_cell = int(0.4 * n);
        double x0 = (jump_cell + 0.37) * h;
        auto g = [ell, h, x0](double x, double) {
          double base = 1.0 + 2.0 * x;
          if (x < x0) return base;
          double jump = 0.0, fact = 1.0, pw = 1.0;
          for (int k = 0; k <= ell; ++k) {
            jump += 0.8 * std::pow(h, ell - k + 1) * pw / fact;
            pw *= (x - x0);
            fact *= (k + 1);
          }
          return base + jump;
        };
        GridSpec grid{1.0, 1.0, n, 1, ell};
        DGField f = project(g, grid, 12);
        double worst = 0.0;
        for (int s = 0; s <= 400; ++s) {
          double x = std::min(std::max((jump_cell + s / 400.0) * h, 1e-12), 1.0 - 1e-12);
          worst = std::max(worst, std::abs(f.evaluate(x, 0.0) - g(x, 0.0)));
        }
        hs.push_back(h);
        errs.push_back(worst);
      }
      double slope = fit(hs, errs);
      ok = ok && std::abs(slope - (ell + 1.0)) <= 0.3;
      part += fmt("jump l=%d: %.2f  ", ell, slope);
    }
    pass = pass && ok;
    detail += fmt("projection orders [%s](+-0.3)", part.c_str());
  }

  return {pass, detail};
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) == "--long") long_mode = true;
  std::printf("acceptance suite%s\n", long_mode ? " (60-revolution rotation)" : "");
  criterion(1, "spatial order, strong Landau", spatial_order);
  criterion(2, "temporal order, weak Landau", temporal_order);
  criterion(3, "free-streaming energy law", energy_law);
  criterion(4, "recurrence period", recurrence_period);
  criterion(5, "Landau decay rate", landau_decay);
  criterion(6, "Molenkamp-Crowley stability", rotation_stability);
  criterion(7, "property suites", properties);
  std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "OK" : "FAILED", failures);
  return failures;
}
