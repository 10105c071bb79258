#include "sldg/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "sldg/legendre.hpp"

namespace sldg {

namespace {

double lsq_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double xm = 0.0, ym = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    xm += x[i];
    ym += y[i];
  }
  xm /= double(x.size());
  ym /= double(x.size());
  double num = 0.0, den = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    num += (x[i] - xm) * (y[i] - ym);
    den += (x[i] - xm) * (x[i] - xm);
  }
  return num / den;
}

}  // namespace

double l2_error_vs_reference(const DGField& f, const DGField& ref) {
  const GridSpec& gc = f.grid;
  const GridSpec& gf = ref.grid;
  if (!gc.same_domain(gf)) throw std::invalid_argument("l2_error: domains differ");
  if (gf.n_x % gc.n_x != 0 || gf.n_v % gc.n_v != 0 || gf.degree < gc.degree)
    throw std::invalid_argument("l2_error: reference grid must refine the field grid");

  int nq = std::max(gf.degree, gc.degree) + 2;
  const QuadratureRule& rule = gauss_rule(nq);
  double hx = gf.hx(), hv = gf.hv();
  double acc = 0.0;
  for (int i = 0; i < gf.n_x; ++i) {
    double xl = gf.x_left(i);
    for (int j = 0; j < gf.n_v; ++j) {
      double vl = gf.v_left(j);
      for (int q = 0; q < nq; ++q) {
        double x = xl + 0.5 * hx * (rule.nodes[q] + 1.0);
        for (int r = 0; r < nq; ++r) {
          double v = vl + 0.5 * hv * (rule.nodes[r] + 1.0);
          double d = f.evaluate(x, v) - ref.evaluate(x, v);
          acc += rule.weights[q] * rule.weights[r] * d * d;
        }
      }
    }
  }
  return std::sqrt(acc * hx * hv * 0.25);
}

double l2_error_vs_function(const DGField& f, const std::function<double(double, double)>& g,
                            int quad_nodes) {
  const GridSpec& grid = f.grid;
  const QuadratureRule& rule = gauss_rule(quad_nodes);
  double hx = grid.hx(), hv = grid.hv();
  double acc = 0.0;
  for (int i = 0; i < grid.n_x; ++i)
    for (int j = 0; j < grid.n_v; ++j)
      for (int q = 0; q < rule.size(); ++q)
        for (int r = 0; r < rule.size(); ++r) {
          double x = grid.x_left(i) + 0.5 * hx * (rule.nodes[q] + 1.0);
          double v = grid.v_left(j) + 0.5 * hv * (rule.nodes[r] + 1.0);
          double d = f.evaluate(x, v) - g(x, v);
          acc += rule.weights[q] * rule.weights[r] * d * d;
        }
  return std::sqrt(acc * hx * hv * 0.25);
}

namespace {

std::vector<size_t> local_maxima(const TimeSeries& s, double t0, double t1) {
  std::vector<size_t> idx;
  const auto& r = s.rows;
  for (size_t k = 1; k + 1 < r.size(); ++k) {
    if (r[k].time < t0 || r[k].time > t1) continue;
    if (r[k - 1].electric_energy < r[k].electric_energy &&
        r[k].electric_energy >= r[k + 1].electric_energy)
      idx.push_back(k);
  }
  return idx;
}

}  // namespace

double fit_decay_rate(const TimeSeries& series, double t0, double t1) {
  if (t1 <= t0) throw std::invalid_argument("fit_decay_rate: empty window");
  double emin = std::numeric_limits<double>::infinity(), emax = 0.0;
  for (const auto& r : series.rows)
    if (r.time >= t0 && r.time <= t1) {
      if (!(r.electric_energy > 0.0))
        throw std::invalid_argument("fit_decay_rate: non-positive energy in the window");
      emin = std::min(emin, r.electric_energy);
      emax = std::max(emax, r.electric_energy);
    }
  if (emax - emin <= 1e-12 * emax) return 0.0;  // constant trace

  std::vector<size_t> peaks = local_maxima(series, t0, t1);
  if (peaks.size() < 3)
    throw std::invalid_argument("fit_decay_rate: fewer than 3 local maxima in the window");
  std::vector<double> t, loge;
  for (size_t k : peaks) {
    t.push_back(series.rows[k].time);
    loge.push_back(std::log(series.rows[k].electric_energy));
  }
  return -0.5 * lsq_slope(t, loge);
}

namespace {

// Time of the sampled local maximum at index k, refined by the three-point
// parabola through the neighbouring samples.
double refine_peak_time(const TimeSeries& s, size_t k) {
  if (k == 0 || k + 1 >= s.rows.size()) return s.rows[k].time;
  double em = s.rows[k - 1].electric_energy;
  double e0 = s.rows[k].electric_energy;
  double ep = s.rows[k + 1].electric_energy;
  double den = em - 2.0 * e0 + ep;
  if (!(den < 0.0)) return s.rows[k].time;
  double shift = 0.5 * (em - ep) / den;
  double dt = 0.5 * (s.rows[k + 1].time - s.rows[k - 1].time);
  return s.rows[k].time + shift * dt;
}

}  // namespace

std::optional<double> detect_recurrence(const TimeSeries& series) {
  const auto& r = series.rows;
  if (r.size() < 3) return std::nullopt;
  // The trace decays from its initial maximum; locate that maximum first.
  size_t init = 0;
  if (!(r[0].electric_energy >= r[1].electric_energy)) {
    for (size_t k = 1; k + 1 < r.size(); ++k)
      if (r[k - 1].electric_energy < r[k].electric_energy &&
          r[k].electric_energy >= r[k + 1].electric_energy) {
        init = k;
        break;
      }
  }
  double threshold = 0.1 * r[init].electric_energy;
  for (size_t k = std::max<size_t>(init + 1, 1); k + 1 < r.size(); ++k) {
    if (r[k - 1].electric_energy < r[k].electric_energy &&
        r[k].electric_energy >= r[k + 1].electric_energy && r[k].electric_energy > threshold)
      return refine_peak_time(series, k) - refine_peak_time(series, init);
  }
  return std::nullopt;
}

std::vector<ConvergenceReport> convergence_study(const ProblemSpec& problem,
                                                 const std::vector<int>& degrees,
                                                 const std::vector<int>& resolutions, double tau,
                                                 double t_end, int reference_resolution,
                                                 int reference_degree, const RunOptions& opts) {
  if (degrees.empty()) throw std::invalid_argument("convergence_study: no degrees");
  if (resolutions.empty()) throw std::invalid_argument("convergence_study: no resolutions");
  for (size_t i = 1; i < resolutions.size(); ++i)
    if (resolutions[i] <= resolutions[i - 1])
      throw std::invalid_argument("convergence_study: resolutions must be strictly increasing");
  if (reference_resolution < 2 * resolutions.back())
    throw std::invalid_argument("convergence_study: reference must be at least twice the largest "
                                "tested resolution");
  for (int n : resolutions)
    if (reference_resolution % n != 0)
      throw std::invalid_argument("convergence_study: reference resolution must be a multiple of "
                                  "every tested resolution");

  GridSpec ref_grid{problem.length, problem.v_max, reference_resolution, reference_resolution,
                    reference_degree, problem.x_min};
  DGField ref = run(problem, ref_grid, tau, t_end, opts).state.f;

  std::vector<ConvergenceReport> reports;
  for (int degree : degrees) {
    ConvergenceReport report;
    for (int n : resolutions) {
      GridSpec g{problem.length, problem.v_max, n, n, degree, problem.x_min};
      DGField f = run(problem, g, tau, t_end, opts).state.f;
      double err = l2_error_vs_reference(f, ref);
      ConvergenceReport::Row row;
      row.resolution = n;
      row.h = problem.length / n;
      row.error = err;
      row.observed_order = std::numeric_limits<double>::quiet_NaN();
      if (!report.rows.empty()) {
        const auto& prev = report.rows.back();
        row.observed_order = std::log(prev.error / err) / std::log(prev.h / row.h);
      }
      report.rows.push_back(row);
    }
    std::vector<double> lh, le;
    for (const auto& row : report.rows) {
      lh.push_back(std::log(row.h));
      le.push_back(std::log(row.error));
    }
    report.slope = lsq_slope(lh, le);
    reports.push_back(std::move(report));
  }
  return reports;
}

ConvergenceReport convergence_study(const ProblemSpec& problem, int degree,
                                    const std::vector<int>& resolutions, double tau, double t_end,
                                    int reference_resolution, int reference_degree,
                                    const RunOptions& opts) {
  return convergence_study(problem, std::vector<int>{degree}, resolutions, tau, t_end,
                           reference_resolution, reference_degree, opts)
      .front();
}

ConvergenceReport tau_convergence_study(const ProblemSpec& problem, const GridSpec& grid,
                                        const std::vector<double>& taus, double tau_ref,
                                        double t_end, const RunOptions& opts) {
  if (taus.empty()) throw std::invalid_argument("tau_convergence_study: no step sizes");
  for (double t : taus)
    if (!(t > 0.0)) throw std::invalid_argument("tau_convergence_study: step sizes must be positive");
  double tmin = *std::min_element(taus.begin(), taus.end());
  if (!(tau_ref > 0.0) || tau_ref > 0.5 * tmin)
    throw std::invalid_argument("tau_convergence_study: reference step must be at most half the "
                                "smallest tested step");

  DGField ref = run(problem, grid, tau_ref, t_end, opts).state.f;
  ConvergenceReport report;
  for (double tau : taus) {
    DGField f = run(problem, grid, tau, t_end, opts).state.f;
    double err = l2_error_vs_reference(f, ref);
    ConvergenceReport::Row row;
    row.resolution = t_end / tau;
    row.h = tau;
    row.error = err;
    row.observed_order = std::numeric_limits<double>::quiet_NaN();
    if (!report.rows.empty()) {
      const auto& prev = report.rows.back();
      row.observed_order = std::log(prev.error / err) / std::log(prev.h / tau);
    }
    report.rows.push_back(row);
  }
  std::vector<double> lh, le;
  for (const auto& row : report.rows) {
    lh.push_back(std::log(row.h));
    le.push_back(std::log(row.error));
  }
  report.slope = lsq_slope(lh, le);
  return report;
}

void write_csv(const TimeSeries& series, std::ostream& os) {
  os.precision(17);
  os << "time,electric_energy,mass,l2_norm,lost_mass\n";
  for (const auto& r : series.rows)
    os << r.time << ',' << r.electric_energy << ',' << r.mass << ',' << r.l2_norm << ','
       << r.lost_mass << '\n';
}

void write_csv(const ConvergenceReport& report, std::ostream& os) {
  os.precision(17);
  os << "resolution,h,error,observed_order\n";
  for (const auto& r : report.rows)
    os << r.resolution << ',' << r.h << ',' << r.error << ',' << r.observed_order << '\n';
}

}  // namespace sldg
