#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include "sldg/splitting.hpp"

namespace sldg {

struct ConvergenceReport {
  struct Row {
    double resolution;      // cell count (space study) or step count scale
    double h;               // cell size, or tau for time studies
    double error;
    double observed_order;  // per-interval order; NaN on the first row
  };
  std::vector<Row> rows;
  double slope = 0.0;  // least-squares slope of log(error) against log(h)
};

// L2 norm of f - ref on the union quadrature grid (the reference cells with
// (max degree + 2)^2 Gauss points each). The reference grid must contain the
// grid of f: same domain, cell counts integer multiples, degree at least as
// high.
double l2_error_vs_reference(const DGField& f, const DGField& ref);

// L2 norm of f - g by per-cell quadrature with quad_nodes points per
// direction.
double l2_error_vs_function(const DGField& f, const std::function<double(double, double)>& g,
                            int quad_nodes);

// Decay rate gamma from the successive local maxima of the electric energy in
// [t0, t1]: least-squares slope of log(energy), returned as -slope/2. Throws
// if the window holds fewer than three maxima.
double fit_decay_rate(const TimeSeries& series, double t0, double t1);

// Time gap between the initial energy maximum and the first later local
// maximum exceeding 10% of it, if any. Interior maxima are located to
// sub-sample accuracy with a three-point parabolic fit.
std::optional<double> detect_recurrence(const TimeSeries& series);

// Runs the problem at every (degree, resolution) pair with N_x = N_v = N and
// measures the L2 error against a single reference run at
// reference_resolution/reference_degree with the same tau; one report per
// degree. With t_end = 0 this reduces to a pure projection study.
std::vector<ConvergenceReport> convergence_study(const ProblemSpec& problem,
                                                 const std::vector<int>& degrees,
                                                 const std::vector<int>& resolutions, double tau,
                                                 double t_end, int reference_resolution,
                                                 int reference_degree,
                                                 const RunOptions& opts = {});

ConvergenceReport convergence_study(const ProblemSpec& problem, int degree,
                                    const std::vector<int>& resolutions, double tau, double t_end,
                                    int reference_resolution, int reference_degree,
                                    const RunOptions& opts = {});

// Self-convergence in the time step on a fixed grid: errors of the runs at
// taus against the run at tau_ref.
ConvergenceReport tau_convergence_study(const ProblemSpec& problem, const GridSpec& grid,
                                        const std::vector<double>& taus, double tau_ref,
                                        double t_end, const RunOptions& opts = {});

void write_csv(const TimeSeries& series, std::ostream& os);
void write_csv(const ConvergenceReport& report, std::ostream& os);

}  // namespace sldg
