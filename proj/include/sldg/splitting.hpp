#pragma once

#include "sldg/dg_field.hpp"
#include "sldg/field1d.hpp"
#include "sldg/problems.hpp"
#include "sldg/shift.hpp"
#include "sldg/time_series.hpp"

namespace sldg {

// Shared per-run machinery: the shift table for the grid degree, the dynamics
// of the problem, and the worker count for the row/column loops.
struct StepContext {
  Dynamics dynamics = Dynamics::vlasov_poisson;
  ShiftTable table;
  int workers = 1;

  static StepContext make(Dynamics dyn, int degree, int workers = 1) {
    return {dyn, build_shift_table(degree), workers};
  }
};

struct StepperState {
  DGField f;
  double time = 0.0;
  long step_count = 0;
  double lost_mass = 0.0;
};

// Half/full advection step in x: every v-row is shifted by dt * g(v) with
// g(v) = v (for degree 0 the cell-average velocity), periodic in x. For the
// solid-rotation dynamics the row speed is g(y) = -2 pi y with a zero-inflow
// boundary. Mass leaving the domain is added to *lost_mass if given.
DGField step_a(const DGField& f, double dt, const StepContext& ctx, double* lost_mass = nullptr);

// Acceleration step: every x-column is shifted in v by dt * E(x) (the flow of
// -E d_v), zero-inflow boundary in v.
DGField step_b(const DGField& f, const PiecewisePoly1D& efield, double dt, const StepContext& ctx,
               double* lost_mass = nullptr);

// One Strang step: x half step, field solve at the half step, v full step,
// x half step. The half-step result doubles as f_{k+1/2} for the field.
StepperState strang_step(const StepperState& state, double tau, const StepContext& ctx);

struct RunOptions {
  int record_every = 1;
  int workers = 1;
  int init_quad_nodes = 0;  // 0: degree + 6
};

struct RunResult {
  TimeSeries series;
  StepperState state;
};

// Projects the initial condition and advances to t_end with step tau (the
// last step is shortened to hit the horizon exactly). Diagnostics are
// recorded at step 0, every record_every-th step, and at the end. Throws
// numerical_error when the field stops being finite.
RunResult run(const ProblemSpec& problem, const GridSpec& grid, double tau, double t_end,
              const RunOptions& opts = {});

}  // namespace sldg
