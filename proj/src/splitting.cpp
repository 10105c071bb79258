#include "sldg/splitting.hpp"

#include <cmath>
#include <cstring>
#include <numbers>
#include <stdexcept>
#include <string>

#include "sldg/legendre.hpp"
#include "sldg/parallel.hpp"

namespace sldg {

namespace {

constexpr double kPi = std::numbers::pi;

// Shift every v-row along x; delta_for_row(j) is the displacement polynomial
// in the row's transverse reference coordinate.
DGField shift_in_x(const DGField& f, const std::function<Poly(int)>& delta_for_row, Boundary bc,
                   const ShiftTable& table, int workers, double* lost_mass) {
  const GridSpec& g = f.grid;
  int nb = g.n_basis();
  int block = nb * nb;
  DGField out(g);
  std::vector<double> lost_by_row(g.n_v, 0.0);

  parallel_for(g.n_v, workers, [&](int j) {
    std::vector<double> line_in(size_t(g.n_x) * block), line_out(size_t(g.n_x) * block);
    for (int i = 0; i < g.n_x; ++i)
      std::memcpy(&line_in[size_t(i) * block], f.cell(i, j).data(), sizeof(double) * block);
    lost_by_row[j] = shift_line(line_in, line_out, g.n_x, delta_for_row(j), table, bc);
    for (int i = 0; i < g.n_x; ++i)
      std::memcpy(out.cell(i, j).data(), &line_out[size_t(i) * block], sizeof(double) * block);
  });

  if (lost_mass) {
    double sum = 0.0;
    for (double l : lost_by_row) sum += l;
    *lost_mass += sum * g.hx() * g.hv();
  }
  return out;
}

// Shift every x-column along v; the per-cell coefficient blocks are
// transposed so that the shifted direction comes first.
DGField shift_in_v(const DGField& f, const std::function<Poly(int)>& delta_for_col, Boundary bc,
                   const ShiftTable& table, int workers, double* lost_mass) {
  const GridSpec& g = f.grid;
  int nb = g.n_basis();
  int block = nb * nb;
  DGField out(g);
  std::vector<double> lost_by_col(g.n_x, 0.0);

  parallel_for(g.n_x, workers, [&](int i) {
    std::vector<double> line_in(size_t(g.n_v) * block), line_out(size_t(g.n_v) * block);
    for (int j = 0; j < g.n_v; ++j) {
      auto c = f.cell(i, j);
      double* dst = &line_in[size_t(j) * block];
      for (int k = 0; k < nb; ++k)
        for (int m = 0; m < nb; ++m) dst[m * nb + k] = c[k * nb + m];
    }
    lost_by_col[i] = shift_line(line_in, line_out, g.n_v, delta_for_col(i), table, bc);
    for (int j = 0; j < g.n_v; ++j) {
      auto c = out.cell(i, j);
      const double* src = &line_out[size_t(j) * block];
      for (int k = 0; k < nb; ++k)
        for (int m = 0; m < nb; ++m) c[k * nb + m] = src[m * nb + k];
    }
  });

  if (lost_mass) {
    double sum = 0.0;
    for (double l : lost_by_col) sum += l;
    *lost_mass += sum * g.hx() * g.hv();
  }
  return out;
}

}  // namespace

DGField step_a(const DGField& f, double dt, const StepContext& ctx, double* lost_mass) {
  if (!std::isfinite(dt)) throw std::invalid_argument("step_a: non-finite step size");
  const GridSpec& g = f.grid;
  double hx = g.hx(), hv = g.hv();

  if (ctx.dynamics == Dynamics::solid_rotation) {
    auto delta = [&](int j) {
      return Poly({-2.0 * kPi * dt * g.v_center(j) / hx, -2.0 * kPi * dt * 0.5 * hv / hx});
    };
    return shift_in_x(f, delta, Boundary::zero_inflow, ctx.table, ctx.workers, lost_mass);
  }
  // g(v) = v; for degree 0 the in-cell projection of v is the cell average.
  auto delta = [&](int j) {
    if (g.degree == 0) return Poly({dt * g.v_center(j) / hx});
    return Poly({dt * g.v_center(j) / hx, dt * 0.5 * hv / hx});
  };
  return shift_in_x(f, delta, Boundary::periodic, ctx.table, ctx.workers, lost_mass);
}

DGField step_b(const DGField& f, const PiecewisePoly1D& efield, double dt, const StepContext& ctx,
               double* lost_mass) {
  const GridSpec& g = f.grid;
  if (efield.n_cells != g.n_x || std::abs(efield.length - g.length) > 1e-12 * g.length)
    throw std::invalid_argument("step_b: field grid does not match");
  if (efield.degree > g.degree + 1)
    throw std::invalid_argument("step_b: field degree exceeds degree+1");

  // e^{tau B} translates in v by +tau E(x): the value at v comes from
  // v - tau E(x) along the characteristic of -E d_v.
  double hv = g.hv();
  auto delta = [&](int i) {
    Poly p = legendre_to_monomial(efield.cell(i));
    for (double& c : p.c) c *= dt / hv;
    return p;
  };
  return shift_in_v(f, delta, Boundary::zero_inflow, ctx.table, ctx.workers, lost_mass);
}

namespace {

DGField rotation_step_v(const DGField& f, double dt, const StepContext& ctx, double* lost_mass) {
  const GridSpec& g = f.grid;
  double hx = g.hx(), hv = g.hv();
  auto delta = [&](int i) {
    return Poly({2.0 * kPi * dt * g.x_center(i) / hv, 2.0 * kPi * dt * 0.5 * hx / hv});
  };
  return shift_in_v(f, delta, Boundary::zero_inflow, ctx.table, ctx.workers, lost_mass);
}

}  // namespace

StepperState strang_step(const StepperState& state, double tau, const StepContext& ctx) {
  if (!(tau > 0.0)) throw std::invalid_argument("strang_step: tau must be positive");
  StepperState next;
  next.time = state.time + tau;
  next.step_count = state.step_count + 1;
  next.lost_mass = state.lost_mass;

  double* lost = &next.lost_mass;
  DGField half = step_a(state.f, 0.5 * tau, ctx, lost);
  switch (ctx.dynamics) {
    case Dynamics::vlasov_poisson: {
      PiecewisePoly1D efield = electric_field(density(half));
      next.f = step_a(step_b(half, efield, tau, ctx, lost), 0.5 * tau, ctx, lost);
      break;
    }
    case Dynamics::free_streaming:
      // E is forced to zero: the acceleration step is the identity.
      next.f = step_a(half, 0.5 * tau, ctx, lost);
      break;
    case Dynamics::solid_rotation:
      next.f = step_a(rotation_step_v(half, tau, ctx, lost), 0.5 * tau, ctx, lost);
      break;
  }
  return next;
}

namespace {

TimeSeries::Record make_record(const StepperState& state, Dynamics dyn) {
  TimeSeries::Record r;
  r.time = state.time;
  r.mass = state.f.mass();
  r.l2_norm = norm(state.f, NormKind::L2);
  r.lost_mass = state.lost_mass;
  r.electric_energy =
      dyn == Dynamics::solid_rotation ? 0.0 : electric_energy(electric_field(density(state.f)));
  return r;
}

}  // namespace

RunResult run(const ProblemSpec& problem, const GridSpec& grid, double tau, double t_end,
              const RunOptions& opts) {
  grid.validate();
  if (!(tau > 0.0)) throw std::invalid_argument("run: tau must be positive");
  if (t_end < 0.0) throw std::invalid_argument("run: horizon must be >= 0");
  if (opts.record_every < 1) throw std::invalid_argument("run: record_every must be >= 1");
  if (std::abs(grid.length - problem.length) > 1e-12 * problem.length ||
      std::abs(grid.v_max - problem.v_max) > 1e-12 * problem.v_max ||
      std::abs(grid.x_min - problem.x_min) > 1e-12)
    throw std::invalid_argument("run: grid domain does not match the problem domain");

  StepContext ctx = StepContext::make(problem.dynamics, grid.degree, opts.workers);
  int nq = opts.init_quad_nodes > 0 ? opts.init_quad_nodes : grid.degree + 6;

  RunResult result;
  result.state.f = project(problem.f0, grid, nq, opts.workers);
  if (!result.state.f.finite()) throw numerical_error("run: non-finite initial projection");
  result.series.rows.push_back(make_record(result.state, problem.dynamics));

  // Full steps of size tau, then one shortened step to land on t_end exactly.
  double ratio = t_end / tau;
  long n_full = std::llround(ratio);
  double rem = 0.0;
  if (std::abs(ratio - double(n_full)) > 1e-9) {
    n_full = long(std::floor(ratio));
    rem = t_end - double(n_full) * tau;
    if (rem < 0.0) rem = 0.0;
  }

  long total = n_full + (rem > 0.0 ? 1 : 0);
  for (long k = 1; k <= total; ++k) {
    double dt = (k <= n_full) ? tau : rem;
    result.state = strang_step(result.state, dt, ctx);
    result.state.time = (k <= n_full) ? double(k) * tau : t_end;
    if (!result.state.f.finite())
      throw numerical_error("run: non-finite field values at step " + std::to_string(k));
    if (k % opts.record_every == 0 || k == total)
      result.series.rows.push_back(make_record(result.state, problem.dynamics));
  }
  return result;
}

}  // namespace sldg
