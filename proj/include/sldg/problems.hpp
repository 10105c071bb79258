#pragma once

#include <functional>
#include <optional>
#include <string>

namespace sldg {

enum class Dynamics { vlasov_poisson, free_streaming, solid_rotation };

// A test problem: initial condition, canonical domain, dynamics, and optional
// closed-form reference diagnostics.
struct ProblemSpec {
  std::string name;
  std::function<double(double, double)> f0;
  double x_min = 0.0;
  double length = 0.0;
  double v_max = 0.0;
  Dynamics dynamics = Dynamics::vlasov_poisson;
  std::optional<double> decay_rate;                       // gamma, weak Landau
  std::function<double(double)> exact_electric_energy;    // may be empty
};

// f0(x,v) = (1/sqrt(2 pi)) exp(-v^2/2) (1 + alpha cos(0.5 x)) on
// [0,4pi] x [-6,6]; alpha = 0.01 is the weak case, alpha = 0.5 the strong one.
ProblemSpec landau(double alpha);

// Same initial value as weak Landau but free streaming (the electric field is
// forced to zero in the stepper and only computed as a diagnostic). Carries
// the exact energy (pi/1250) exp(-t^2/4).
ProblemSpec advection_recurrence();

// Rotating cone: f0 = cos^2(2 pi r) for r <= 1/4 with r^2 = (x+1/2)^2 + y^2,
// rigidly rotated with period 1 on [-1,1]^2 (y plays the role of v).
ProblemSpec molenkamp_crowley();

ProblemSpec problem_by_name(const std::string& name);

}  // namespace sldg
