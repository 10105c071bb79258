#include "sldg/problems.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sldg {

namespace {
constexpr double kPi = std::numbers::pi;
}

ProblemSpec landau(double alpha) {
  if (alpha < 0.0) throw std::invalid_argument("landau: alpha must be >= 0");
  ProblemSpec p;
  p.name = alpha == 0.5 ? "landau_strong" : (alpha == 0.01 ? "landau_weak" : "landau");
  p.f0 = [alpha](double x, double v) {
    return std::exp(-0.5 * v * v) / std::sqrt(2.0 * kPi) * (1.0 + alpha * std::cos(0.5 * x));
  };
  p.x_min = 0.0;
  p.length = 4.0 * kPi;
  p.v_max = 6.0;
  p.dynamics = Dynamics::vlasov_poisson;
  if (alpha == 0.01) p.decay_rate = 0.1533;
  return p;
}

ProblemSpec advection_recurrence() {
  ProblemSpec p = landau(0.01);
  p.name = "advection";
  p.dynamics = Dynamics::free_streaming;
  p.decay_rate.reset();
  p.exact_electric_energy = [](double t) { return kPi / 1250.0 * std::exp(-0.25 * t * t); };
  return p;
}

ProblemSpec molenkamp_crowley() {
  ProblemSpec p;
  p.name = "molenkamp";
  p.f0 = [](double x, double y) {
    double r = std::sqrt((x + 0.5) * (x + 0.5) + y * y);
    if (r > 0.25) return 0.0;
    double c = std::cos(2.0 * kPi * r);
    return c * c;
  };
  p.x_min = -1.0;
  p.length = 2.0;
  p.v_max = 1.0;
  p.dynamics = Dynamics::solid_rotation;
  return p;
}

ProblemSpec problem_by_name(const std::string& name) {
  if (name == "landau" || name == "landau_weak") return landau(0.01);
  if (name == "landau_strong") return landau(0.5);
  if (name == "advection") return advection_recurrence();
  if (name == "molenkamp" || name == "cone") return molenkamp_crowley();
  throw std::invalid_argument("unknown problem: " + name);
}

}  // namespace sldg
