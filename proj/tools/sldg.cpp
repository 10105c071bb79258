#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "sldg/diagnostics.hpp"
#include "sldg/shift.hpp"

namespace {

struct CommonOpts {
  std::string problem = "landau_weak";
  double alpha = -1.0;  // <0: use the problem's canonical value
  int nx = 64;
  int nv = 64;
  int degree = 2;
  double tau = 0.1;
  double tmax = 1.0;
  int record_every = 1;
  std::string out_dir = ".";
  std::string reference;
  std::string dynamics;
  int workers = 0;  // 0: hardware concurrency
};

sldg::ProblemSpec make_problem(const CommonOpts& o) {
  sldg::ProblemSpec p =
      o.alpha >= 0.0 ? sldg::landau(o.alpha) : sldg::problem_by_name(o.problem);
  if (o.alpha >= 0.0 && o.problem != "landau" && o.problem != "landau_weak" &&
      o.problem != "landau_strong")
    throw CLI::ValidationError("--alpha only applies to the landau problem");
  if (!o.dynamics.empty()) {
    if (o.dynamics == "vlasov_poisson")
      p.dynamics = sldg::Dynamics::vlasov_poisson;
    else if (o.dynamics == "free_streaming")
      p.dynamics = sldg::Dynamics::free_streaming;
    else if (o.dynamics == "solid_rotation")
      p.dynamics = sldg::Dynamics::solid_rotation;
    else
      throw CLI::ValidationError("unknown dynamics: " + o.dynamics);
  }
  return p;
}

sldg::GridSpec make_grid(const sldg::ProblemSpec& p, const CommonOpts& o) {
  sldg::GridSpec g{p.length, p.v_max, o.nx, o.nv, o.degree, p.x_min};
  g.validate();
  return g;
}

int resolved_workers(int w) {
  if (w > 0) return w;
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? int(hw) : 1;
}

int cmd_run(const CommonOpts& o) {
  sldg::ProblemSpec p = make_problem(o);
  sldg::GridSpec g = make_grid(p, o);
  sldg::RunOptions ro;
  ro.record_every = o.record_every;
  ro.workers = resolved_workers(o.workers);

  sldg::RunResult r = sldg::run(p, g, o.tau, o.tmax, ro);

  std::filesystem::create_directories(o.out_dir);
  {
    std::ofstream csv(o.out_dir + "/diagnostics.csv");
    if (!csv) throw CLI::ValidationError("cannot write to " + o.out_dir);
    sldg::write_csv(r.series, csv);
  }
  {
    std::ofstream fd(o.out_dir + "/field_final.txt");
    sldg::dump_field(r.state.f, fd);
  }

  const auto& first = r.series.rows.front();
  const auto& last = r.series.rows.back();
  std::cout.precision(12);
  std::cout << "problem " << p.name << "  grid " << g.n_x << "x" << g.n_v << "  degree "
            << g.degree << "  tau " << o.tau << "  T " << o.tmax << "\n";
  std::cout << "final electric energy: " << last.electric_energy << "\n";
  std::cout << "mass drift (incl. lost): " << (last.mass - first.mass + last.lost_mass) << "\n";
  std::cout << "lost mass: " << last.lost_mass << "\n";

  if (!o.reference.empty()) {
    std::ifstream rf(o.reference);
    if (!rf) throw CLI::ValidationError("cannot open reference field " + o.reference);
    sldg::DGField ref = sldg::load_field(rf);
    std::cout << "L2 error vs reference: " << sldg::l2_error_vs_reference(r.state.f, ref) << "\n";
  }
  return 0;
}

int cmd_convergence(const CommonOpts& o, const std::vector<int>& resolutions, int ref_n,
                    int ref_degree, const std::vector<double>& taus, double ref_tau,
                    const std::string& mode) {
  sldg::ProblemSpec p = make_problem(o);
  sldg::RunOptions ro;
  ro.workers = resolved_workers(o.workers);
  ro.record_every = 1 << 20;  // end only

  sldg::ConvergenceReport rep;
  if (mode == "space") {
    rep = sldg::convergence_study(p, o.degree, resolutions, o.tau, o.tmax, ref_n,
                                  ref_degree < 0 ? o.degree : ref_degree, ro);
  } else if (mode == "time") {
    sldg::GridSpec g = make_grid(p, o);
    rep = sldg::tau_convergence_study(p, g, taus, ref_tau, o.tmax, ro);
  } else {
    throw CLI::ValidationError("unknown mode: " + mode);
  }

  std::filesystem::create_directories(o.out_dir);
  std::ofstream csv(o.out_dir + "/convergence.csv");
  sldg::write_csv(rep, csv);
  sldg::write_csv(rep, std::cout);
  std::cout << "fitted order: " << rep.slope << "\n";
  return 0;
}

int cmd_dump_tables(int degree) {
  sldg::ShiftTable t = sldg::build_shift_table(degree);
  sldg::dump_shift_table(t, std::cout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semi-Lagrangian discontinuous Galerkin solver for the 1+1D "
               "Vlasov--Poisson equations"};
  app.require_subcommand(1);

  CommonOpts o;
  auto add_common = [&o](CLI::App* cmd) {
    cmd->set_config("--config", "", "plain key=value file; flags win");
    cmd->add_option("--problem", o.problem,
                    "landau_weak | landau_strong | advection | molenkamp");
    cmd->add_option("--alpha", o.alpha, "Landau perturbation amplitude");
    cmd->add_option("--nx", o.nx, "cells in x");
    cmd->add_option("--nv", o.nv, "cells in v");
    cmd->add_option("--degree", o.degree, "polynomial degree per cell")
        ->check(CLI::Range(0, 10));
    cmd->add_option("--tau", o.tau, "time step");
    cmd->add_option("--tmax", o.tmax, "time horizon");
    cmd->add_option("--out", o.out_dir, "output directory");
    cmd->add_option("--dynamics", o.dynamics,
                    "override: vlasov_poisson | free_streaming | solid_rotation");
    cmd->add_option("--workers", o.workers, "worker threads (0 = all cores)");
  };

  CLI::App* crun = app.add_subcommand("run", "run one simulation and write diagnostics");
  add_common(crun);
  crun->add_option("--record-every", o.record_every, "record every k-th step");
  crun->add_option("--reference", o.reference, "field dump to compare against");

  std::vector<int> resolutions{16, 32, 64};
  std::vector<double> taus{0.4, 0.2, 0.1};
  int ref_n = 256, ref_degree = -1;
  double ref_tau = 0.025;
  std::string mode = "space";
  CLI::App* cconv = app.add_subcommand("convergence", "grid or time-step refinement study");
  add_common(cconv);
  cconv->add_option("--mode", mode, "space | time");
  cconv->add_option("--resolutions", resolutions, "cell counts for the space study");
  cconv->add_option("--ref-n", ref_n, "reference resolution (space mode)");
  cconv->add_option("--ref-degree", ref_degree, "reference degree (default: --degree)");
  cconv->add_option("--taus", taus, "step sizes for the time study");
  cconv->add_option("--ref-tau", ref_tau, "reference step size (time mode)");

  int table_degree = 2;
  CLI::App* ctab = app.add_subcommand("dump-tables", "print the exact shift-table polynomials");
  ctab->add_option("--degree", table_degree, "table degree")->check(CLI::Range(0, 10));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;  // any command-line or config problem is a configuration error
  }

  try {
    if (crun->parsed()) return cmd_run(o);
    if (cconv->parsed()) return cmd_convergence(o, resolutions, ref_n, ref_degree, taus, ref_tau, mode);
    if (ctab->parsed()) return cmd_dump_tables(table_degree);
  } catch (const sldg::numerical_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
