#pragma once

#include <vector>

namespace sldg {

// Per-record diagnostics of a run; times are strictly increasing.
struct TimeSeries {
  struct Record {
    double time;
    double electric_energy;
    double mass;
    double l2_norm;
    double lost_mass;
  };
  std::vector<Record> rows;
};

}  // namespace sldg
