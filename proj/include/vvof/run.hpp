#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "vvof/cases.hpp"
#include "vvof/grid.hpp"

namespace vvof {

/// One diagnostics row. The CSV carries the first eight columns.
struct DiagRecord {
  long step = 0;
  double t = 0.0;
  double volume = 0.0;
  double volume_norm = 1.0;
  double energy = 0.0;
  double kappa_bar = 0.0;
  double clipped_mass = 0.0;
  std::size_t wisps = 0;
  double cfl = 0.0;
  // Not serialized.
  double rp_radius = std::numeric_limits<double>::quiet_NaN();
  std::size_t kappa_valid = 0;
  std::size_t kappa_over_resolved = 0;
};

struct Diagnostics {
  std::vector<DiagRecord> rows;
};

enum class EndReason {
  Completed,
  InterfaceVanished,
  RpCollapse,
  CflViolation,
  Stopped,  // a hook asked to stop
};

std::string to_string(EndReason r);

struct RunResult {
  Diagnostics diag;
  ColorField initial;
  ColorField final_field;
  EndReason reason = EndReason::Completed;
  std::string message;
  long steps = 0;        // completed steps
  long abort_step = -1;  // step that violated the CFL bound
  std::vector<std::string> files;

  bool aborted() const { return reason == EndReason::CflViolation; }
};

/// Read-only view handed to hooks after every step.
struct StepView {
  long step;
  double t;
  const ColorField& c;
  const DiagRecord& record;
  const VelocityField& velocity;
};

struct RunHooks {
  /// Return false to stop the run after this step.
  std::function<bool(const StepView&)> on_step;
};

/// Initial color function of a case.
ColorField initial_field(const CaseConfig& cfg);

/// Time loop: velocity at t + dt/2, CFL guard, split advection, clipping,
/// diagnostics, snapshots.
RunResult run_case(const CaseConfig& cfg, const RunHooks& hooks = {});

}  // namespace vvof
