#pragma once

#include <array>
#include <string>
#include <vector>

#include "vvof/curvature.hpp"
#include "vvof/geometry.hpp"
#include "vvof/grid.hpp"
#include "vvof/motion.hpp"

namespace vvof {

/// How dt follows the grid when a case is re-gridded.
enum class DtRule {
  Fixed,      // dt unchanged
  Linear,     // dt ~ 1/N
  Quadratic,  // dt ~ 1/N^2
};

enum class CflScope {
  All,       // every cell
  Occupied,  // cells with C > 0 or a face neighbour with C > 0
};

struct OutputSpec {
  std::string dir;                    // empty: no files
  std::vector<double> snapshot_times; // snapshots at the first step reaching each time
  bool final_snapshot = true;
  bool kappa = false;                 // add the curvature field to snapshots
  bool velocity = false;              // add u, v, w to snapshots
  bool contour = true;                // final iso-line CSV (2D cases)
  int diag_stride = 1;                // one diagnostics row every this many steps
};

struct CaseConfig {
  std::string name;
  std::array<int, 3> counts{32, 32, 1};
  Vec3 lo{0.0, 0.0, 0.0};
  Vec3 hi{1.0, 1.0, 1.0};
  std::array<Boundary, 3> bc{Boundary::ZeroNeumann, Boundary::ZeroNeumann, Boundary::ZeroNeumann};
  std::vector<ShapeSpec> shapes;  // united
  bool invert = false;            // C = 1 outside the shapes
  int voxel_depth = 4;
  MotionSpec motion;
  double dt = 1e-3;
  double t_final = 1.0;
  double clip_eps = 1e-10;
  DeltaKind delta = DeltaKind::Polynomial;
  CurvatureOptions curvature;
  CflScope cfl_scope = CflScope::All;
  DtRule dt_rule = DtRule::Fixed;
  OutputSpec outputs;

  Grid make_grid() const;
  /// round(t_final / dt).
  long steps() const;
  /// Checks ranges; throws ConfigError.
  void validate() const;
};

/// Built-in case ids in listing order.
const std::vector<std::string>& list_cases();

/// Fully populated built-in case. `desk` selects the reduced-resolution
/// variant where one exists. Throws ConfigError listing the valid ids.
CaseConfig builtin_case(const std::string& name, bool desk = false);

/// True when a reduced-resolution variant is registered.
bool has_desk_variant(const std::string& name);

/// Re-grids a case. One count scales the other axes by the domain aspect
/// ratio (2D cases keep nz = 1); dt follows the case's dt rule.
CaseConfig with_grid(const CaseConfig& cfg, const std::vector<int>& counts);

}  // namespace vvof
