#pragma once

#include <map>
#include <string>
#include <vector>

#include "vvof/contour.hpp"
#include "vvof/grid.hpp"
#include "vvof/run.hpp"

namespace vvof {

/// Legacy ASCII VTK STRUCTURED_POINTS with CELL_DATA "C" and, when given,
/// "kappa" and "u", "v", "w". Values use 17 significant digits so a read
/// reproduces them exactly. Throws std::runtime_error naming the path on IO
/// failure.
void write_snapshot(const std::string& path, const ScalarField& c, const ScalarField* kappa = nullptr,
                    const VectorField* velocity = nullptr);

struct Snapshot {
  Grid grid;
  std::map<std::string, ScalarField> fields;
};

Snapshot read_snapshot(const std::string& path);

inline constexpr const char* kDiagnosticsHeader =
    "t,volume,volume_norm,energy,kappa_bar,clipped_mass,wisps,cfl";

void write_diagnostics_csv(const std::string& path, const Diagnostics& diag);
Diagnostics read_diagnostics_csv(const std::string& path);

/// Columns component,x,y; one row per polyline vertex.
void write_contour_csv(const std::string& path, const std::vector<Polyline>& contour);

}  // namespace vvof
