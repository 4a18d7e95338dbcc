#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "vvof/grid.hpp"

namespace vvof {

/// Mean absolute cell difference. Throws std::invalid_argument when the
/// grids differ.
double l1_error(const ScalarField& a, const ScalarField& b);

/// Pairwise orders for a refinement series sorted by N, each N doubling the
/// previous. Positive means the error decreases:
/// n = (log L(N) - log L(2N)) / log 2.
std::vector<double> convergence_order(const std::vector<std::pair<int, double>>& errors);

/// Discrete interface measure sum |grad C| dV (central differences).
double interface_energy(const ScalarField& c);

/// Face-connected components of {C > threshold}; periodic axes wrap.
std::size_t connected_components(const ScalarField& c, double threshold = 0.5);

/// Radius of the sphere (3D) or disc (2D) with the same volume as the field.
double equivalent_radius(double volume, int dim);

}  // namespace vvof
