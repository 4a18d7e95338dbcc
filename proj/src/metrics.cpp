#include "vvof/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

namespace vvof {

double l1_error(const ScalarField& a, const ScalarField& b) {
  if (!(a.grid() == b.grid())) throw std::invalid_argument("l1_error: grids differ");
  double s = 0.0;
  for (std::size_t q = 0; q < a.size(); ++q) s += std::fabs(a[q] - b[q]);
  return s / static_cast<double>(a.size());
}

std::vector<double> convergence_order(const std::vector<std::pair<int, double>>& errors) {
  if (errors.size() < 2) throw std::invalid_argument("convergence_order: need at least two grids");
  auto sorted = errors;
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> orders;
  for (std::size_t q = 1; q < sorted.size(); ++q) {
    const auto [n0, e0] = sorted[q - 1];
    const auto [n1, e1] = sorted[q];
    if (n1 != 2 * n0) {
      throw std::invalid_argument("convergence_order: grid " + std::to_string(n1) +
                                  " does not double " + std::to_string(n0));
    }
    if (!(e0 >= 0.0) || !(e1 >= 0.0)) throw std::invalid_argument("convergence_order: negative error");
    if (e0 == e1) {
      orders.push_back(0.0);
    } else {
      orders.push_back((std::log(e0) - std::log(e1)) / std::log(2.0));
    }
  }
  return orders;
}

double interface_energy(const ScalarField& c) {
  const Grid& g = c.grid();
  double s = 0.0;
  for (int k = 0; k < g.nz(); ++k) {
    for (int j = 0; j < g.ny(); ++j) {
      for (int i = 0; i < g.nx(); ++i) s += gradient_norm_at(c, i, j, k);
    }
  }
  return s * g.cell_volume();
}

std::size_t connected_components(const ScalarField& c, double threshold) {
  const Grid& g = c.grid();
  const int dims = g.dim();
  std::vector<std::uint8_t> seen(g.size(), 0);
  std::vector<std::size_t> stack;
  std::size_t count = 0;
  for (std::size_t seed = 0; seed < g.size(); ++seed) {
    if (seen[seed] || !(c[seed] > threshold)) continue;
    ++count;
    seen[seed] = 1;
    stack.push_back(seed);
    while (!stack.empty()) {
      const std::size_t idx = stack.back();
      stack.pop_back();
      const Index3 p = g.unflatten(idx);
      for (int a = 0; a < dims; ++a) {
        for (int dlt : {-1, 1}) {
          Index3 n = p;
          n[a] += dlt;
          if (n[a] < 0 || n[a] >= g.count(a)) {
            if (g.bc(a) != Boundary::Periodic) continue;
            n[a] = g.resolve(a, n[a]);
          }
          const std::size_t nidx = g.index(n);
          if (seen[nidx] || !(c[nidx] > threshold)) continue;
          seen[nidx] = 1;
          stack.push_back(nidx);
        }
      }
    }
  }
  return count;
}

double equivalent_radius(double volume, int dim) {
  if (dim == 2) return std::sqrt(volume / std::numbers::pi);
  return std::cbrt(3.0 * volume / (4.0 * std::numbers::pi));
}

}  // namespace vvof
