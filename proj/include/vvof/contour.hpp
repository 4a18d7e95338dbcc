#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "vvof/grid.hpp"

namespace vvof {

using Point2 = std::array<double, 2>;

/// Iso-line component. Points run with the region C > level on the left;
/// a closed polyline does not repeat its first point.
struct Polyline {
  std::vector<Point2> points;
  bool closed = false;

  double perimeter() const;
  /// Signed shoelace area, positive when the enclosed region is C > level.
  double signed_area() const;
};

/// Marching squares over the lattice of cell centres. Saddles are resolved
/// by the four-corner average. Empty when the level is never crossed.
std::vector<Polyline> extract_contour_2d(const ScalarField& c, double level = 0.5);

/// P^2 / (4 pi |A|) of the component with the largest enclosed area. Throws
/// std::invalid_argument when there is no component or any is open.
double circularity(const std::vector<Polyline>& contour);

/// Triangle set with outward normals (pointing from C > level to C < level).
struct TriangleMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<std::size_t, 3>> triangles;

  double area() const;
  /// Enclosed volume by the divergence theorem (absolute value).
  double volume() const;
  /// Components of the triangle adjacency graph.
  std::size_t components() const;
};

/// Marching tetrahedra over the lattice of cell centres, each dual cube split
/// into six tetrahedra sharing its main diagonal.
TriangleMesh extract_contour_3d(const ScalarField& c, double level = 0.5);

/// pi^(1/3) (6V)^(2/3) / A; 1 for a sphere.
double sphericity(const TriangleMesh& mesh);

}  // namespace vvof
