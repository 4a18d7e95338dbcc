#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace vvof {

using Vec3 = std::array<double, 3>;

enum class Axis : int { X = 0, Y = 1, Z = 2 };

inline constexpr int axis_index(Axis a) { return static_cast<int>(a); }

struct Index3 {
  int i = 0, j = 0, k = 0;

  int operator[](int d) const { return d == 0 ? i : (d == 1 ? j : k); }
  int& operator[](int d) { return d == 0 ? i : (d == 1 ? j : k); }
  friend bool operator==(const Index3&, const Index3&) = default;
};

enum class Boundary { Periodic, ZeroNeumann };

/// Raised for invalid user-facing configuration (grid sizes, shape
/// parameters, JSON schema violations).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Uniform Cartesian lattice. nz == 1 selects 2D mode: the z axis is inert
/// and dz is forced to 1 so that volumes reduce to areas.
class Grid {
 public:
  Grid() = default;
  Grid(int nx, int ny, int nz, Vec3 spacing, Vec3 origin = {0.0, 0.0, 0.0},
       std::array<Boundary, 3> bc = {Boundary::ZeroNeumann, Boundary::ZeroNeumann,
                                     Boundary::ZeroNeumann});

  /// Square/cubic convenience: n cells per axis over [lo, hi] on every
  /// active axis.
  static Grid uniform(int n, int dim, double lo = 0.0, double hi = 1.0,
                      Boundary bc = Boundary::ZeroNeumann);
  /// Box of given extents with per-axis counts; counts[2] == 1 for 2D.
  static Grid box(std::array<int, 3> counts, Vec3 lo, Vec3 hi,
                  std::array<Boundary, 3> bc = {Boundary::ZeroNeumann, Boundary::ZeroNeumann,
                                                Boundary::ZeroNeumann});

  int nx() const { return n_[0]; }
  int ny() const { return n_[1]; }
  int nz() const { return n_[2]; }
  int count(int axis) const { return n_[axis]; }
  double dx() const { return h_[0]; }
  double dy() const { return h_[1]; }
  double dz() const { return h_[2]; }
  double spacing(int axis) const { return h_[axis]; }
  const Vec3& origin() const { return origin_; }
  Boundary bc(int axis) const { return bc_[axis]; }

  bool is_2d() const { return n_[2] == 1; }
  int dim() const { return is_2d() ? 2 : 3; }
  std::size_t size() const {
    return static_cast<std::size_t>(n_[0]) * static_cast<std::size_t>(n_[1]) *
           static_cast<std::size_t>(n_[2]);
  }
  double cell_volume() const { return h_[0] * h_[1] * h_[2]; }
  double domain_volume() const { return cell_volume() * static_cast<double>(size()); }
  /// Stride between consecutive cells along an axis in the flat layout.
  std::size_t stride(int axis) const {
    return axis == 0 ? 1 : (axis == 1 ? static_cast<std::size_t>(n_[0])
                                      : static_cast<std::size_t>(n_[0]) * n_[1]);
  }

  std::size_t index(int i, int j, int k) const {
    return static_cast<std::size_t>(i) +
           static_cast<std::size_t>(n_[0]) *
               (static_cast<std::size_t>(j) + static_cast<std::size_t>(n_[1]) * k);
  }
  std::size_t index(const Index3& c) const { return index(c.i, c.j, c.k); }
  Index3 unflatten(std::size_t idx) const;
  bool in_range(int i, int j, int k) const {
    return i >= 0 && i < n_[0] && j >= 0 && j < n_[1] && k >= 0 && k < n_[2];
  }

  Vec3 center(int i, int j, int k) const {
    return {origin_[0] + (i + 0.5) * h_[0], origin_[1] + (j + 0.5) * h_[1],
            origin_[2] + (k + 0.5) * h_[2]};
  }
  Vec3 upper() const {
    return {origin_[0] + n_[0] * h_[0], origin_[1] + n_[1] * h_[1], origin_[2] + n_[2] * h_[2]};
  }

  /// Maps a possibly out-of-range index on `axis` into the domain following
  /// the axis boundary kind. Depth beyond 2 cells is a programming error.
  int resolve(int axis, int idx) const;

  bool operator==(const Grid& o) const {
    return n_ == o.n_ && h_ == o.h_ && origin_ == o.origin_ && bc_ == o.bc_;
  }

 private:
  std::array<int, 3> n_{0, 0, 0};
  Vec3 h_{1.0, 1.0, 1.0};
  Vec3 origin_{0.0, 0.0, 0.0};
  std::array<Boundary, 3> bc_{Boundary::ZeroNeumann, Boundary::ZeroNeumann,
                              Boundary::ZeroNeumann};
};

class ScalarField {
 public:
  ScalarField() = default;
  explicit ScalarField(const Grid& grid, double value = 0.0)
      : grid_(grid), values_(grid.size(), value) {}

  const Grid& grid() const { return grid_; }
  std::size_t size() const { return values_.size(); }

  double& operator[](std::size_t idx) { return values_[idx]; }
  double operator[](std::size_t idx) const { return values_[idx]; }
  double& at(int i, int j, int k) { return values_[grid_.index(i, j, k)]; }
  double at(int i, int j, int k) const { return values_[grid_.index(i, j, k)]; }

  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }
  double* data() { return values_.data(); }
  const double* data() const { return values_.data(); }

  /// Value at (i,j,k) with ghost resolution for indices up to two cells
  /// outside the domain.
  double ghost(int i, int j, int k) const {
    if (grid_.in_range(i, j, k)) return values_[grid_.index(i, j, k)];
    return values_[grid_.index(grid_.resolve(0, i), grid_.resolve(1, j), grid_.resolve(2, k))];
  }

  void fill(double v) { std::fill(values_.begin(), values_.end(), v); }

 private:
  Grid grid_;
  std::vector<double> values_;
};

/// Per-cell volume fraction of the reference fluid.
class ColorField : public ScalarField {
 public:
  using ScalarField::ScalarField;
  ColorField() = default;
  explicit ColorField(ScalarField f) : ScalarField(std::move(f)) {}
};

/// Cell-centred vector field (velocities, gradients).
struct VectorField {
  VectorField() = default;
  explicit VectorField(const Grid& g) : comp{ScalarField(g), ScalarField(g), ScalarField(g)} {}

  std::array<ScalarField, 3> comp;

  const Grid& grid() const { return comp[0].grid(); }
  ScalarField& u() { return comp[0]; }
  ScalarField& v() { return comp[1]; }
  ScalarField& w() { return comp[2]; }
  const ScalarField& u() const { return comp[0]; }
  const ScalarField& v() const { return comp[1]; }
  const ScalarField& w() const { return comp[2]; }

  /// Arithmetic mean of the normal component on the face between cell
  /// (i,j,k) and its +1 neighbour along `axis`.
  double face(int axis, int i, int j, int k) const;
};

using VelocityField = VectorField;

/// Sum of C * dV over the domain.
double total_volume(const ColorField& field);

/// Central-difference gradient using ghost values.
VectorField gradient_cc(const ScalarField& field);

/// |grad C| at one cell by central differences.
double gradient_norm_at(const ScalarField& field, int i, int j, int k);

}  // namespace vvof
