#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "vvof/grid.hpp"

namespace vvof {

/// Implicit description of a region: evaluate < 0 inside the reference fluid
/// (C = 1), > 0 outside.
class ImplicitShape {
 public:
  using Fn = std::function<double(const Vec3&)>;

  ImplicitShape() = default;
  ImplicitShape(std::string name, Fn fn) : name_(std::move(name)), fn_(std::move(fn)) {}

  double evaluate(double x, double y, double z) const { return fn_({x, y, z}); }
  double operator()(const Vec3& p) const { return fn_(p); }
  const std::string& name() const { return name_; }
  explicit operator bool() const { return static_cast<bool>(fn_); }

 private:
  std::string name_;
  Fn fn_;
};

/// Declarative shape record, as found in case configs: a kind, a centre and
/// named scalar parameters.
struct ShapeSpec {
  std::string kind;
  Vec3 center{0.0, 0.0, 0.0};
  std::map<std::string, double> params;

  double get(const std::string& key) const;
  double get_or(const std::string& key, double fallback) const;
};

/// Kinds accepted by make_shape with their parameter names.
const std::map<std::string, std::vector<std::string>>& shape_kinds();

/// Builds the implicit function for a shape spec. Throws ConfigError on an
/// unknown kind, unknown/missing parameters, or out-of-range values.
ImplicitShape make_shape(const ShapeSpec& spec);

/// Pointwise minimum of the members.
ImplicitShape shape_union(const std::vector<ImplicitShape>& shapes);

/// Pointwise negation: swaps inside and outside.
ImplicitShape shape_complement(const ImplicitShape& shape);

struct VoxelizeOptions {
  int depth = 4;
};

/// Volume fraction of {phi < 0} per cell. Cells whose corners and centre
/// agree in sign are full or empty; the rest are refined by midpoint
/// subdivision, and leaf subcells use the fraction cut by the linearised
/// phi plane.
ColorField voxelize(const ImplicitShape& shape, const Grid& grid, VoxelizeOptions opts = {});

}  // namespace vvof
