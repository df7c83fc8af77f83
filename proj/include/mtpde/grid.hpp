#ifndef MTPDE_GRID_HPP
#define MTPDE_GRID_HPP

#include <cstddef>
#include <vector>

#include "mtpde/errors.hpp"

namespace mtpde {

/// Uniform tensor grid on a rectangle.  Storage order is row-major with y
/// varying fastest: value index (i, j) -> i*ny + j.  Coordinates are always
/// computed as x_min + i*hx so they are reproducible bit-for-bit given i.
struct Grid2D {
  int nx = 0, ny = 0;
  double x_min = 0, x_max = 0, y_min = 0, y_max = 0;

  Grid2D() = default;
  Grid2D(int nx_, int ny_, double x0, double x1, double y0, double y1);

  double hx() const { return (x_max - x_min) / (nx - 1); }
  double hy() const { return (y_max - y_min) / (ny - 1); }
  double x(int i) const { return x_min + i * hx(); }
  double y(int j) const { return y_min + j * hy(); }
  std::size_t size() const { return std::size_t(nx) * std::size_t(ny); }
  std::size_t idx(int i, int j) const { return std::size_t(i) * ny + j; }

  bool operator==(const Grid2D&) const = default;
};

/// Scalar samples bound to a grid.
struct Field {
  Grid2D grid;
  std::vector<double> values;

  Field() = default;
  explicit Field(const Grid2D& g) : grid(g), values(g.size(), 0.0) {}

  double& at(int i, int j) { return values[grid.idx(i, j)]; }
  double at(int i, int j) const { return values[grid.idx(i, j)]; }

  /// Throws if any value is non-finite or the length does not match the grid.
  void validate() const;
};

}  // namespace mtpde

#endif
