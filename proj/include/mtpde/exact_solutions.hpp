#ifndef MTPDE_EXACT_SOLUTIONS_HPP
#define MTPDE_EXACT_SOLUTIONS_HPP

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mtpde/equation.hpp"
#include "mtpde/grid.hpp"

namespace mtpde {

struct Point2 {
  double x, y;
};

/// A closed-form solution of one of the model equations, used as an oracle
/// by the reduction and the solvers.  eval_dx supplies Cauchy data.
struct ExactSolution {
  std::string id;
  std::string description;
  EquationSpec spec;
  std::function<double(double, double)> eval;
  std::function<double(double, double)> eval_dx;
  // validity rectangle (infinities = whole plane)
  double x_lo, x_hi, y_lo, y_hi;
  double residual_tol;  // declared bound for pde_residual at h = 1e-3

  bool contains(double x, double y, double margin = 0.0) const;
};

/// The oracle registry.  Ids: lin, bilin, quartic, airy_1, airy_2,
/// keldysh_poly, tricomi_poly_m2, tricomi_poly_m3.
const std::vector<ExactSolution>& registry();

const ExactSolution& find_solution(std::string_view id);

/// Governing-equation residual of `sol` evaluated with 4th-order centered
/// differences at spacing h; returns the max over `points`.  Points must be
/// interior to the validity region with margin 2h.
double pde_residual(const ExactSolution& sol, std::span<const Point2> points,
                    double h);

/// Samples sol.eval on a grid.
Field sample(const ExactSolution& sol, const Grid2D& grid);

/// Deterministic quasi-random points in a rectangle (additive lattice).
std::vector<Point2> quasi_random_points(std::size_t n, double x_lo, double x_hi,
                                        double y_lo, double y_hi);

}  // namespace mtpde

#endif
