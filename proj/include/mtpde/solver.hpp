#ifndef MTPDE_SOLVER_HPP
#define MTPDE_SOLVER_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mtpde/equation.hpp"
#include "mtpde/exact_solutions.hpp"
#include "mtpde/grid.hpp"

namespace mtpde {

/// Dirichlet traces on the rectangle sides.  east/west have length ny,
/// south/north length nx.  Corner values of adjacent sides must agree to
/// 1e-12.
struct DirichletBc {
  std::optional<std::vector<double>> west, east, south, north;

  static DirichletBc from_solution(const ExactSolution& sol, const Grid2D& g);
  static DirichletBc all_sides(const Grid2D& g, double value);
};

/// Cauchy data (u, u_x) on the x = x_max line plus Dirichlet traces on the
/// two y-sides (each of length nx).
struct CauchyBc {
  std::vector<double> u, ux;      // length ny
  std::vector<double> south, north;  // length nx

  static CauchyBc from_solution(const ExactSolution& sol, const Grid2D& g);
};

enum class SolveMode { Elliptic, Cauchy, Mixed };

const char* to_string(SolveMode m);

struct SolveReport {
  std::string mode;
  int iterations = 0;
  std::vector<double> residual_history;
  double final_residual = 0;
  std::optional<double> error_max, error_l2;
  std::optional<double> order_estimate;
  std::optional<double> cfl_margin;
};

struct RelaxOptions {
  double tol = 1e-10;
  int max_iter = 200000;
  double omega = 1.5;  // over-relaxation on centered lines
};

/// Dirichlet problem on a K >= 0 rectangle with the 5-point scheme
///   (u_E - 2u + u_W)/hx^2 + K(x_i)(u_N - 2u + u_S)/hy^2 = 0
/// (degenerate columns K = 0 reduce to u_xx = 0), solved by successive line
/// over-relaxation with y-line tridiagonal solves, sweeping x_max -> x_min.
/// Stops when max residual <= tol*(1 + max|bc|).  Throws WrongRegion if any
/// K(x_i) < 0, NotConverged past max_iter.
std::pair<Field, SolveReport> solve_elliptic(const EquationSpec& spec,
                                             const Grid2D& grid,
                                             const DirichletBc& bc,
                                             const RelaxOptions& opt = {});

/// Explicit second-order marching in decreasing x for the hyperbolic region
/// (x_max <= 0):
///   u_{i-1,j} = 2u_{i,j} - u_{i+1,j}
///               + hx^2 (-K(x_i)) (u_{i,j+1} - 2u_{i,j} + u_{i,j-1})/hy^2
/// with a Taylor start from the Cauchy line.  Refuses to run unless
/// sqrt(max|K|) hx <= hy (CflViolation); throws Unstable if max|u| grows
/// beyond 1e6x the data scale.
std::pair<Field, SolveReport> solve_cauchy_hyperbolic(const EquationSpec& spec,
                                                      const Grid2D& grid,
                                                      const CauchyBc& bc);

/// Type-switched relaxation on a rectangle straddling the sonic line.
/// Elliptic and degenerate columns use the centered scheme; hyperbolic
/// columns replace u_xx by the one-sided difference using u at i, i+1, i+2
/// (domain of dependence points toward the sonic line).  Lines relax
/// sweeping from x_max toward x_min; hyperbolic lines are not
/// over-relaxed.  Dirichlet data on east/south/north; the west side takes no
/// data when column 0 is hyperbolic (and requires it otherwise, so an
/// all-elliptic grid reproduces solve_elliptic).  Throws NotConverged,
/// DivergedResidual (residual grows 100x from its minimum).
std::pair<Field, SolveReport> solve_mixed(const EquationSpec& spec,
                                          const Grid2D& grid,
                                          const DirichletBc& bc,
                                          const RelaxOptions& opt = {});

/// Manufactured-solution convergence study on nested grids n, 2n-1, 4n-3,...
struct StudyResult {
  SolveReport report;  // finest level, order_estimate filled in
  std::vector<int> level_n;
  std::vector<double> level_error_max;
  std::vector<double> level_error_l2;
  std::vector<double> observed_orders;  // log2(e_h / e_{h/2}) per pair
};

StudyResult convergence_study(SolveMode mode, const std::string& oracle_id,
                              int levels, int base_n = 33,
                              const RelaxOptions& opt = {.tol = 1e-11});

/// Max / L2 error of a field against an oracle over all grid points.
std::pair<double, double> error_vs_oracle(const Field& f,
                                          const ExactSolution& sol);

/// Max residual of the discrete operator the given mode would impose on
/// this field (used for the report-honesty checks).
double discrete_residual(SolveMode mode, const EquationSpec& spec,
                         const Field& f);

}  // namespace mtpde

#endif
