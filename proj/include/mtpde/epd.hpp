#ifndef MTPDE_EPD_HPP
#define MTPDE_EPD_HPP

#include <string>

#include "mtpde/equation.hpp"
#include "mtpde/grid.hpp"

namespace mtpde {

enum class SonicSide { Elliptic, Hyperbolic };  // the +/- in tau = c(+/-x)^q

/// Change of variables tau = tau_coeff * |x|^tau_exp taking a power-law
/// equation to Euler-Poisson-Darboux form
///     u_tata +/- u_yy + (beta/tau) u_ta = 0      (y rescaled by y_scale).
///
/// Tricomi form: tau_coeff = 2/(m+2), tau_exp = (m+2)/2, beta = m/(m+2).
/// Keldysh form: m = 1 keeps the map tau = (1/2)|x|^(1/2) with y_scale = 4;
/// m < 2 uses the integral map tau_coeff = 2/(2-m), tau_exp = (2-m)/2.  The
/// Keldysh beta is not hard-coded: reduce() measures it with fit_beta on a
/// manufactured solution, and paper_beta records the published -1/4 for
/// comparison (the two disagree; the measured value matches the chain rule).
struct EpdReduction {
  EquationSpec spec;
  SonicSide side = SonicSide::Elliptic;
  double tau_coeff = 0, tau_exp = 0;
  double beta = 0;
  double y_scale = 1;
  bool beta_measured = false;  // true when beta came from the empirical fit
  double paper_beta = 0;       // published index for this equation
};

/// Field on a uniform (tau, y/y_scale) grid; grid.x coordinates hold tau.
struct TauField {
  Grid2D grid;
  std::vector<double> values;
  std::string provenance;

  double& at(int i, int j) { return values[grid.idx(i, j)]; }
  double at(int i, int j) const { return values[grid.idx(i, j)]; }
};

/// Throws UnsupportedExponent for Keldysh form with m >= 2.
EpdReduction reduce(const EquationSpec& spec, SonicSide side);

/// Same reduction with tau scaled by k (and y_scale co-scaled); beta is
/// unchanged, which fit_beta confirms.
EpdReduction rescaled(const EpdReduction& red, double k);

/// Mutually inverse power maps.  Throw WrongSide when sign(x) does not match
/// red.side or tau < 0.
double tau_of_x(const EpdReduction& red, double x);
double x_of_tau(const EpdReduction& red, double tau);

struct TransformOptions {
  /// Band |x| < x_cut excluded from the tau grid to keep beta/tau bounded.
  double x_cut = 1e-3;
};

/// Resamples a field from its (x, y) grid onto a uniform (tau, y/y_scale)
/// grid of the same dimensions, cubic (4-point Lagrange) interpolation along
/// x.  The field's x-range must lie strictly on one side of 0 (else
/// CrossesSonicLine).
TauField transform_field(const Field& field, const EpdReduction& red,
                         const TransformOptions& opt = {});

/// Resamples a TauField back onto the given x-grid (inverse of
/// transform_field up to interpolation error).
Field untransform_field(const TauField& tf, const EpdReduction& red,
                        const Grid2D& target);

/// Pointwise EPD residual u_tata + sign*u_yy + (beta/tau) u_ta on the
/// interior of the tau grid, centered second differences.  `sign` is +1 on
/// the elliptic side, -1 on the hyperbolic side.  Throws GridTooSmall.
Field epd_residual(const TauField& tf, double beta, int sign);

/// Closed-form least-squares index: the residual is affine in beta, so
/// argmin_beta ||residual||_2 = -<A,B>/<B,B> with B = u_ta/tau.  Throws
/// DegenerateFit when ||B|| is below 1e-14 (beta unidentifiable).
double fit_beta(const TauField& tf, int sign);

/// 4-point Lagrange interpolation of uniformly sampled values at query t
/// (in grid coordinates, t = (x - x0)/h).  Shared by transform_field and the
/// tests; one-sided windows near the edges.
double cubic_interp_uniform(std::span<const double> vals, double t);

}  // namespace mtpde

#endif
