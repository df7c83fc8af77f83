#ifndef MTPDE_CHARACTERISTICS_HPP
#define MTPDE_CHARACTERISTICS_HPP

#include <utility>
#include <vector>

#include "mtpde/equation.hpp"

namespace mtpde {

/// The +/- branch of the characteristic family.  Plus is bound to positive
/// dy/dx; the families coincide only where K = 0.
enum class FamilySign { Plus, Minus };

inline double family_sign(FamilySign f) { return f == FamilySign::Plus ? 1.0 : -1.0; }

/// One traced characteristic: a polyline with strictly monotone x.
struct CharacteristicCurve {
  FamilySign family = FamilySign::Plus;
  double constant_c = 0.0;  // closed-form constant; NaN for non-canonical specs
  std::vector<double> xs, ys;
  bool reached_sonic = false;
  EquationSpec spec;

  std::size_t size() const { return xs.size(); }
};

/// Closed-form invariant of the canonical equations:
///   Tricomi:  C = y +/- (2/3)(-x)^(3/2)
///   Keldysh:  C = y +/- (1/2)(-x)^(1/2)   (as stated; see README on the
///             coefficient mismatch with the characteristic ODE)
/// Only the two canonical specs have a closed form; anything else throws
/// NoClosedForm.  Requires x <= 0.
double characteristic_constant(const EquationSpec& spec, FamilySign family,
                               double x, double y);

/// Characteristic slope at a hyperbolic point:
///   Tricomi form:  dy/dx = +/- sqrt(-K(x))
///   Keldysh form:  dy/dx = +/- (-K(x))^(-1/2)
/// Throws NotHyperbolic when classify_point(x) != Hyperbolic.
double slope_at(const EquationSpec& spec, FamilySign family, double x);

/// Traces the characteristic through (x0, y0) to x_end with a classical
/// 4-stage one-step method at nominal step `step`.
///
/// Near the sonic line the integration switches variables to stay accurate:
/// Tricomi-form curves use s = (-x)^(1/2) once -x < 1e-4 (the cusp becomes a
/// polynomial in s); Keldysh-form curves switch the independent variable to
/// y once |dy/dx| > 10 and to s = (-x)^(1/2) once -x < 1e-4 (vertical
/// tangent).  Steps also shrink deterministically approaching x = 0 so the
/// sampled polyline satisfies the discrete ODE residual bound.
///
/// reached_sonic is set when the trace terminates within 1e-12 of x = 0; for
/// the canonical Tricomi equation the final sample is clamped to the closed
/// form, otherwise it carries the integrated value of the substituted
/// variable.
///
/// Throws StepTooLarge when the per-step error estimate exceeds 1e-6 per
/// unit of the integration variable, NotHyperbolic for bad seeds.
CharacteristicCurve trace(const EquationSpec& spec, FamilySign family,
                          double x0, double y0, double x_end, double step);

/// Plus and Minus curves from (x, y) to the sonic line.
std::pair<CharacteristicCurve, CharacteristicCurve> both_families_through(
    const EquationSpec& spec, double x, double y, double step = 1e-3);

}  // namespace mtpde

#endif
