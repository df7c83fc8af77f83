#ifndef MTPDE_EQUATION_HPP
#define MTPDE_EQUATION_HPP

#include <span>
#include <string>
#include <vector>

#include "mtpde/errors.hpp"

namespace mtpde {

/// Which mixed-type equation is being modelled.
///   Tricomi form:  u_xx + K(x) u_yy = 0
///   Keldysh form:  K(x) u_xx + u_yy = 0
enum class EquationForm { Tricomi, Keldysh };

enum class PointType { Elliptic, Hyperbolic, Degenerate };

enum class DegeneracyContact { PerpendicularCusp, TangentialContact };

/// Coefficient function K(x).
///
/// Power-law coefficients evaluate as K(x) = sign(x)|x|^m with sign(0) = 0,
/// so K vanishes exactly on the sonic line.  Tabulated coefficients are
/// piecewise linear between strictly increasing samples and refuse to
/// extrapolate: silent extrapolation could flip type labels.
class CoefficientK {
 public:
  static CoefficientK power_law(double m);
  static CoefficientK tabulated(std::vector<double> xs, std::vector<double> ks);
  /// Reads CSV with header `x,K`, strictly increasing x, decimal ASCII.
  static CoefficientK tabulated_from_csv(const std::string& path);

  double operator()(double x) const;

  bool is_power_law() const { return power_law_; }
  double exponent() const { return m_; }

  /// Domain of definition; power laws cover the whole line.
  double x_min() const;
  double x_max() const;

 private:
  CoefficientK() = default;
  bool power_law_ = true;
  double m_ = 1.0;
  std::vector<double> xs_, ks_;
};

struct EquationSpec {
  EquationForm form = EquationForm::Tricomi;
  CoefficientK coeff = CoefficientK::power_law(1.0);

  static EquationSpec tricomi();  // u_xx + x u_yy = 0
  static EquationSpec keldysh();  // x u_xx + u_yy = 0
  static EquationSpec power_law(EquationForm form, double m);

  bool is_canonical_tricomi() const;
  bool is_canonical_keldysh() const;
};

double eval_K(const EquationSpec& spec, double x);

/// Pointwise type: Elliptic iff K(x) > eps_k, Hyperbolic iff K(x) < -eps_k,
/// Degenerate otherwise.  Both forms classify by the sign of K.
PointType classify_point(const EquationSpec& spec, double x, double eps_k = 0.0);

const char* to_string(PointType t);

/// Result of the slope-exponent probe at the degeneracy line: fits
/// log|dy/dx| ~ p log|x| over hyperbolic probe points x -> 0^-.
/// p > 0 means the characteristics flatten out and meet x = 0 at right
/// angles (Tricomi-like cusp); p < 0 means the slope blows up and the
/// contact is tangential (Keldysh-like).
struct DegeneracyKind {
  DegeneracyContact contact;
  double slope_exponent;  // fitted p
};

/// probe_xs: strictly increasing toward 0^-, at least 4 points, all
/// hyperbolic.  Throws NotHyperbolic otherwise.
DegeneracyKind degeneracy_kind(const EquationSpec& spec,
                               std::span<const double> probe_xs);

}  // namespace mtpde

#endif
