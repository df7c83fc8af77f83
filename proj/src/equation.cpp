#include "mtpde/equation.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "mtpde/characteristics.hpp"

namespace mtpde {

CoefficientK CoefficientK::power_law(double m) {
  if (!(m > 0.0) || !std::isfinite(m))
    throw ConfigError("power-law exponent must be a positive real, got " +
                      std::to_string(m));
  CoefficientK k;
  k.power_law_ = true;
  k.m_ = m;
  return k;
}

CoefficientK CoefficientK::tabulated(std::vector<double> xs,
                                     std::vector<double> ks) {
  if (xs.size() != ks.size())
    throw ConfigError("tabulated K: x and K sample counts differ");
  if (xs.size() < 2) throw ConfigError("tabulated K needs at least 2 samples");
  for (std::size_t i = 0; i + 1 < xs.size(); ++i)
    if (!(xs[i] < xs[i + 1]))
      throw ConfigError("tabulated K samples must be strictly increasing in x");
  for (double v : xs)
    if (!std::isfinite(v)) throw ConfigError("tabulated K: non-finite x");
  for (double v : ks)
    if (!std::isfinite(v)) throw ConfigError("tabulated K: non-finite K");
  CoefficientK k;
  k.power_law_ = false;
  k.m_ = 0.0;
  k.xs_ = std::move(xs);
  k.ks_ = std::move(ks);
  return k;
}

CoefficientK CoefficientK::tabulated_from_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open K table: " + path);
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line)) throw MalformedCsv("empty K table", 1);
  ++lineno;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "x,K") throw MalformedCsv("expected header `x,K`", lineno);
  std::vector<double> xs, ks;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string a, b, extra;
    if (!std::getline(row, a, ',') || !std::getline(row, b, ','))
      throw MalformedCsv("expected two comma-separated values", lineno);
    if (std::getline(row, extra, ','))
      throw MalformedCsv("trailing data after K column", lineno);
    try {
      std::size_t pa = 0, pb = 0;
      double xv = std::stod(a, &pa);
      double kv = std::stod(b, &pb);
      if (pa != a.size() || pb != b.size())
        throw MalformedCsv("trailing characters in number", lineno);
      xs.push_back(xv);
      ks.push_back(kv);
    } catch (const std::invalid_argument&) {
      throw MalformedCsv("unparsable number", lineno);
    } catch (const std::out_of_range&) {
      throw MalformedCsv("number out of double range", lineno);
    }
  }
  return tabulated(std::move(xs), std::move(ks));
}

double CoefficientK::operator()(double x) const {
  if (power_law_) {
    if (x == 0.0) return 0.0;  // sign(0) = 0: K vanishes exactly on x = 0
    if (m_ == 1.0) return x;   // bitwise identity for the canonical case
    return std::copysign(std::pow(std::fabs(x), m_), x);
  }
  if (x < xs_.front() || x > xs_.back())
    throw OutOfRange("x = " + std::to_string(x) +
                     " outside tabulated K range [" +
                     std::to_string(xs_.front()) + ", " +
                     std::to_string(xs_.back()) + "]");
  auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  if (it == xs_.end()) return ks_.back();
  if (it == xs_.begin()) return ks_.front();
  std::size_t hi = std::size_t(it - xs_.begin());
  std::size_t lo = hi - 1;
  double t = (x - xs_[lo]) / (xs_[hi] - xs_[lo]);
  return ks_[lo] + t * (ks_[hi] - ks_[lo]);
}

double CoefficientK::x_min() const {
  return power_law_ ? -std::numeric_limits<double>::infinity() : xs_.front();
}
double CoefficientK::x_max() const {
  return power_law_ ? std::numeric_limits<double>::infinity() : xs_.back();
}

EquationSpec EquationSpec::tricomi() {
  return {EquationForm::Tricomi, CoefficientK::power_law(1.0)};
}
EquationSpec EquationSpec::keldysh() {
  return {EquationForm::Keldysh, CoefficientK::power_law(1.0)};
}
EquationSpec EquationSpec::power_law(EquationForm form, double m) {
  return {form, CoefficientK::power_law(m)};
}

bool EquationSpec::is_canonical_tricomi() const {
  return form == EquationForm::Tricomi && coeff.is_power_law() &&
         coeff.exponent() == 1.0;
}
bool EquationSpec::is_canonical_keldysh() const {
  return form == EquationForm::Keldysh && coeff.is_power_law() &&
         coeff.exponent() == 1.0;
}

double eval_K(const EquationSpec& spec, double x) { return spec.coeff(x); }

PointType classify_point(const EquationSpec& spec, double x, double eps_k) {
  double k = eval_K(spec, x);
  if (k > eps_k) return PointType::Elliptic;
  if (k < -eps_k) return PointType::Hyperbolic;
  return PointType::Degenerate;
}

const char* to_string(PointType t) {
  switch (t) {
    case PointType::Elliptic: return "elliptic";
    case PointType::Hyperbolic: return "hyperbolic";
    case PointType::Degenerate: return "degenerate";
  }
  return "?";
}

DegeneracyKind degeneracy_kind(const EquationSpec& spec,
                               std::span<const double> probe_xs) {
  if (probe_xs.size() < 4)
    throw ConfigError("degeneracy_kind needs at least 4 probe points");
  for (std::size_t i = 0; i + 1 < probe_xs.size(); ++i)
    if (!(probe_xs[i] < probe_xs[i + 1]))
      throw ConfigError("probe points must be strictly increasing toward 0-");
  if (!(probe_xs.back() < 0.0))
    throw ConfigError("probe points must be negative");

  // least squares of log|dy/dx| against log|x|
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = double(probe_xs.size());
  for (double x : probe_xs) {
    if (classify_point(spec, x) != PointType::Hyperbolic)
      throw NotHyperbolic("probe point x = " + std::to_string(x) +
                          " is not hyperbolic");
    double lx = std::log(std::fabs(x));
    double ls = std::log(std::fabs(slope_at(spec, FamilySign::Plus, x)));
    sx += lx;
    sy += ls;
    sxx += lx * lx;
    sxy += lx * ls;
  }
  double p = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  if (p == 0.0)
    throw ConfigError("slope exponent fit is exactly zero; no contact kind");
  return {p > 0.0 ? DegeneracyContact::PerpendicularCusp
                  : DegeneracyContact::TangentialContact,
          p};
}

}  // namespace mtpde
