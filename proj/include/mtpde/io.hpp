#ifndef MTPDE_IO_HPP
#define MTPDE_IO_HPP

#include <iosfwd>
#include <string>

#include "mtpde/characteristics.hpp"
#include "mtpde/epd.hpp"
#include "mtpde/grid.hpp"
#include "mtpde/solver.hpp"

namespace mtpde {

/// Field CSV: header `x,y,u`, row-major (y fastest), 17 significant digits.
void write_field_csv(const Field& field, std::ostream& os,
                     const char* xname = "x");
void write_field_csv(const Field& field, const std::string& path,
                     const char* xname = "x");

/// TauField CSV shares the Field format with `tau` replacing `x`.
void write_tau_field_csv(const TauField& tf, const std::string& path);

/// Loads a Field CSV; validates monotone coordinates, uniform spacing and
/// grid completeness.  Throws MalformedCsv with the offending line number.
Field read_field_csv(std::istream& is);
Field read_field_csv(const std::string& path);

/// Curve CSV: header `x,y`, one sample per row, 17 significant digits.
void write_curve_csv(const CharacteristicCurve& curve, std::ostream& os);
void write_curve_csv(const CharacteristicCurve& curve, const std::string& path);

/// PGM (P2, 255 levels) heatmap: min -> 0, max -> 255 affine scaling, one
/// image row per y from y_max down.  A constant field maps to all zeros.
void write_pgm(const Field& field, std::ostream& os);
void write_pgm(const Field& field, const std::string& path);

/// SolveReport as a single JSON object (keys: mode, iterations,
/// final_residual, residual_history, error_max, error_l2, order_estimate,
/// cfl_margin; absent optionals serialize as null).
std::string report_to_json(const SolveReport& report);
void write_report_json(const SolveReport& report, const std::string& path);

/// 17-significant-digit representation that round-trips doubles exactly.
std::string format_g17(double v);

}  // namespace mtpde

#endif
