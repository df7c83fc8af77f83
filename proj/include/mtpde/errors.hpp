#ifndef MTPDE_ERRORS_HPP
#define MTPDE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mtpde {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define MTPDE_DEFINE_ERROR(Name)        \
  class Name : public Error {           \
   public:                              \
    using Error::Error;                 \
  }

// equation / coefficient evaluation
MTPDE_DEFINE_ERROR(OutOfRange);
MTPDE_DEFINE_ERROR(NotHyperbolic);

// characteristics
MTPDE_DEFINE_ERROR(NoClosedForm);
MTPDE_DEFINE_ERROR(StepTooLarge);

// EPD reduction
MTPDE_DEFINE_ERROR(WrongSide);
MTPDE_DEFINE_ERROR(CrossesSonicLine);
MTPDE_DEFINE_ERROR(GridTooSmall);
MTPDE_DEFINE_ERROR(DegenerateFit);
MTPDE_DEFINE_ERROR(UnsupportedExponent);

// solvers
MTPDE_DEFINE_ERROR(WrongRegion);
MTPDE_DEFINE_ERROR(NotConverged);
MTPDE_DEFINE_ERROR(CflViolation);
MTPDE_DEFINE_ERROR(Unstable);
MTPDE_DEFINE_ERROR(DivergedResidual);

// configuration / CLI
MTPDE_DEFINE_ERROR(ConfigError);

#undef MTPDE_DEFINE_ERROR

/// CSV parse failure; carries the 1-based line number of the offending row.
class MalformedCsv : public Error {
 public:
  MalformedCsv(const std::string& what, std::size_t line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace mtpde

#endif
