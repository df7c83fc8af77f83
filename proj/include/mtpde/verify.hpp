#ifndef MTPDE_VERIFY_HPP
#define MTPDE_VERIFY_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mtpde {

struct CriterionResult {
  int number;
  std::string name;
  bool passed;
  std::string detail;
  double seconds;
};

/// Runs the full acceptance suite, printing one PASS/FAIL line per criterion
/// to `log`.  Artifacts (curves, fields, reports) are written under out_dir;
/// the determinism criterion regenerates them and compares bytes.  Returns
/// the per-criterion results.
std::vector<CriterionResult> run_verify(const std::string& out_dir,
                                        std::ostream& log);

/// Number of failed criteria.
int count_failures(const std::vector<CriterionResult>& results);

}  // namespace mtpde

#endif
