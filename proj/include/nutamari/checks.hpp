#ifndef NUTAMARI_CHECKS_HPP_
#define NUTAMARI_CHECKS_HPP_

// Exhaustive invariant runner behind `nutamari check`: every ν up to a given
// length is pushed through all guises and bijections, and each claim is
// reported under a short tag.

#include <cstddef>
#include <string>
#include <vector>

namespace nutamari {

enum class Fault {
  kNone,
  kMeetIsMax,  // replace the bracket meet by the componentwise maximum
};

struct CheckOptions {
  int max_len = 6;
  int k_max = 2;
  Fault fault = Fault::kNone;
};

struct CheckResult {
  std::string tag;
  std::string summary;
  std::size_t instances = 0;
  std::vector<std::string> failures;  // first few only

  bool passed() const { return failures.empty(); }
};

std::vector<CheckResult> run_checks(const CheckOptions& options);

// One "PASS tag (N instances): summary" / "FAIL ..." line per result, with
// failure details indented below.
std::string format_report(const std::vector<CheckResult>& results);

}  // namespace nutamari

#endif  // NUTAMARI_CHECKS_HPP_
