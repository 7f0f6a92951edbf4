#include <doctest.h>

#include <algorithm>

#include "nutamari/checks.hpp"

using namespace nutamari;

namespace {

const CheckResult& find(const std::vector<CheckResult>& results, const std::string& tag) {
  const auto it = std::find_if(results.begin(), results.end(), [&](const CheckResult& r) { return r.tag == tag; });
  REQUIRE(it != results.end());
  return *it;
}

}  // namespace

TEST_CASE("the invariant suite passes on short paths") {
  CheckOptions options;
  options.max_len = 5;
  options.k_max = 2;
  const auto results = run_checks(options);
  CHECK(results.size() == 19);
  for (const auto& r : results) {
    INFO(r.tag);
    CHECK(r.passed());
    CHECK(r.instances > 0);
  }
  const auto report = format_report(results);
  CHECK(report.find("PASS lattice") != std::string::npos);
  CHECK(report.find("FAIL") == std::string::npos);
}

TEST_CASE("an injected fault is reported") {
  CheckOptions options;
  options.max_len = 4;
  options.k_max = 1;
  options.fault = Fault::kMeetIsMax;
  const auto results = run_checks(options);
  CHECK_FALSE(find(results, "meet").passed());
  CHECK(find(results, "join").passed());
  CHECK(format_report(results).find("FAIL meet") != std::string::npos);
}
