#pragma once

#include <string>
#include <vector>

#include "matchfactory/search.hpp"

namespace matchfactory {

/// One certified claim: what was checked, the claim's anchor id in the
/// project's claim catalog (see README), the expected and computed values.
struct CheckResult {
  std::string claim;
  std::string anchor;
  std::string expected;
  std::string computed;
  enum class Status { kPass, kFail, kUnknown } status = Status::kUnknown;
  double seconds = 0.0;
};

struct VerificationReport {
  static constexpr int kSchemaVersion = 1;
  std::string subject;   // graph identity: family/k/variant or file name
  std::vector<CheckResult> checks;
  SearchStats search_stats;
  double total_seconds = 0.0;

  bool all_pass() const;
  bool any_fail() const;
  bool any_unknown() const;

  /// 0 all pass, 1 any fail, 2 otherwise any unknown.
  int exit_code() const;
};

CheckResult make_check(const std::string& claim, const std::string& anchor,
                       const std::string& expected,
                       const std::string& computed, double seconds = 0.0);

std::string to_json(const VerificationReport& report);
std::string to_text(const VerificationReport& report);

}  // namespace matchfactory
