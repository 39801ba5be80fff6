#include "matchfactory/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace matchfactory {

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) {
    return c.status == CheckResult::Status::kPass;
  });
}

bool VerificationReport::any_fail() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) {
    return c.status == CheckResult::Status::kFail;
  });
}

bool VerificationReport::any_unknown() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) {
    return c.status == CheckResult::Status::kUnknown;
  });
}

int VerificationReport::exit_code() const {
  if (any_fail()) return 1;
  if (any_unknown()) return 2;
  return 0;
}

CheckResult make_check(const std::string& claim, const std::string& anchor,
                       const std::string& expected,
                       const std::string& computed, double seconds) {
  CheckResult c;
  c.claim = claim;
  c.anchor = anchor;
  c.expected = expected;
  c.computed = computed;
  c.seconds = seconds;
  c.status = expected == computed ? CheckResult::Status::kPass
                                  : CheckResult::Status::kFail;
  return c;
}

namespace {

const char* status_name(CheckResult::Status s) {
  switch (s) {
    case CheckResult::Status::kPass: return "pass";
    case CheckResult::Status::kFail: return "fail";
    case CheckResult::Status::kUnknown: return "unknown";
  }
  return "?";
}

}  // namespace

std::string to_json(const VerificationReport& report) {
  nlohmann::json doc;
  doc["schema_version"] = VerificationReport::kSchemaVersion;
  doc["subject"] = report.subject;
  doc["total_seconds"] = report.total_seconds;
  doc["search"] = {{"nodes", report.search_stats.nodes},
                   {"matchings_enumerated",
                    report.search_stats.matchings_enumerated},
                   {"seconds", report.search_stats.seconds}};
  doc["checks"] = nlohmann::json::array();
  for (const CheckResult& c : report.checks)
    doc["checks"].push_back({{"claim", c.claim},
                             {"anchor", c.anchor},
                             {"expected", c.expected},
                             {"computed", c.computed},
                             {"verdict", status_name(c.status)},
                             {"seconds", c.seconds}});
  doc["exit_code"] = report.exit_code();
  return doc.dump(2) + "\n";
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "subject: " << report.subject << "\n";
  std::size_t wc = 5, we = 8;
  for (const CheckResult& c : report.checks) {
    wc = std::max(wc, c.claim.size());
    we = std::max(we, c.expected.size());
  }
  for (const CheckResult& c : report.checks)
    out << "  " << std::left << std::setw(static_cast<int>(wc)) << c.claim
        << "  expected=" << std::setw(static_cast<int>(we)) << c.expected
        << "  computed=" << std::setw(static_cast<int>(we)) << c.computed
        << "  " << status_name(c.status) << "  [" << c.anchor << "]\n";
  out << (report.any_fail()
              ? "result: FAIL"
              : (report.any_unknown() ? "result: UNKNOWN" : "result: PASS"))
      << "\n";
  return out.str();
}

}  // namespace matchfactory
