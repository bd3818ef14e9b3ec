#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace egstab {

inline constexpr int kReportSchemaVersion = 1;

struct Violation {
  std::string graph6;
  std::string diagnosis;
  friend bool operator==(const Violation&, const Violation&) = default;
  friend auto operator<=>(const Violation&, const Violation&) = default;
};

/// Every checked item lands in exactly one outcome bucket, so
/// checked == sum(outcomes).  Stats are free-form counters.
struct VerificationReport {
  std::string theorem;
  std::vector<std::pair<std::string, std::string>> params;
  std::int64_t checked = 0;
  std::map<std::string, std::int64_t> outcomes;
  std::map<std::string, std::int64_t> stats;
  std::vector<Violation> violations;
  std::vector<std::string> findings;
  std::int64_t runtime_ms = 0;
  std::string coverage_mode = "exhaustive";

  void record(const std::string& outcome) {
    ++checked;
    ++outcomes[outcome];
  }
  void fail(const std::string& graph6, const std::string& diagnosis) {
    record("violation");
    violations.push_back({graph6, diagnosis});
  }
  void param(const std::string& key, const std::string& value) { params.emplace_back(key, value); }
  void param(const std::string& key, long long value) { params.emplace_back(key, std::to_string(value)); }
  std::string param_value(const std::string& key) const;

  /// Adds counts, violations and findings of `other` (in that order).
  void merge(const VerificationReport& other);
  /// Sorts violations so the output does not depend on scheduling.
  void finalize();
  bool consistent() const;
  bool ok() const { return violations.empty(); }
};

std::string report_to_json(const VerificationReport& r);
VerificationReport report_from_json(const std::string& text);
std::string reports_to_json(const std::vector<VerificationReport>& rs);
std::string reports_to_csv(const std::vector<VerificationReport>& rs);
std::string report_to_text(const VerificationReport& r);

}  // namespace egstab
