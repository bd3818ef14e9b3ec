#include "egstab/report.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace egstab {

using ojson = nlohmann::ordered_json;

std::string VerificationReport::param_value(const std::string& key) const {
  for (const auto& [k, v] : params)
    if (k == key) return v;
  return {};
}

void VerificationReport::merge(const VerificationReport& other) {
  checked += other.checked;
  for (const auto& [k, v] : other.outcomes) outcomes[k] += v;
  for (const auto& [k, v] : other.stats) stats[k] += v;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  findings.insert(findings.end(), other.findings.begin(), other.findings.end());
}

void VerificationReport::finalize() { std::stable_sort(violations.begin(), violations.end()); }

bool VerificationReport::consistent() const {
  std::int64_t sum = 0;
  for (const auto& [k, v] : outcomes) sum += v;
  auto it = outcomes.find("violation");
  std::int64_t bad = it == outcomes.end() ? 0 : it->second;
  return sum == checked && bad == static_cast<std::int64_t>(violations.size());
}

namespace {

ojson to_ojson(const VerificationReport& r) {
  ojson j;
  j["schema_version"] = kReportSchemaVersion;
  j["theorem"] = r.theorem;
  ojson params = ojson::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  ojson counts;
  counts["checked"] = r.checked;
  counts["violations"] = r.violations.size();
  counts["outcomes"] = ojson::object();
  for (const auto& [k, v] : r.outcomes) counts["outcomes"][k] = v;
  counts["stats"] = ojson::object();
  for (const auto& [k, v] : r.stats) counts["stats"][k] = v;
  j["counts"] = counts;
  j["violations"] = ojson::array();
  for (const auto& v : r.violations) j["violations"].push_back({{"graph6", v.graph6}, {"diagnosis", v.diagnosis}});
  j["findings"] = r.findings;
  j["runtime_ms"] = r.runtime_ms;
  j["coverage_mode"] = r.coverage_mode;
  return j;
}

VerificationReport from_ojson(const ojson& j) {
  VerificationReport r;
  r.theorem = j.at("theorem").get<std::string>();
  for (const auto& [k, v] : j.at("params").items()) r.params.emplace_back(k, v.get<std::string>());
  const auto& c = j.at("counts");
  r.checked = c.at("checked").get<std::int64_t>();
  for (const auto& [k, v] : c.at("outcomes").items()) r.outcomes[k] = v.get<std::int64_t>();
  for (const auto& [k, v] : c.at("stats").items()) r.stats[k] = v.get<std::int64_t>();
  for (const auto& v : j.at("violations")) r.violations.push_back({v.at("graph6"), v.at("diagnosis")});
  r.findings = j.at("findings").get<std::vector<std::string>>();
  r.runtime_ms = j.at("runtime_ms").get<std::int64_t>();
  r.coverage_mode = j.at("coverage_mode").get<std::string>();
  return r;
}

}  // namespace

std::string report_to_json(const VerificationReport& r) { return to_ojson(r).dump(2); }

VerificationReport report_from_json(const std::string& text) { return from_ojson(ojson::parse(text)); }

std::string reports_to_json(const std::vector<VerificationReport>& rs) {
  ojson arr = ojson::array();
  for (const auto& r : rs) arr.push_back(to_ojson(r));
  return arr.dump(2);
}

std::string reports_to_csv(const std::vector<VerificationReport>& rs) {
  std::ostringstream out;
  out << "theorem,n,k,checked,violations,coverage_mode,runtime_ms\n";
  for (const auto& r : rs) {
    out << r.theorem << ',' << r.param_value("n") << ',' << r.param_value("k") << ',' << r.checked << ','
        << r.violations.size() << ',' << r.coverage_mode << ',' << r.runtime_ms << '\n';
  }
  return out.str();
}

std::string report_to_text(const VerificationReport& r) {
  std::ostringstream out;
  out << r.theorem;
  for (const auto& [k, v] : r.params) out << ' ' << k << '=' << v;
  out << "\n  checked " << r.checked << ", violations " << r.violations.size() << " (" << r.coverage_mode << ", "
      << r.runtime_ms << " ms)\n";
  for (const auto& [k, v] : r.outcomes) out << "  " << k << ": " << v << '\n';
  for (const auto& [k, v] : r.stats) out << "  [" << k << "] " << v << '\n';
  for (const auto& f : r.findings) out << "  finding: " << f << '\n';
  for (const auto& v : r.violations) out << "  VIOLATION " << v.graph6 << ": " << v.diagnosis << '\n';
  return out.str();
}

}  // namespace egstab
