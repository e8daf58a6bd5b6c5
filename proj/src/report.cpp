#include "hamflat/report.hpp"

#include <cstdint>

#include "hamflat/parse.hpp"

namespace hamflat {

std::string content_digest(std::string_view bytes) {
  uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return std::string("fnv1a64:") + buf;
}

nlohmann::ordered_json check_to_json(const CheckResult& check) {
  nlohmann::ordered_json j;
  j["name"] = check.name;
  j["verdict"] = check.pass ? "pass" : "fail";
  j["failure_count"] = check.failures.size();
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  int listed = 0;
  for (const auto& f : check.failures) {
    if (listed++ >= kMaxReportedFailures) break;
    nlohmann::ordered_json entry;
    entry["indices"] = f.indices;
    entry["residual"] = print_canonical(f.residual);
    failures.push_back(std::move(entry));
  }
  j["failures"] = std::move(failures);
  return j;
}

nlohmann::ordered_json verification_to_json(const VerificationReport& report) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) checks.push_back(check_to_json(c));
  return checks;
}

}  // namespace hamflat
