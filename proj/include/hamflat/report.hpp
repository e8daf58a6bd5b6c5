#ifndef HAMFLAT_REPORT_HPP
#define HAMFLAT_REPORT_HPP

#include <string>
#include <string_view>

#include "hamflat/verification.hpp"
#include "json.hpp"

namespace hamflat {

// How many nonzero residuals a report lists per check; the rest is folded
// into failure_count.
inline constexpr int kMaxReportedFailures = 8;

// FNV-1a 64-bit content digest, hex-encoded with a "fnv1a64:" prefix.
std::string content_digest(std::string_view bytes);

nlohmann::ordered_json check_to_json(const CheckResult& check);
nlohmann::ordered_json verification_to_json(const VerificationReport& report);

}  // namespace hamflat

#endif
