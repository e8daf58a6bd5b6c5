#ifndef HAMFLAT_VERIFICATION_HPP
#define HAMFLAT_VERIFICATION_HPP

#include <string>
#include <vector>

#include "hamflat/poly.hpp"

namespace hamflat {

// One nonzero residual, addressed by its (1-based) index tuple.
struct CheckFailure {
  std::vector<int> indices;
  Poly residual;
};

struct CheckResult {
  std::string name;
  bool pass = true;
  std::vector<CheckFailure> failures;

  void record(std::vector<int> indices, Poly residual) {
    pass = false;
    failures.push_back({std::move(indices), std::move(residual)});
  }
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

class PreconditionError : public std::logic_error {
 public:
  explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace hamflat

#endif
