#ifndef HAMFLAT_PROBLEM_HPP
#define HAMFLAT_PROBLEM_HPP

#include <optional>
#include <string>
#include <variant>

#include "hamflat/hierarchy.hpp"
#include "hamflat/locality.hpp"
#include "hamflat/operators.hpp"
#include "hamflat/wdvv.hpp"

namespace hamflat {

class ProblemError : public std::runtime_error {
 public:
  explicit ProblemError(const std::string& what) : std::runtime_error(what) {}
};

// A wdvv problem as loaded from a file; when the potential was given as
// the three-field ansatz ("f" key), the reduction polynomial is kept so
// the scalar check can run.
struct WdvvInput {
  WdvvProblem problem;
  std::optional<Poly> ansatz_f;
};

struct Problem {
  std::string kind;  // wdvv | constant-form | general-form | flow | density
  std::string name;  // optional, empty when absent
  std::variant<WdvvInput, ConstantFormSpec, GeneralFormSpec, FlowSpec, Functional> data;
};

// Parses a problem document (JSON). Unknown keys are rejected; every
// polynomial is parsed against the declared dimension.
Problem load_problem_text(const std::string& text);
Problem load_problem_file(const std::string& path);

}  // namespace hamflat

#endif
