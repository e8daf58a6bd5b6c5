#include "hamflat/fixtures.hpp"

#include <array>
#include <utility>

namespace hamflat {

namespace {

const std::string kDubrovin1 = R"({
  "kind": "wdvv",
  "name": "dubrovin1",
  "N": 3,
  "eta": [[0, 0, 1], [0, 1, 0], [1, 0, 0]],
  "f": "1/4*u2^2*u3^2 + 1/60*u3^5"
}
)";

const std::string kDubrovin2 = R"({
  "kind": "wdvv",
  "name": "dubrovin2",
  "N": 3,
  "eta": [[0, 0, 1], [0, 1, 0], [1, 0, 0]],
  "f": "1/6*u2^3*u3 + 1/6*u2^2*u3^3 + 1/210*u3^7"
}
)";

const std::string kDubrovin3 = R"({
  "kind": "wdvv",
  "name": "dubrovin3",
  "N": 3,
  "eta": [[0, 0, 1], [0, 1, 0], [1, 0, 0]],
  "f": "1/6*u2^3*u3^2 + 1/20*u2^2*u3^5 + 1/3960*u3^11"
}
)";

const std::string kTrivial = R"({
  "kind": "wdvv",
  "name": "trivial",
  "N": 3,
  "eta": [[0, 0, 1], [0, 1, 0], [1, 0, 0]],
  "f": "0"
}
)";

const std::string kHopf = R"({
  "kind": "constant-form",
  "name": "hopf",
  "N": 1,
  "L": 1,
  "eta": [[1]],
  "mu": [[1]],
  "psis": ["1/6*u1^3"]
}
)";

const std::array<std::pair<const char*, const std::string*>, 5> kCorpus = {{
    {"dubrovin1", &kDubrovin1},
    {"dubrovin2", &kDubrovin2},
    {"dubrovin3", &kDubrovin3},
    {"trivial", &kTrivial},
    {"hopf", &kHopf},
}};

}  // namespace

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  names.reserve(kCorpus.size());
  for (const auto& [name, text] : kCorpus) {
    (void)text;
    names.emplace_back(name);
  }
  return names;
}

bool is_fixture(const std::string& name) {
  for (const auto& [known, text] : kCorpus) {
    (void)text;
    if (name == known) return true;
  }
  return false;
}

const std::string& fixture_json(const std::string& name) {
  for (const auto& [known, text] : kCorpus)
    if (name == known) return *text;
  throw ProblemError("unknown fixture '" + name + "'");
}

Problem fixture_problem(const std::string& name) {
  return load_problem_text(fixture_json(name));
}

}  // namespace hamflat
