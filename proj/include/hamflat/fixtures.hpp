#ifndef HAMFLAT_FIXTURES_HPP
#define HAMFLAT_FIXTURES_HPP

#include <string>
#include <vector>

#include "hamflat/problem.hpp"

namespace hamflat {

// Built-in problem corpus: the three polynomial solutions of the scalar
// associativity reduction, the f = 0 ansatz, and the scalar cubic operator
// generating the Hopf flow. Identical copies ship in fixtures/.
std::vector<std::string> fixture_names();
bool is_fixture(const std::string& name);
const std::string& fixture_json(const std::string& name);
Problem fixture_problem(const std::string& name);

}  // namespace hamflat

#endif
