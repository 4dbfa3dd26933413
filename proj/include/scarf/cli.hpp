#pragma once

#include <string>
#include <vector>

namespace scarf {

/// Runs one CLI invocation. Exit status: 0 success, 1 falsified property or
/// internal inconsistency, 2 input error.
int run(const std::vector<std::string>& args);

}  // namespace scarf
