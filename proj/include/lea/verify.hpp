#pragma once

#include <functional>
#include <string>

namespace lea {

// Runs the randomized oracle suites (success model DP vs enumeration,
// prefix optimality, two-value sufficiency, coding decodability) with a
// fixed seed.  Reports each check through the callback and returns the
// number of failures.
int run_verification(const std::function<void(const std::string& name, bool ok)>& report);

}  // namespace lea
