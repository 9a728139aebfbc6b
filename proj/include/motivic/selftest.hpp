#pragma once

#include <string>
#include <vector>

namespace motivic {

struct SelftestCheck {
  std::string name;
  bool pass = false;
  std::string detail;  // empty on pass, failure reason otherwise
};

// Named internal consistency checks. The quick suite runs in a few seconds;
// full adds the heavier cross-validations.
std::vector<SelftestCheck> run_selftest(bool full);

}  // namespace motivic
