#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace salg {

struct AxiomCheck {
  std::string axiom;
  bool ok = true;
  std::string witness;
};

struct CheckReport {
  std::vector<AxiomCheck> checks;

  bool valid() const {
    return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.ok; });
  }
};

}  // namespace salg
