#pragma once

// Every published value the library can recompute, as a flat list of
// named checks in dependency order.

#include <string>
#include <vector>

#include "fermat/json_io.hpp"

namespace fermat::cli {

struct Check {
  std::string group;
  std::string name;
  bool passed = false;
  std::string detail;
};

std::vector<Check> reference_checks();

/// Basis validation of every listed cohomology basis in the reference tables.
std::vector<Check> basis_checks();

bool all_passed(const std::vector<Check>& checks);

Json to_json(const std::vector<Check>& checks);

}  // namespace fermat::cli
