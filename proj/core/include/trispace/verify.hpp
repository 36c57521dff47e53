#pragma once

#include <iosfwd>
#include <string>

namespace trispace {

/// Runs one of the invariant suites {spaces, bounds, oracles, sweep-smoke},
/// printing one line per check. Returns 0 on pass, 1 on any failure,
/// 2 for an unknown suite name.
int run_verify_suite(const std::string& name, std::ostream& log);

}  // namespace trispace
