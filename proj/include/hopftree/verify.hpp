#pragma once

#include "hopftree/binary.hpp"
#include "hopftree/parallel.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace hopftree {

struct SuiteReport {
  std::string suite;
  std::vector<CheckLine> lines;

  bool ok() const;
  /// One "PASS name (n cases)" or "FAIL ..." line per check.
  std::string render() const;
};

/// counts, partitions, addends, hopf, labelled, duality, primitives,
/// permutations, binary.
const std::vector<std::string>& suite_names();

struct VerifyOptions {
  std::size_t maxdeg = 4;
  Exec exec = Exec::parallel;
  /// Enables the "broken" suite, a deliberately false claim used to test
  /// that failures propagate to the exit status.
  bool test_mode = false;
};

/// Runs one suite ("all" runs every suite in order). Bounds inside a suite
/// are derived from maxdeg; labelled families use min(maxdeg, 4). Throws
/// std::invalid_argument for unknown suites.
SuiteReport run_suite(const std::string& name, const VerifyOptions& options);

CheckLine to_check_line(std::string name, const SweepResult& r);

}  // namespace hopftree
