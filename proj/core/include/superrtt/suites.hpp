#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "superrtt/matrix.hpp"
#include "superrtt/report.hpp"

namespace superrtt {

/// One check of a suite. Expected-negative checks pass when the residual is
/// nonzero, i.e. when a stated failure is reproduced.
struct Check {
  VerificationReport report;
  bool expect_nonzero = false;

  bool passed() const { return expect_nonzero ? !report.passed : report.passed; }
};

struct SuiteReport {
  std::string name;
  std::vector<Check> checks;
  double seconds = 0;

  bool passed() const {
    for (const auto& c : checks) {
      if (!c.passed()) return false;
    }
    return true;
  }
};

struct SuiteOptions {
  std::size_t probe_degree = 4;
  std::string only;                       ///< restrict to checks with this tag
  std::optional<GradedMatrix> matrix;     ///< ybe/braid: test this matrix only
  std::string matrix_name;
  std::optional<bool> graded;             ///< ybe/braid with a custom matrix
  bool parallel = true;
};

std::vector<std::string> suite_names();

/// Runs a named suite; "all" runs every suite. Throws UnknownSuite.
std::vector<SuiteReport> run_suite(std::string_view name, const SuiteOptions& options = {});

/// Named matrices for the command line: Rpq, Rh1h2, Rh1, Rh2, P, I.
std::optional<GradedMatrix> named_matrix(std::string_view name);

}  // namespace superrtt
