#pragma once

// Named verification suites over the fixtures, shared by the command line
// tool and the acceptance driver.

#include <string>
#include <vector>

#include "dix/kernels.hpp"

namespace dix {

struct SuiteCase {
  std::string id;
  bool pass = false;
  std::string detail;
  friend bool operator==(const SuiteCase&, const SuiteCase&) = default;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteCase> cases;
  bool all_pass = true;

  void add(std::string id, bool pass, std::string detail = {});
  friend bool operator==(const SuiteReport&, const SuiteReport&) = default;
};

struct SuiteOptions {
  // Parameter bound for the springer suite.
  int springer_max = 3;
  // Largest n for the SU(n,1) suites.
  int su_max_n = 6;
  // Random trials per family where a suite samples.
  int trials = 20;
  unsigned seed = 20240611;
  kernels::Exec exec = kernels::Exec::Parallel;
};

const std::vector<std::string>& suite_names();

// Throws UnknownSuite.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

// Dimension of the irreducible U(n)-module of highest weight mu (weakly
// decreasing, integral differences), by counting Gelfand-Tsetlin patterns.
long gelfand_tsetlin_count(const std::vector<long>& mu);

}  // namespace dix
