#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sqh/errors.hpp"
#include "sqh/report.hpp"
#include "sqh/rootdata.hpp"
#include "sqh/weyl.hpp"

namespace sqh {

struct KRange {
  int lo = 1;
  int hi = 1;
};

// "3" or "2..4".
KRange parse_k_range(const std::string& spec);

// Without a family or rank every suite runs its default instances (the
// acceptance ranks). With them, the suite runs the matching single instance.
struct SuiteConfig {
  std::optional<Family> family;
  std::optional<int> rank;
  std::optional<std::string> weight;
  std::optional<KRange> k;
  int jobs = 1;
  std::size_t max_weyl = kDefaultMaxWeyl;
  double timeout_seconds = 0;  // 0 disables the cap
  // Called from the worker threads as each task finishes, with the task's
  // position in the fixed order. Must be thread safe.
  std::function<void(std::size_t, const std::vector<VerifyReport>&)> on_task_done;
};

// The time cap stopped a run between tasks; carries what finished, in order.
struct SuiteTimeout : ResourceError {
  SuiteTimeout(const std::string& what, std::vector<VerifyReport> done)
      : ResourceError(what), completed(std::move(done)) {}
  std::vector<VerifyReport> completed;
};

// traces, eigencolumn, automorphism, matching, appendixB, typeD, oddvanish,
// toda, cm, hamiltonian, tracefree, classical; "all" runs them in this order.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// Reports come back in a fixed order whatever the number of jobs.
// DomainError for a bad configuration, ResourceError when the Weyl bound is
// hit, SuiteTimeout when the time cap is. Unexpected failures inside a check become failing
// reports rather than exceptions.
std::vector<VerifyReport> run_suite(const std::string& name, const SuiteConfig& cfg);

}  // namespace sqh
