#pragma once

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

#include "sqh/matrix.hpp"
#include "sqh/rootdata.hpp"

namespace sqh {

struct VerifyReport {
  std::string suite;
  std::string instance;  // "A3 lambda=-e1 k=2"
  bool pass = false;
  std::string detail;      // first counterexample, empty on success
  std::string reproducer;  // CLI invocation that reruns this instance
  double seconds = 0;      // wall time; kept out of deterministic output

  nlohmann::json to_json(bool with_time = false) const;
  std::string line() const;  // "PASS  traces  A3 lambda=-e1 k=2"
};

VerifyReport report_from_json(const nlohmann::json& j);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Records a mismatch between two expressions in the report's detail field.
void fail_with(VerifyReport& r, const std::string& where, const RatExpr& lhs, const RatExpr& rhs);
// Compares two matrices; on mismatch records the first differing entry.
bool expect_equal(VerifyReport& r, const std::string& where, const SymMatrix& lhs, const SymMatrix& rhs);
bool expect_equal(VerifyReport& r, const std::string& where, const RatExpr& lhs, const RatExpr& rhs);

// "A3 lambda=-e1 k=2" and the matching CLI rerun line; k = 0 omits --k.
std::string instance_name(const RootSystem& rs, const std::string& weight, int k = 0);
std::string reproducer(const std::string& suite, const RootSystem& rs, const std::string& weight = "", int k = 0);

bool all_pass(const std::vector<VerifyReport>& rs);

}  // namespace sqh
