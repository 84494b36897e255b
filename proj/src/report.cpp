#include "sqh/report.hpp"

#include "sqh/textio.hpp"

namespace sqh {

namespace {

constexpr std::size_t kMaxShown = 4000;

std::string clip(std::string s) {
  if (s.size() > kMaxShown) s = s.substr(0, kMaxShown) + " ...[" + std::to_string(s.size()) + " chars]";
  return s;
}

}  // namespace

nlohmann::json VerifyReport::to_json(bool with_time) const {
  nlohmann::json j = {{"suite", suite}, {"instance", instance}, {"pass", pass}, {"reproducer", reproducer}};
  if (!detail.empty()) j["detail"] = detail;
  if (with_time) j["seconds"] = seconds;
  return j;
}

VerifyReport report_from_json(const nlohmann::json& j) {
  VerifyReport r;
  r.suite = j.at("suite").get<std::string>();
  r.instance = j.at("instance").get<std::string>();
  r.pass = j.at("pass").get<bool>();
  r.reproducer = j.value("reproducer", "");
  r.detail = j.value("detail", "");
  r.seconds = j.value("seconds", 0.0);
  return r;
}

std::string VerifyReport::line() const {
  std::string s = std::string(pass ? "PASS" : "FAIL") + "  " + suite + "  " + instance;
  if (!pass) {
    if (!detail.empty()) s += "\n      " + detail;
    if (!reproducer.empty()) s += "\n      rerun: " + reproducer;
  }
  return s;
}

void fail_with(VerifyReport& r, const std::string& where, const RatExpr& lhs, const RatExpr& rhs) {
  r.pass = false;
  if (!r.detail.empty()) return;  // keep the first counterexample
  r.detail = where + ": lhs = " + clip(to_text(lhs)) + " ; rhs = " + clip(to_text(rhs));
}

bool expect_equal(VerifyReport& r, const std::string& where, const RatExpr& lhs, const RatExpr& rhs) {
  if (lhs == rhs) return true;
  fail_with(r, where, lhs, rhs);
  return false;
}

bool expect_equal(VerifyReport& r, const std::string& where, const SymMatrix& lhs, const SymMatrix& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    r.pass = false;
    if (r.detail.empty())
      r.detail = where + ": shape " + std::to_string(lhs.rows()) + "x" + std::to_string(lhs.cols()) + " vs " +
                 std::to_string(rhs.rows()) + "x" + std::to_string(rhs.cols());
    return false;
  }
  auto d = first_difference(lhs, rhs);
  if (!d) return true;
  fail_with(r, where + " entry (" + std::to_string(d->first + 1) + "," + std::to_string(d->second + 1) + ")",
            lhs(d->first, d->second), rhs(d->first, d->second));
  return false;
}

std::string instance_name(const RootSystem& rs, const std::string& weight, int k) {
  std::string s = rs.name();
  if (!weight.empty()) s += " lambda=" + weight;
  if (k > 0) s += " k=" + std::to_string(k);
  return s;
}

std::string reproducer(const std::string& suite, const RootSystem& rs, const std::string& weight, int k) {
  std::string s = "sqh verify --suite " + suite + " --family " + family_name(rs.family) + " --rank " +
                  std::to_string(rs.rank);
  if (!weight.empty()) s += " --weight=" + weight;
  if (k > 0) s += " --k " + std::to_string(k);
  return s;
}

bool all_pass(const std::vector<VerifyReport>& rs) {
  for (const auto& r : rs)
    if (!r.pass) return false;
  return true;
}

}  // namespace sqh
