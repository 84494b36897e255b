#pragma once

#include <map>
#include <string>

#include <doctest.h>

#include "oracle_values.hpp"
#include "sqh/ratexpr.hpp"
#include "sqh/textio.hpp"

namespace test {

inline sqh::RatExpr rx(const std::string& s) { return sqh::parse_ratexpr(s); }
inline sqh::RatExpr v(sqh::Var x) { return sqh::RatExpr::of(x); }

inline std::map<int, sqh::Rational> at(const oracle::Point& point) {
  std::map<int, sqh::Rational> m;
  for (const auto& [name, value] : point) {
    auto var = sqh::Var::parse(name);
    REQUIRE_MESSAGE(var.has_value(), "unknown variable " << name);
    m[var->slot()] = sqh::Rational::parse(value);
  }
  return m;
}

}  // namespace test

// Lets CHECK(a == b) print both sides in canonical text.
namespace doctest {
template <>
struct StringMaker<sqh::RatExpr> {
  static String convert(const sqh::RatExpr& x) { return sqh::to_text(x).c_str(); }
};
template <>
struct StringMaker<sqh::Rational> {
  static String convert(const sqh::Rational& x) { return x.str().c_str(); }
};
}  // namespace doctest
