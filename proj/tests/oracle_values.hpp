#pragma once

// Generated by tests/oracles/derive.py; do not edit by hand.

#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Point = std::vector<std::pair<std::string, std::string>>;

inline const char* const kA3_printed_E1 = "(chi1 + chi2 + chi3)";
inline const char* const kA3_printed_E2 = "(chi1*chi2*q1^4*q2^2 - 2*chi1*chi2*q1^4*q2*q3 + chi1*chi2*q1^4*q3^2 - 2*chi1*chi2*q1^3*q2^3 + 2*chi1*chi2*q1^3*q2^2*q3 + 2*chi1*chi2*q1^3*q2*q3^2 - 2*chi1*chi2*q1^3*q3^3 + chi1*chi2*q1^2*q2^4 + 2*chi1*chi2*q1^2*q2^3*q3 - 6*chi1*chi2*q1^2*q2^2*q3^2 + 2*chi1*chi2*q1^2*q2*q3^3 + chi1*chi2*q1^2*q3^4 - 2*chi1*chi2*q1*q2^4*q3 + 2*chi1*chi2*q1*q2^3*q3^2 + 2*chi1*chi2*q1*q2^2*q3^3 - 2*chi1*chi2*q1*q2*q3^4 + chi1*chi2*q2^4*q3^2 - 2*chi1*chi2*q2^3*q3^3 + chi1*chi2*q2^2*q3^4 + chi1*chi3*q1^4*q2^2 - 2*chi1*chi3*q1^4*q2*q3 + chi1*chi3*q1^4*q3^2 - 2*chi1*chi3*q1^3*q2^3 + 2*chi1*chi3*q1^3*q2^2*q3 + 2*chi1*chi3*q1^3*q2*q3^2 - 2*chi1*chi3*q1^3*q3^3 + chi1*chi3*q1^2*q2^4 + 2*chi1*chi3*q1^2*q2^3*q3 - 6*chi1*chi3*q1^2*q2^2*q3^2 + 2*chi1*chi3*q1^2*q2*q3^3 + chi1*chi3*q1^2*q3^4 - 2*chi1*chi3*q1*q2^4*q3 + 2*chi1*chi3*q1*q2^3*q3^2 + 2*chi1*chi3*q1*q2^2*q3^3 - 2*chi1*chi3*q1*q2*q3^4 + chi1*chi3*q2^4*q3^2 - 2*chi1*chi3*q2^3*q3^3 + chi1*chi3*q2^2*q3^4 + chi2*chi3*q1^4*q2^2 - 2*chi2*chi3*q1^4*q2*q3 + chi2*chi3*q1^4*q3^2 - 2*chi2*chi3*q1^3*q2^3 + 2*chi2*chi3*q1^3*q2^2*q3 + 2*chi2*chi3*q1^3*q2*q3^2 - 2*chi2*chi3*q1^3*q3^3 + chi2*chi3*q1^2*q2^4 + 2*chi2*chi3*q1^2*q2^3*q3 - 6*chi2*chi3*q1^2*q2^2*q3^2 + 2*chi2*chi3*q1^2*q2*q3^3 + chi2*chi3*q1^2*q3^4 - 2*chi2*chi3*q1*q2^4*q3 + 2*chi2*chi3*q1*q2^3*q3^2 + 2*chi2*chi3*q1*q2^2*q3^3 - 2*chi2*chi3*q1*q2*q3^4 + chi2*chi3*q2^4*q3^2 - 2*chi2*chi3*q2^3*q3^3 + chi2*chi3*q2^2*q3^4 + h^2*q1^4*q2*q3 + h^2*q1^3*q2^3 - 3*h^2*q1^3*q2^2*q3 - 3*h^2*q1^3*q2*q3^2 + h^2*q1^3*q3^3 - 3*h^2*q1^2*q2^3*q3 + 12*h^2*q1^2*q2^2*q3^2 - 3*h^2*q1^2*q2*q3^3 + h^2*q1*q2^4*q3 - 3*h^2*q1*q2^3*q3^2 - 3*h^2*q1*q2^2*q3^3 + h^2*q1*q2*q3^4 + h^2*q2^3*q3^3)/(q1^4*q2^2 - 2*q1^4*q2*q3 + q1^4*q3^2 - 2*q1^3*q2^3 + 2*q1^3*q2^2*q3 + 2*q1^3*q2*q3^2 - 2*q1^3*q3^3 + q1^2*q2^4 + 2*q1^2*q2^3*q3 - 6*q1^2*q2^2*q3^2 + 2*q1^2*q2*q3^3 + q1^2*q3^4 - 2*q1*q2^4*q3 + 2*q1*q2^3*q3^2 + 2*q1*q2^2*q3^3 - 2*q1*q2*q3^4 + q2^4*q3^2 - 2*q2^3*q3^3 + q2^2*q3^4)";
inline const char* const kA3_printed_E3 = "(chi1*chi2*chi3*q1^4*q2^2 - 2*chi1*chi2*chi3*q1^4*q2*q3 + chi1*chi2*chi3*q1^4*q3^2 - 2*chi1*chi2*chi3*q1^3*q2^3 + 2*chi1*chi2*chi3*q1^3*q2^2*q3 + 2*chi1*chi2*chi3*q1^3*q2*q3^2 - 2*chi1*chi2*chi3*q1^3*q3^3 + chi1*chi2*chi3*q1^2*q2^4 + 2*chi1*chi2*chi3*q1^2*q2^3*q3 - 6*chi1*chi2*chi3*q1^2*q2^2*q3^2 + 2*chi1*chi2*chi3*q1^2*q2*q3^3 + chi1*chi2*chi3*q1^2*q3^4 - 2*chi1*chi2*chi3*q1*q2^4*q3 + 2*chi1*chi2*chi3*q1*q2^3*q3^2 + 2*chi1*chi2*chi3*q1*q2^2*q3^3 - 2*chi1*chi2*chi3*q1*q2*q3^4 + chi1*chi2*chi3*q2^4*q3^2 - 2*chi1*chi2*chi3*q2^3*q3^3 + chi1*chi2*chi3*q2^2*q3^4 + chi1*h^2*q1^4*q2*q3 - 2*chi1*h^2*q1^3*q2^2*q3 - 2*chi1*h^2*q1^3*q2*q3^2 + chi1*h^2*q1^2*q2^3*q3 + 4*chi1*h^2*q1^2*q2^2*q3^2 + chi1*h^2*q1^2*q2*q3^3 - 2*chi1*h^2*q1*q2^3*q3^2 - 2*chi1*h^2*q1*q2^2*q3^3 + chi1*h^2*q2^3*q3^3 + chi2*h^2*q1^3*q2^2*q3 - 2*chi2*h^2*q1^3*q2*q3^2 + chi2*h^2*q1^3*q3^3 - 2*chi2*h^2*q1^2*q2^3*q3 + 4*chi2*h^2*q1^2*q2^2*q3^2 - 2*chi2*h^2*q1^2*q2*q3^3 + chi2*h^2*q1*q2^4*q3 - 2*chi2*h^2*q1*q2^3*q3^2 + chi2*h^2*q1*q2^2*q3^3 + chi3*h^2*q1^3*q2^3 - 2*chi3*h^2*q1^3*q2^2*q3 + chi3*h^2*q1^3*q2*q3^2 - 2*chi3*h^2*q1^2*q2^3*q3 + 4*chi3*h^2*q1^2*q2^2*q3^2 - 2*chi3*h^2*q1^2*q2*q3^3 + chi3*h^2*q1*q2^3*q3^2 - 2*chi3*h^2*q1*q2^2*q3^3 + chi3*h^2*q1*q2*q3^4)/(q1^4*q2^2 - 2*q1^4*q2*q3 + q1^4*q3^2 - 2*q1^3*q2^3 + 2*q1^3*q2^2*q3 + 2*q1^3*q2*q3^2 - 2*q1^3*q3^3 + q1^2*q2^4 + 2*q1^2*q2^3*q3 - 6*q1^2*q2^2*q3^2 + 2*q1^2*q2*q3^3 + q1^2*q3^4 - 2*q1*q2^4*q3 + 2*q1*q2^3*q3^2 + 2*q1*q2^2*q3^3 - 2*q1*q2*q3^4 + q2^4*q3^2 - 2*q2^3*q3^3 + q2^2*q3^4)";
inline const char* const kSl2Radial1 = "(0)";
inline const char* const kSl2Radial2 = "(-4*h^2*q1*q2 + p1^2*q1^2 - 2*p1^2*q1*q2 + p1^2*q2^2 - 2*p1*p2*q1^2 + 4*p1*p2*q1*q2 - 2*p1*p2*q2^2 + p2^2*q1^2 - 2*p2^2*q1*q2 + p2^2*q2^2)/(2*q1^2 - 4*q1*q2 + 2*q2^2)";
inline const char* const kSl2Radial3 = "(0)";
inline const char* const kTridiag4 = "(a1*a3*b1*b3 - a1*b1*x3*x4 - a2*b2*x1*x4 - a3*b3*x1*x2 + x1*x2*x3*x4)";

// E_k of det(y + M(chi)) at a point.
struct CharSample {
  const char* family;
  int n;
  int k;
  Point point;
  const char* value;
};

inline const std::vector<CharSample> kCharSamples = {
  {"A", 3, 1, {{"h", "1/3"}, {"q1", "-5/3"}, {"q2", "2/3"}, {"q3", "-9/2"}, {"chi1", "-6"}, {"chi2", "4/3"}, {"chi3", "-7/2"}}, "-49/6"},
  {"A", 3, 2, {{"h", "1/3"}, {"q1", "-5/3"}, {"q2", "2/3"}, {"q3", "-9/2"}, {"chi1", "-6"}, {"chi2", "4/3"}, {"chi3", "-7/2"}}, "1029061427/122478489"},
  {"A", 3, 3, {{"h", "1/3"}, {"q1", "-5/3"}, {"q2", "2/3"}, {"q3", "-9/2"}, {"chi1", "-6"}, {"chi2", "4/3"}, {"chi3", "-7/2"}}, "495035225/17496927"},
  {"A", 3, 1, {{"h", "-6"}, {"q1", "-9/2"}, {"q2", "-3/4"}, {"q3", "1/2"}, {"chi1", "-2"}, {"chi2", "3"}, {"chi3", "2/3"}}, "5/3"},
  {"A", 3, 2, {{"h", "-6"}, {"q1", "-9/2"}, {"q2", "-3/4"}, {"q3", "1/2"}, {"chi1", "-2"}, {"chi2", "3"}, {"chi3", "2/3"}}, "-643/75"},
  {"A", 3, 3, {{"h", "-6"}, {"q1", "-9/2"}, {"q2", "-3/4"}, {"q3", "1/2"}, {"chi1", "-2"}, {"chi2", "3"}, {"chi3", "2/3"}}, "233/25"},
  {"A", 4, 1, {{"h", "3/2"}, {"q1", "-3/5"}, {"q2", "-5/4"}, {"q3", "-2"}, {"q4", "-3"}, {"chi1", "7/4"}, {"chi2", "-6/5"}, {"chi3", "-4"}, {"chi4", "8"}}, "91/20"},
  {"A", 4, 2, {{"h", "3/2"}, {"q1", "-3/5"}, {"q2", "-5/4"}, {"q3", "-2"}, {"q4", "-3"}, {"chi1", "7/4"}, {"chi2", "-6/5"}, {"chi3", "-4"}, {"chi4", "8"}}, "1139097/2649920"},
  {"A", 4, 3, {{"h", "3/2"}, {"q1", "-3/5"}, {"q2", "-5/4"}, {"q3", "-2"}, {"q4", "-3"}, {"chi1", "7/4"}, {"chi2", "-6/5"}, {"chi3", "-4"}, {"chi4", "8"}}, "125094043/1324960"},
  {"A", 4, 4, {{"h", "3/2"}, {"q1", "-3/5"}, {"q2", "-5/4"}, {"q3", "-2"}, {"q4", "-3"}, {"chi1", "7/4"}, {"chi2", "-6/5"}, {"chi3", "-4"}, {"chi4", "8"}}, "5625633809/64923040"},
  {"A", 4, 1, {{"h", "2/3"}, {"q1", "7/4"}, {"q2", "-8/5"}, {"q3", "-5"}, {"q4", "-1/3"}, {"chi1", "-9/5"}, {"chi2", "5/3"}, {"chi3", "1/2"}, {"chi4", "5/4"}}, "97/60"},
  {"A", 4, 2, {{"h", "2/3"}, {"q1", "7/4"}, {"q2", "-8/5"}, {"q3", "-5"}, {"q4", "-1/3"}, {"chi1", "-9/5"}, {"chi2", "5/3"}, {"chi3", "1/2"}, {"chi4", "5/4"}}, "-1787932756342903663/752819347899045000"},
  {"A", 4, 3, {{"h", "2/3"}, {"q1", "7/4"}, {"q2", "-8/5"}, {"q3", "-5"}, {"q4", "-1/3"}, {"chi1", "-9/5"}, {"chi2", "5/3"}, {"chi3", "1/2"}, {"chi4", "5/4"}}, "-1770494440453648234/282307255462141875"},
  {"A", 4, 4, {{"h", "2/3"}, {"q1", "7/4"}, {"q2", "-8/5"}, {"q3", "-5"}, {"q4", "-1/3"}, {"chi1", "-9/5"}, {"chi2", "5/3"}, {"chi3", "1/2"}, {"chi4", "5/4"}}, "-83262751094258177/26570094631731000"},
  {"B", 2, 1, {{"h", "-8"}, {"q1", "2"}, {"q2", "-4/3"}, {"chi1", "-8/5"}, {"chi2", "4"}}, "0"},
  {"B", 2, 2, {{"h", "-8"}, {"q1", "2"}, {"q2", "-4/3"}, {"chi1", "-8/5"}, {"chi2", "4"}}, "1055795248/1334025"},
  {"B", 2, 3, {{"h", "-8"}, {"q1", "2"}, {"q2", "-4/3"}, {"chi1", "-8/5"}, {"chi2", "4"}}, "0"},
  {"B", 2, 4, {{"h", "-8"}, {"q1", "2"}, {"q2", "-4/3"}, {"chi1", "-8/5"}, {"chi2", "4"}}, "336932592444416/4035425625"},
  {"B", 2, 1, {{"h", "-2"}, {"q1", "1/2"}, {"q2", "4/5"}, {"chi1", "-7/3"}, {"chi2", "1/4"}}, "0"},
  {"B", 2, 2, {{"h", "-2"}, {"q1", "1/2"}, {"q2", "4/5"}, {"chi1", "-7/3"}, {"chi2", "1/4"}}, "162079/1296"},
  {"B", 2, 3, {{"h", "-2"}, {"q1", "1/2"}, {"q2", "4/5"}, {"chi1", "-7/3"}, {"chi2", "1/4"}}, "0"},
  {"B", 2, 4, {{"h", "-2"}, {"q1", "1/2"}, {"q2", "4/5"}, {"chi1", "-7/3"}, {"chi2", "1/4"}}, "3599915/3888"},
  {"C", 2, 1, {{"h", "-2"}, {"q1", "9/4"}, {"q2", "8/3"}, {"chi1", "4/5"}, {"chi2", "-4"}}, "0"},
  {"C", 2, 2, {{"h", "-2"}, {"q1", "9/4"}, {"q2", "8/3"}, {"chi1", "4/5"}, {"chi2", "-4"}}, "6784/25"},
  {"C", 2, 3, {{"h", "-2"}, {"q1", "9/4"}, {"q2", "8/3"}, {"chi1", "4/5"}, {"chi2", "-4"}}, "0"},
  {"C", 2, 4, {{"h", "-2"}, {"q1", "9/4"}, {"q2", "8/3"}, {"chi1", "4/5"}, {"chi2", "-4"}}, "11998144/625"},
  {"C", 2, 1, {{"h", "7/2"}, {"q1", "-3/4"}, {"q2", "5"}, {"chi1", "-2"}, {"chi2", "9/2"}}, "0"},
  {"C", 2, 2, {{"h", "7/2"}, {"q1", "-3/4"}, {"q2", "5"}, {"chi1", "-2"}, {"chi2", "9/2"}}, "-369993731/12222016"},
  {"C", 2, 3, {{"h", "7/2"}, {"q1", "-3/4"}, {"q2", "5"}, {"chi1", "-2"}, {"chi2", "9/2"}}, "0"},
  {"C", 2, 4, {{"h", "7/2"}, {"q1", "-3/4"}, {"q2", "5"}, {"chi1", "-2"}, {"chi2", "9/2"}}, "289103066690557/2334026173504"},
  {"D", 2, 1, {{"h", "1/5"}, {"q1", "7/4"}, {"q2", "4/5"}, {"chi1", "-9/5"}, {"chi2", "-8/5"}}, "0"},
  {"D", 2, 2, {{"h", "1/5"}, {"q1", "7/4"}, {"q2", "4/5"}, {"chi1", "-9/5"}, {"chi2", "-8/5"}}, "-17963/3610"},
  {"D", 2, 3, {{"h", "1/5"}, {"q1", "7/4"}, {"q2", "4/5"}, {"chi1", "-9/5"}, {"chi2", "-8/5"}}, "0"},
  {"D", 2, 4, {{"h", "1/5"}, {"q1", "7/4"}, {"q2", "4/5"}, {"chi1", "-9/5"}, {"chi2", "-8/5"}}, "8755906329/1303210000"},
  {"D", 2, 1, {{"h", "8"}, {"q1", "5/2"}, {"q2", "-9"}, {"chi1", "7/3"}, {"chi2", "-2"}}, "0"},
  {"D", 2, 2, {{"h", "8"}, {"q1", "5/2"}, {"q2", "-9"}, {"chi1", "7/3"}, {"chi2", "-2"}}, "-383203525/10517049"},
  {"D", 2, 3, {{"h", "8"}, {"q1", "5/2"}, {"q2", "-9"}, {"chi1", "7/3"}, {"chi2", "-2"}}, "0"},
  {"D", 2, 4, {{"h", "8"}, {"q1", "5/2"}, {"q2", "-9"}, {"chi1", "7/3"}, {"chi2", "-2"}}, "2060275158184516/12289813296489"},
  {"B", 3, 1, {{"h", "-9/4"}, {"q1", "-4/3"}, {"q2", "3"}, {"q3", "-4/5"}, {"chi1", "-6"}, {"chi2", "1/2"}, {"chi3", "8/3"}}, "0"},
  {"B", 3, 2, {{"h", "-9/4"}, {"q1", "-4/3"}, {"q2", "3"}, {"q3", "-4/5"}, {"chi1", "-6"}, {"chi2", "1/2"}, {"chi3", "8/3"}}, "128359981797189137/49763430662400"},
  {"B", 3, 3, {{"h", "-9/4"}, {"q1", "-4/3"}, {"q2", "3"}, {"q3", "-4/5"}, {"chi1", "-6"}, {"chi2", "1/2"}, {"chi3", "8/3"}}, "0"},
  {"B", 3, 4, {{"h", "-9/4"}, {"q1", "-4/3"}, {"q2", "3"}, {"q3", "-4/5"}, {"chi1", "-6"}, {"chi2", "1/2"}, {"chi3", "8/3"}}, "165695301401798202577415613191/100275309009211714560000"},
  {"B", 3, 5, {{"h", "-9/4"}, {"q1", "-4/3"}, {"q2", "3"}, {"q3", "-4/5"}, {"chi1", "-6"}, {"chi2", "1/2"}, {"chi3", "8/3"}}, "0"},
  {"B", 3, 6, {{"h", "-9/4"}, {"q1", "-4/3"}, {"q2", "3"}, {"q3", "-4/5"}, {"chi1", "-6"}, {"chi2", "1/2"}, {"chi3", "8/3"}}, "43088995222026928077449956834841/9982964096917077360640000"},
  {"B", 3, 1, {{"h", "2"}, {"q1", "2/3"}, {"q2", "-5/4"}, {"q3", "3"}, {"chi1", "-4/5"}, {"chi2", "-1/2"}, {"chi3", "4/3"}}, "0"},
  {"B", 3, 2, {{"h", "2"}, {"q1", "2/3"}, {"q2", "-5/4"}, {"q3", "3"}, {"chi1", "-4/5"}, {"chi2", "-1/2"}, {"chi3", "4/3"}}, "15079280904736058/132524810001045"},
  {"B", 3, 3, {{"h", "2"}, {"q1", "2/3"}, {"q2", "-5/4"}, {"q3", "3"}, {"chi1", "-4/5"}, {"chi2", "-1/2"}, {"chi3", "4/3"}}, "0"},
  {"B", 3, 4, {{"h", "2"}, {"q1", "2/3"}, {"q2", "-5/4"}, {"q3", "3"}, {"chi1", "-4/5"}, {"chi2", "-1/2"}, {"chi3", "4/3"}}, "20849853651604927900948131120859/6244560094511316214364832720"},
  {"B", 3, 5, {{"h", "2"}, {"q1", "2/3"}, {"q2", "-5/4"}, {"q3", "3"}, {"chi1", "-4/5"}, {"chi2", "-1/2"}, {"chi3", "4/3"}}, "0"},
  {"B", 3, 6, {{"h", "2"}, {"q1", "2/3"}, {"q2", "-5/4"}, {"q3", "3"}, {"chi1", "-4/5"}, {"chi2", "-1/2"}, {"chi3", "4/3"}}, "5038558154179441645865008794881/390285005906957263397802045"},
  {"C", 3, 1, {{"h", "2"}, {"q1", "2/3"}, {"q2", "8/5"}, {"q3", "9"}, {"chi1", "-7"}, {"chi2", "-4"}, {"chi3", "-3"}}, "0"},
  {"C", 3, 2, {{"h", "2"}, {"q1", "2/3"}, {"q2", "8/5"}, {"q3", "9"}, {"chi1", "-7"}, {"chi2", "-4"}, {"chi3", "-3"}}, "51587306903408497/27101394810000"},
  {"C", 3, 3, {{"h", "2"}, {"q1", "2/3"}, {"q2", "8/5"}, {"q3", "9"}, {"chi1", "-7"}, {"chi2", "-4"}, {"chi3", "-3"}}, "0"},
  {"C", 3, 4, {{"h", "2"}, {"q1", "2/3"}, {"q2", "8/5"}, {"q3", "9"}, {"chi1", "-7"}, {"chi2", "-4"}, {"chi3", "-3"}}, "4525104342047538418306353294359/5100594448940937056250000"},
  {"C", 3, 5, {{"h", "2"}, {"q1", "2/3"}, {"q2", "8/5"}, {"q3", "9"}, {"chi1", "-7"}, {"chi2", "-4"}, {"chi3", "-3"}}, "0"},
  {"C", 3, 6, {{"h", "2"}, {"q1", "2/3"}, {"q2", "8/5"}, {"q3", "9"}, {"chi1", "-7"}, {"chi2", "-4"}, {"chi3", "-3"}}, "-267552312911355436798074594761/35420794784312062890625"},
  {"C", 3, 1, {{"h", "3/5"}, {"q1", "-4/5"}, {"q2", "-1/3"}, {"q3", "-7/2"}, {"chi1", "-9"}, {"chi2", "5"}, {"chi3", "-7/3"}}, "0"},
  {"C", 3, 2, {{"h", "3/5"}, {"q1", "-4/5"}, {"q2", "-1/3"}, {"q3", "-7/2"}, {"chi1", "-9"}, {"chi2", "5"}, {"chi3", "-7/3"}}, "-5492487442699/69347955600"},
  {"C", 3, 3, {{"h", "3/5"}, {"q1", "-4/5"}, {"q2", "-1/3"}, {"q3", "-7/2"}, {"chi1", "-9"}, {"chi2", "5"}, {"chi3", "-7/3"}}, "0"},
  {"C", 3, 4, {{"h", "3/5"}, {"q1", "-4/5"}, {"q2", "-1/3"}, {"q3", "-7/2"}, {"chi1", "-9"}, {"chi2", "5"}, {"chi3", "-7/3"}}, "2660797380423430263203/3757139801484040125"},
  {"C", 3, 5, {{"h", "3/5"}, {"q1", "-4/5"}, {"q2", "-1/3"}, {"q3", "-7/2"}, {"chi1", "-9"}, {"chi2", "5"}, {"chi3", "-7/3"}}, "0"},
  {"C", 3, 6, {{"h", "3/5"}, {"q1", "-4/5"}, {"q2", "-1/3"}, {"q3", "-7/2"}, {"chi1", "-9"}, {"chi2", "5"}, {"chi3", "-7/3"}}, "-12299269460173515654104471/214693702941945150000"},
  {"D", 3, 1, {{"h", "-5/2"}, {"q1", "2"}, {"q2", "-5"}, {"q3", "-3/2"}, {"chi1", "8/3"}, {"chi2", "7/4"}, {"chi3", "6/5"}}, "0"},
  {"D", 3, 2, {{"h", "-5/2"}, {"q1", "2"}, {"q2", "-5"}, {"q3", "-3/2"}, {"chi1", "8/3"}, {"chi2", "7/4"}, {"chi3", "6/5"}}, "-77415406493/7214407200"},
  {"D", 3, 3, {{"h", "-5/2"}, {"q1", "2"}, {"q2", "-5"}, {"q3", "-3/2"}, {"chi1", "8/3"}, {"chi2", "7/4"}, {"chi3", "6/5"}}, "0"},
  {"D", 3, 4, {{"h", "-5/2"}, {"q1", "2"}, {"q2", "-5"}, {"q3", "-3/2"}, {"chi1", "8/3"}, {"chi2", "7/4"}, {"chi3", "6/5"}}, "-6777615174145705507/185058386657464320"},
  {"D", 3, 5, {{"h", "-5/2"}, {"q1", "2"}, {"q2", "-5"}, {"q3", "-3/2"}, {"chi1", "8/3"}, {"chi2", "7/4"}, {"chi3", "6/5"}}, "0"},
  {"D", 3, 6, {{"h", "-5/2"}, {"q1", "2"}, {"q2", "-5"}, {"q3", "-3/2"}, {"chi1", "8/3"}, {"chi2", "7/4"}, {"chi3", "6/5"}}, "-210303241367135938849/1644963436955238400"},
  {"D", 3, 1, {{"h", "-6/5"}, {"q1", "9/4"}, {"q2", "9"}, {"q3", "5/3"}, {"chi1", "1/3"}, {"chi2", "7/5"}, {"chi3", "1/2"}}, "0"},
  {"D", 3, 2, {{"h", "-6/5"}, {"q1", "9/4"}, {"q2", "9"}, {"q3", "5/3"}, {"chi1", "1/3"}, {"chi2", "7/5"}, {"chi3", "1/2"}}, "35545747/1067220"},
  {"D", 3, 3, {{"h", "-6/5"}, {"q1", "9/4"}, {"q2", "9"}, {"q3", "5/3"}, {"chi1", "1/3"}, {"chi2", "7/5"}, {"chi3", "1/2"}}, "0"},
  {"D", 3, 4, {{"h", "-6/5"}, {"q1", "9/4"}, {"q2", "9"}, {"q3", "5/3"}, {"chi1", "1/3"}, {"chi2", "7/5"}, {"chi3", "1/2"}}, "16837013622959/79094342250"},
  {"D", 3, 5, {{"h", "-6/5"}, {"q1", "9/4"}, {"q2", "9"}, {"q3", "5/3"}, {"chi1", "1/3"}, {"chi2", "7/5"}, {"chi3", "1/2"}}, "0"},
  {"D", 3, 6, {{"h", "-6/5"}, {"q1", "9/4"}, {"q2", "9"}, {"q3", "5/3"}, {"chi1", "1/3"}, {"chi2", "7/5"}, {"chi3", "1/2"}}, "-12306130489/25826724"},
};

// Determinants of the anti-Cauchy and tridiagonal matrices at a point.
struct DetSample {
  const char* which;
  int n;
  Point point;
  const char* value;
};

inline const std::vector<DetSample> kDetSamples = {
  {"anticauchy", 2, {{"t1", "-3/4"}, {"t2", "1/2"}}, "16/25"},
  {"anticauchy", 3, {{"t1", "-2"}, {"t2", "3"}, {"t3", "-4/3"}}, "0"},
  {"anticauchy", 4, {{"t1", "-9/2"}, {"t2", "-8/5"}, {"t3", "5"}, {"t4", "6"}}, "6279710224225/52635271670289"},
  {"anticauchy", 5, {{"t1", "-3"}, {"t2", "-1/2"}, {"t3", "-9/4"}, {"t4", "6"}, {"t5", "2"}}, "0"},
  {"anticauchy", 6, {{"t1", "-3"}, {"t2", "-2"}, {"t3", "-6/5"}, {"t4", "4/3"}, {"t5", "2/5"}, {"t6", "7/2"}}, "36215977419991681/138923114576583744"},
  {"tridiag", 1, {{"x1", "4/3"}, {"a1", "-7/2"}, {"b1", "8/3"}}, "4/3"},
  {"tridiag", 2, {{"x1", "-2"}, {"x2", "-1/2"}, {"a1", "-3/4"}, {"a2", "7"}, {"b1", "3/2"}, {"b2", "-5"}}, "17/8"},
  {"tridiag", 3, {{"x1", "-5/4"}, {"x2", "7/4"}, {"x3", "4/3"}, {"a1", "-7"}, {"a2", "-2"}, {"a3", "9"}, {"b1", "3/5"}, {"b2", "8"}, {"b3", "-8/3"}}, "-1039/60"},
  {"tridiag", 4, {{"x1", "-9/4"}, {"x2", "3"}, {"x3", "-2"}, {"x4", "1/2"}, {"a1", "9"}, {"a2", "-5/3"}, {"a3", "-4"}, {"a4", "-8/5"}, {"b1", "1/3"}, {"b2", "4/5"}, {"b3", "-7"}, {"b4", "-3/4"}}, "1125/4"},
  {"tridiag", 5, {{"x1", "-6"}, {"x2", "2"}, {"x3", "5/4"}, {"x4", "-3"}, {"x5", "-7/3"}, {"a1", "7"}, {"a2", "7/2"}, {"a3", "1/3"}, {"a4", "3/4"}, {"a5", "-1/4"}, {"b1", "1/2"}, {"b2", "-4"}, {"b3", "8/5"}, {"b4", "-4/3"}, {"b5", "-3/2"}}, "-38083/45"},
  {"tridiag", 6, {{"x1", "7/5"}, {"x2", "-8/3"}, {"x3", "-3"}, {"x4", "2"}, {"x5", "6/5"}, {"x6", "-1/3"}, {"a1", "5/4"}, {"a2", "1/4"}, {"a3", "8"}, {"a4", "-5/2"}, {"a5", "5"}, {"a6", "-2/3"}, {"b1", "3/2"}, {"b2", "5/3"}, {"b3", "-3/5"}, {"b4", "6"}, {"b5", "-1/2"}, {"b6", "-8/5"}}, "-26072/375"},
};

}  // namespace oracle
