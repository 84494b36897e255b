#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sqh/rational.hpp"
#include "sqh/variables.hpp"

namespace sqh {

// Laurent monomial over the fixed variable layout. The s slot is kept in
// {0, 1} by rewriting s^2 -> hbar whenever a product produces it.
struct Monomial {
  std::array<std::int8_t, kSlots> e{};
  std::int16_t deg = 0;

  static Monomial of(Var v, int exp = 1);

  int operator[](int slot) const { return e[slot]; }
  bool is_one() const { return deg == 0 && *this == Monomial{}; }
  bool uses(int slot) const { return e[slot] != 0; }
  bool has_negative() const;

  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;
  Monomial pow(int k) const;
  void set(int slot, int value);

  bool operator==(const Monomial& o) const { return e == o.e; }
  std::size_t hash() const;
};

// Graded lex: total degree first, then exponents from the highest slot down.
int compare(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
  Monomial m;
  Rational c;
};

// Sparse Laurent polynomial over Q, terms sorted by decreasing monomial.
class Poly {
 public:
  Poly() = default;
  Poly(int c) : Poly(Rational(c)) {}
  Poly(const Rational& c);
  static Poly of(Var v, int exp = 1);
  static Poly monomial(const Monomial& m, const Rational& c = Rational(1));
  static Poly from_terms(std::vector<Term> terms);  // any order, merges duplicates

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].m.is_one() && terms_[0].c.is_one(); }
  bool is_monomial() const { return terms_.size() == 1; }
  Rational constant_term() const;
  const Term& lead() const { return terms_.front(); }

  Poly operator-() const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);

  Poly scaled(const Rational& c) const;
  Poly shifted(const Monomial& m) const;  // multiply by a monomial
  Poly pow(unsigned k) const;

  bool uses(int slot) const;
  bool uses_any_of(const std::array<bool, kSlots>& mask) const;
  int min_exp(int slot) const;
  int max_exp(int slot) const;
  Monomial content() const;  // slotwise minimum exponent (gcd of the terms)
  Poly coeff(int slot, int exp) const;  // part with x_slot^exp, with that slot zeroed

  // Strip monomial content and make the leading coefficient 1; the removed
  // unit is returned through the optional out-parameters.
  Poly normalized(Rational* unit_c = nullptr, Monomial* unit_m = nullptr) const;

  std::uint64_t eval_mod(const std::array<std::uint64_t, kSlots>& point) const;
  std::string str() const;

 private:
  std::vector<Term> terms_;
};

int compare(const Poly& a, const Poly& b);  // total order used to sort factor lists

// a / b when b divides a in the Laurent ring, otherwise nullopt.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);
// Cheap modular rejection followed by exact division.
std::optional<Poly> try_divide(const Poly& a, const Poly& b);
// Normalized gcd (no monomial content, leading coefficient 1).
Poly gcd(const Poly& a, const Poly& b);

// Fixed pseudo-random evaluation point (nonzero residues) for prefilters.
const std::array<std::uint64_t, kSlots>& default_mod_point(int which = 0);

}  // namespace sqh
