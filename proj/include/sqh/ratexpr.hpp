#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sqh/poly.hpp"

namespace sqh {

// Exact rational function N / D over Q in the fixed variable layout.
//
// The denominator is kept factored: a sorted list of certified-irreducible
// atoms with multiplicities, times an optional "general" polynomial that is
// coprime to every atom. Atoms and the general part carry no monomial content
// and have leading coefficient 1, so the expanded pair (N, D) is canonical.
class RatExpr {
 public:
  struct Factor {
    Poly p;
    int mult;
    bool operator==(const Factor& o) const { return mult == o.mult && p == o.p; }
  };

  RatExpr() = default;
  RatExpr(int c) : num_(c) {}
  RatExpr(const Rational& c) : num_(c) {}
  RatExpr(Poly p) : num_(std::move(p)) {}
  static RatExpr of(Var v, int exp = 1);
  static RatExpr fraction(const Poly& num, const Poly& den);

  const Poly& num() const { return num_; }
  Poly den() const;  // expanded
  const std::vector<Factor>& factors() const { return factors_; }
  const Poly& general() const { return general_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return factors_.empty() && general_.is_one(); }
  bool is_constant() const { return is_polynomial() && num_.is_constant(); }
  Rational constant_value() const;  // requires is_constant()
  bool uses(int slot) const;
  bool uses(Var v) const { return uses(v.slot()); }

  RatExpr operator-() const;
  RatExpr& operator+=(const RatExpr& o) { return *this = *this + o; }
  RatExpr& operator-=(const RatExpr& o) { return *this = *this - o; }
  RatExpr& operator*=(const RatExpr& o) { return *this = *this * o; }
  RatExpr& operator/=(const RatExpr& o) { return *this = *this / o; }
  friend RatExpr operator+(const RatExpr& a, const RatExpr& b);
  friend RatExpr operator-(const RatExpr& a, const RatExpr& b);
  friend RatExpr operator*(const RatExpr& a, const RatExpr& b);
  friend RatExpr operator/(const RatExpr& a, const RatExpr& b);
  friend bool operator==(const RatExpr& a, const RatExpr& b);

  RatExpr inverse() const;
  RatExpr pow(int k) const;

  std::uint64_t eval_mod(const std::array<std::uint64_t, kSlots>& point) const;
  Rational eval(const std::map<int, Rational>& values) const;  // every used slot must be given

  // Canonical text "(num)/(den)" with both sides expanded.
  std::string str() const;

 private:
  friend class RatExprAccess;
  Poly num_;
  std::vector<Factor> factors_;
  Poly general_{1};
};

// Idempotent canonicalization; values are always stored canonical.
RatExpr normalize(const RatExpr& x);

// Substitution of variables by expressions; slots absent from the map stay.
RatExpr substitute(const RatExpr& x, const std::map<int, RatExpr>& map);

// Image of x under a Laurent monomial automorphism: slot i is sent to
// sign[i] * image[i], where image[i] is a monomial. The map must be
// invertible on the Laurent lattice (Weyl actions, Toda rescalings).
struct MonomialMap {
  std::array<Monomial, kSlots> image;
  std::array<int, kSlots> sign;
  MonomialMap();
  void send(int slot, const Monomial& m, int s = 1) {
    image[slot] = m;
    sign[slot] = s;
  }
  Monomial apply(const Monomial& m, int* sign_out) const;
};
RatExpr apply(const MonomialMap& f, const RatExpr& x);
Poly apply(const MonomialMap& f, const Poly& p);

// Limit as hbar -> infinity (hbar^(1/2) = s counts as half a degree).
RatExpr limit_hbar_inf(const RatExpr& x);

// Exponent (in half units) of the dominant hbar power: deg(num) - deg(den).
int hbar_half_degree(const RatExpr& x);

}  // namespace sqh
