#pragma once

#include <string>
#include <vector>

#include "sqh/matrix.hpp"
#include "sqh/report.hpp"
#include "sqh/weyl.hpp"

namespace sqh {

// Element sum_w f_w w of the skew group algebra, coefficients over the
// context's element order. w f = w(f) w, with w moving q and p together.
struct SkewElem {
  std::vector<RatExpr> coeff;

  static SkewElem zero(const WeylContext& ctx);
  static SkewElem scalar(const WeylContext& ctx, const RatExpr& f);
  static SkewElem group(const WeylContext& ctx, const WeylElem& w);

  bool is_zero() const;
  bool operator==(const SkewElem& o) const;
  SkewElem operator+(const SkewElem& o) const;
  SkewElem operator-(const SkewElem& o) const;
  RatExpr sum_of_coefficients() const;
};

// p_lambda - hbar sum_{a > 0} <lambda, a^v> q^a / (1 - q^a) s_a.
SkewElem dunkl(const WeylContext& ctx, const Weight& lambda);
SkewElem skew_mul(const WeylContext& ctx, const SkewElem& a, const SkewElem& b);
SkewElem skew_pow(const WeylContext& ctx, const SkewElem& a, int k);

// f(Dun) for f a polynomial in p_1..p_n: each monomial becomes the product
// Dun_{e_1}^{m_1} Dun_{e_2}^{m_2} ... taken left to right.
SkewElem eval_on_dunkl(const WeylContext& ctx, const Poly& f);

// D(f, hbar) for f = sum_{u in W^lambda} p_{u lambda}^k.
RatExpr radial_part(const WeylContext& ctx, const Weight& lambda, int k);

// Theta(lambda) with Delta_{u lambda} -> p_{u lambda}.
SymMatrix y_matrix(const WeylContext& ctx, const Weight& lambda);

// p_lambda -> p_lambda + hbar sum <lambda, a^v> q^a / (1 - q^a); q fixed.
RatExpr gauge_classical(const RatExpr& x, const RootSystem& rs);

// Right regular representation: column w holds w * x expanded in the basis.
SymMatrix right_regular(const WeylContext& ctx, const SkewElem& x);

VerifyReport verify_cm_corollary(const WeylContext& ctx, const Weight& lambda, int k, const std::string& weight_label);
VerifyReport verify_hamiltonian(const WeylContext& ctx, const Weight& lambda, const std::string& weight_label);
VerifyReport verify_tracefree(const WeylContext& ctx, const Weight& lambda, int k, const std::string& weight_label);
// [Dun_a, Dun_b] = 0 over all pairs of fundamental weights.
VerifyReport verify_dunkl_commutativity(const WeylContext& ctx);

}  // namespace sqh
