#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sqh/matrix.hpp"
#include "sqh/report.hpp"
#include "sqh/weyl.hpp"

namespace sqh {

// ---------------------------------------------------------------- linear forms

RatExpr eps_form(const Weight& lambda);   // sum lambda_i eps_i (the class of lambda)
RatExpr p_form(const Weight& lambda);     // sum lambda_i p_i
RatExpr x_form(const Weight& lambda);     // D_lambda = -sum lambda_i x_i, since x_i = D_{-e_i}
RatExpr chi_form(const Weight& lambda);   // Delta_lambda = -sum lambda_i chi_i
RatExpr q_power(const Coroot& beta);      // q^beta
RatExpr q_power(const Weight& beta_as_coords);

// hbar * sum_{alpha > 0} <lambda, alpha^v> q^{alpha^v} / (1 - q^{alpha^v}); Delta = D + shift.
RatExpr delta_class_shift(const RootSystem& rs, const Weight& lambda);

// ---------------------------------------------------------------- operators

// Stable-basis coefficient vector over W, in the context's element order.
using StableVec = std::vector<RatExpr>;

enum class Variant { D, Delta };

// Matrix of quantum multiplication: column w holds the coefficients of
// (class) * Stab(w).
SymMatrix chevalley_operator(const WeylContext& ctx, const Weight& lambda, Variant v);
// Cup product by D_lambda (all q-terms dropped).
SymMatrix classical_chevalley(const WeylContext& ctx, const Weight& lambda);

StableVec basis_vector(const WeylContext& ctx, const WeylElem& w);
StableVec apply_operator(const SymMatrix& m, const StableVec& v);
StableVec scale(const StableVec& v, const RatExpr& c);
StableVec add(const StableVec& a, const StableVec& b);
bool equal(const StableVec& a, const StableVec& b);

// T_u: coefficients moved by u on q, basis Stab(w) -> (-1)^l(u) Stab(w u^-1).
StableVec dl_transform(const WeylContext& ctx, const WeylElem& u, const StableVec& v);
// T_u o M o T_u^-1 as a matrix: entry (a, b) becomes u_q(M(a u, b u)).
SymMatrix dl_conjugate(const WeylContext& ctx, const WeylElem& u, const SymMatrix& m);

// sum_{w in W_lambda} (-1)^l(w) Stab(w).
StableVec averaging_class(const WeylContext& ctx, const Weight& lambda);

// ---------------------------------------------------------------- Theta

struct ThetaEntry {
  enum Kind { Zero, Delta, Scalar };
  Kind kind = Zero;
  Weight weight;  // u(lambda) for a Delta entry
  RatExpr value;  // Scalar entry
  int root = -1;  // the connecting positive root for a Scalar entry
};

struct ThetaMatrix {
  Weight lambda;
  CosetList cosets;
  std::vector<std::vector<ThetaEntry>> entries;

  int size() const { return int(entries.size()); }
  // Replaces each Delta_{u lambda} by diag(u lambda); scalars stay.
  SymMatrix skeleton(const std::function<RatExpr(const Weight&)>& diag) const;
};

ThetaMatrix theta_matrix(const WeylContext& ctx, const Weight& lambda);

// Block matrices whose blocks are zero, scalar multiples of 1, or full
// |W| x |W| operators; products keep the cheap kinds as long as possible.
struct OpBlock {
  enum Kind { Zero, Scalar, Full };
  Kind kind = Zero;
  RatExpr scalar;
  SymMatrix full;
};
using BlockMatrix = std::vector<std::vector<OpBlock>>;

BlockMatrix realize(const WeylContext& ctx, const ThetaMatrix& theta);
BlockMatrix block_mul(const BlockMatrix& a, const BlockMatrix& b);
OpBlock block_trace(const BlockMatrix& m);

// ---------------------------------------------------------------- checks

// tr(Theta(lambda)^k) = sum_u (u lambda)^k as operators, for k = 1..kmax.
std::vector<VerifyReport> verify_trace_relation(const WeylContext& ctx, const Weight& lambda, int kmax,
                                                const std::string& weight_label);
// sum_w Theta_{u,w} * T_w(varsigma) = lambda * T_u(varsigma) for every u in W^lambda.
VerifyReport verify_eigencolumn(const WeylContext& ctx, const Weight& lambda, const std::string& weight_label);
// T_u(Delta_lambda * Stab(w)) = Delta_{u lambda} * T_u(Stab(w)).
bool automorphism_holds(const WeylContext& ctx, const WeylElem& u, const Weight& lambda, const WeylElem& w,
                        std::string* detail = nullptr);
VerifyReport verify_automorphism(const WeylContext& ctx, const Weight& lambda, const std::string& weight_label);
// dl_conjugate(u, Op(Delta_lambda)) = Op(Delta_{u lambda}) for all u.
VerifyReport verify_conjugation_law(const WeylContext& ctx, const Weight& lambda, const std::string& weight_label);

// SL2 as GL2 with w = (1/2, -1/2). The product checks
// Op(D_w) Op(D_-w) = Op_cl(D_w) Op_cl(D_-w) + hbar q/(1-q) (Op(D_w) - Op(D_-w) - hbar);
// the relation check compares the k = 2 trace relation with the quadratic
// one and then tests x*y = q (h-x)*(h-y), x = -w - D_w, y = w - D_w, h = -hbar.
VerifyReport verify_sl2_product();
VerifyReport verify_sl2_relation();

// ---------------------------------------------------------------- presentations

// tr(Theta^k) - sum (u lambda)^k with Delta_{u lambda} -> D_{u lambda} + shift,
// D in the x generators and weights in eps.
RatExpr presentation_relation(const WeylContext& ctx, const Weight& lambda, int k);

struct Presentation {
  Family family = Family::A;
  int rank = 0;
  std::vector<std::string> generators;
  std::vector<RatExpr> chi_definitions;  // chi_i in terms of x_i, hbar, q
  std::vector<std::string> relation_labels;
  std::vector<RatExpr> relations;  // in chi, t, hbar, q
  std::string coefficient_ring = "O(T_reg^v)[hbar]";

  nlohmann::json to_json() const;
  std::string to_text() const;
  std::string to_latex() const;
};

Presentation emit_presentation(const RootSystem& rs);
Presentation presentation_from_json(const nlohmann::json& j);

// Mod hbar the relation must read F(z) - F(t) with F invariant under W acting
// by signed permutations; z are the chi (or x) generators.
bool classical_limit_ok(const RootSystem& rs, const RatExpr& relation, bool chi_form, std::string* detail = nullptr);

}  // namespace sqh
