#pragma once

#include <string>
#include <vector>

#include "sqh/matrix.hpp"
#include "sqh/report.hpp"
#include "sqh/rootdata.hpp"

namespace sqh {

// M(chi): the scalar form of Theta(-e_1) with chi_i = Delta_{-e_i} kept as
// symbols. Size n for type A, 2n for B, C, D.
SymMatrix m_chi(Family family, int n);
// A(chi) of type D, and the same matrix with every chi_i replaced by -chi_i.
SymMatrix a_chi(int n);
SymMatrix a_chi_negated(int n);

// E_1..E_dim of det(y + M(chi)); memoized per (family, n).
const std::vector<RatExpr>& elementary_E_all(Family family, int n);
RatExpr elementary_E(Family family, int n, int k);

// k-th elementary symmetric polynomial of the given values.
RatExpr elementary_symmetric(const std::vector<RatExpr>& xs, int k);
std::vector<RatExpr> t_vars(int n);
std::vector<RatExpr> t_squares(int n);

// Involution of a subset K of {1..n}: partner[i] == i marks a fixed point,
// 0 marks an index outside K (1-based, entry 0 unused).
struct Matching {
  std::vector<int> partner;
  std::vector<int> fixed_points() const;
  std::vector<std::pair<int, int>> pairs() const;  // i < j
};

// k-subsets of {1..n} in colex order.
std::vector<std::vector<int>> subsets_colex(int n, int k);
// All involutions of K, smallest unmatched element first.
std::vector<Matching> matchings_of(const std::vector<int>& k_set, int n);
std::vector<Matching> perfect_matchings(int n);
std::size_t telephone_number(int k);

// hbar^2 (q_i/q_j) / (1 - q_i/q_j)^2 = hbar^2 q_i q_j / (q_i - q_j)^2.
RatExpr pair_weight(int i, int j);
RatExpr matching_formula_E(int n, int k);
VerifyReport verify_matching_theorem(int n);

struct AntiCauchy {
  RatExpr lhs;
  RatExpr rhs;
  VerifyReport report;
};
AntiCauchy anticauchy_det(int n);

RatExpr cyclic_sum(int n);
VerifyReport verify_cyclic_sum(int n);

VerifyReport verify_typeD(int n);
VerifyReport verify_odd_vanishing(Family family, int n);

// Involution sum over |sigma(i) - i| <= 1: fixed points give diag entries,
// each swap (i, i+1) gives -sub_i * super_i.
RatExpr tridiag_det(const std::vector<RatExpr>& sub, const std::vector<RatExpr>& diag,
                    const std::vector<RatExpr>& super);
SymMatrix tridiag_matrix(const std::vector<RatExpr>& sub, const std::vector<RatExpr>& diag,
                         const std::vector<RatExpr>& super);
VerifyReport verify_tridiag(int n);

// The E_k polynomials of M(chi) written in chi with grouped coefficients.
std::string elementary_E_latex(Family family, int n, int k);

}  // namespace sqh
