#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "sqh/ratexpr.hpp"

namespace Eigen {

template <>
struct NumTraits<sqh::RatExpr> : GenericNumTraits<sqh::RatExpr> {
  typedef sqh::RatExpr Real;
  typedef sqh::RatExpr NonInteger;
  typedef sqh::RatExpr Nested;
  typedef sqh::RatExpr Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace sqh {

using SymMatrix = Eigen::Matrix<RatExpr, Eigen::Dynamic, Eigen::Dynamic>;
using PolyMatrix = Eigen::Matrix<Poly, Eigen::Dynamic, Eigen::Dynamic>;

SymMatrix zero_matrix(int n);
SymMatrix identity_matrix(int n);
SymMatrix scalar_matrix(int n, const RatExpr& c);
SymMatrix diagonal_matrix(const std::vector<RatExpr>& d);

RatExpr trace(const SymMatrix& m);
SymMatrix matmul(const SymMatrix& a, const SymMatrix& b);
SymMatrix matpow(const SymMatrix& m, int k);

// Exact determinant. Cofactor expansion below dimension 4, then Laplace
// expansion memoized over column subsets (dimension at most 16).
RatExpr determinant(const SymMatrix& m);
// Fraction-free Bareiss.
Poly determinant(PolyMatrix m);

// Coefficients E_1..E_n of det(y*1 + M) = y^n + E_1 y^(n-1) + ... + E_n,
// read off the determinant with y a polynomial variable.
std::vector<RatExpr> char_poly(const SymMatrix& m);

// Same coefficients by Faddeev-LeVerrier. Much slower once the entries carry
// many distinct denominators; kept as an independent cross-check.
std::vector<RatExpr> char_poly_faddeev(const SymMatrix& m);

// First entry (row, col) where a and b differ, if any.
std::optional<std::pair<int, int>> first_difference(const SymMatrix& a, const SymMatrix& b);

template <class F>
SymMatrix map_entries(const SymMatrix& m, F&& f) {
  SymMatrix r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = f(m(i, j));
  return r;
}

}  // namespace sqh
