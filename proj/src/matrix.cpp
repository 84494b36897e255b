#include "sqh/matrix.hpp"

#include "sqh/errors.hpp"

namespace sqh {

SymMatrix zero_matrix(int n) { return SymMatrix::Constant(n, n, RatExpr(0)); }

SymMatrix identity_matrix(int n) { return scalar_matrix(n, RatExpr(1)); }

SymMatrix scalar_matrix(int n, const RatExpr& c) {
  SymMatrix m = zero_matrix(n);
  for (int i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

SymMatrix diagonal_matrix(const std::vector<RatExpr>& d) {
  SymMatrix m = zero_matrix(int(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

RatExpr trace(const SymMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("trace of a non-square matrix");
  RatExpr t;
  for (Eigen::Index i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

SymMatrix matmul(const SymMatrix& a, const SymMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix product dimension mismatch");
  // Skipping zero entries matters: operator matrices are sparse.
  SymMatrix r = SymMatrix::Constant(a.rows(), b.cols(), RatExpr(0));
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

SymMatrix matpow(const SymMatrix& m, int k) {
  if (k < 0) throw DomainError("negative matrix power");
  SymMatrix r = identity_matrix(int(m.rows()));
  for (int i = 0; i < k; ++i) r = matmul(r, m);
  return r;
}

namespace {

RatExpr cofactor_det(const SymMatrix& m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return RatExpr(1);
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  RatExpr d;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    SymMatrix minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r)
      for (Eigen::Index c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    RatExpr term = m(0, j) * cofactor_det(minor);
    d = (j % 2) ? d - term : d + term;
  }
  return d;
}

}  // namespace

Poly determinant(PolyMatrix a) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw DomainError("determinant of a non-square matrix");
  if (n == 0) return Poly(1);
  int sign = 1;
  Poly prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      Eigen::Index p = k + 1;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) return Poly();
      a.row(k).swap(a.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Poly t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        if (prev.is_one()) {
          a(i, j) = std::move(t);
        } else {
          auto q = divide_exact(t, prev);
          if (!q) throw InvariantViolation("Bareiss step is not exact");
          a(i, j) = std::move(*q);
        }
      }
    prev = a(k, k);
  }
  Poly d = a(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

RatExpr determinant(const SymMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  if (m.rows() < 4) return cofactor_det(m);
  const int n = int(m.rows());
  if (n > 16) throw DomainError("determinant: dimension above 16");
  // Laplace expansion along rows, memoized over column subsets: minor[S] is
  // the determinant of the first |S| rows restricted to the columns in S.
  // Staying in RatExpr keeps denominators factored, which beats clearing
  // them and running Bareiss on the resulting polynomials.
  const unsigned full = (1u << n) - 1;
  std::vector<RatExpr> minor(std::size_t(full) + 1);
  minor[0] = 1;
  for (unsigned set = 1; set <= full; ++set) {
    const int row = __builtin_popcount(set) - 1;
    RatExpr d;
    int sign = 1;
    // Sign alternates over the chosen columns from the highest one down.
    for (int j = n - 1; j >= 0; --j) {
      if (!(set & (1u << j))) continue;
      const unsigned rest = set & ~(1u << j);
      if (!m(row, j).is_zero() && !minor[rest].is_zero()) {
        RatExpr term = m(row, j) * minor[rest];
        d = sign > 0 ? d + term : d - term;
      }
      sign = -sign;
    }
    minor[set] = std::move(d);
  }
  return minor[full];
}

std::vector<RatExpr> char_poly_faddeev(const SymMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("characteristic polynomial of a non-square matrix");
  const int n = int(m.rows());
  // det(y - A) with A = -M has coefficients c_k; those are exactly E_k.
  SymMatrix a = map_entries(m, [](const RatExpr& x) { return -x; });
  std::vector<RatExpr> e;
  SymMatrix mk = zero_matrix(n);
  RatExpr c(1);
  for (int k = 1; k <= n; ++k) {
    mk = matmul(a, mk);
    for (int i = 0; i < n; ++i) mk(i, i) += c;
    c = trace(matmul(a, mk)) * RatExpr(Rational(-1, k));
    e.push_back(c);
  }
  return e;
}

std::vector<RatExpr> char_poly(const SymMatrix& m) {
  const int n = int(m.rows());
  SymMatrix shifted = m;
  for (int i = 0; i < n; ++i) shifted(i, i) += RatExpr::of(var::y());
  RatExpr d = determinant(shifted);
  const int y = var::y().slot();
  std::vector<RatExpr> e;
  for (int k = 1; k <= n; ++k)
    e.push_back(RatExpr::fraction(d.num().coeff(y, n - k), d.den()));
  return e;
}

std::optional<std::pair<int, int>> first_difference(const SymMatrix& a, const SymMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::pair{-1, -1};
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return std::pair{int(i), int(j)};
  return std::nullopt;
}

}  // namespace sqh
