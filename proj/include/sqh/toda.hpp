#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sqh/matrix.hpp"
#include "sqh/report.hpp"
#include "sqh/rootdata.hpp"

namespace sqh {

// q^beta -> hbar^(-<2 rho, beta>) q^beta.
RatExpr toda_substitute(const RatExpr& x, const RootSystem& rs);

// Entry (i, j) is scaled by sign_i hbar^(c_i) / (sign_j hbar^(c_j)) before the
// substitution and the hbar -> infinity limit. Exponents may be half-integers
// as long as every difference c_i - c_j is integral.
struct TodaJob {
  SymMatrix input;
  RootSystem rs;
  std::vector<Rational> conjugator;
  std::vector<int> signs;  // empty means all +1
  std::optional<SymMatrix> expected;
};

struct TodaResult {
  SymMatrix limit;
  bool matches = true;  // against job.expected when present
  std::string detail;
};

// Throws LimitError naming the first divergent entry.
TodaResult toda_matrix_limit(const TodaJob& job);

// Standard conjugators: type A diag(1, -hbar, ..., (-hbar)^(n-1)); B and C
// hbar^(-n+1/2) .. hbar^(n-1/2); D hbar^(-n+1) .. 1, 1 .. hbar^(n-1).
TodaJob standard_job(Family family, int n);

// M(chi) with chi_i replaced by x_i + hbar sum <-e_i, a^v> q^a/(1 - q^a).
SymMatrix m_chi_in_x(Family family, int n);

// Limit matrices in x and q.
SymMatrix givental_kim_matrix(int n);
SymMatrix typeB_limit_matrix(int n);
SymMatrix typeC_limit_matrix(int n);
SymMatrix typeC_extended_matrix(int n);  // size 2n + 1
SymMatrix typeD_limit_matrix(int n);
SymMatrix typeD_companion_matrix(int n);

VerifyReport verify_givental_kim(int n);
VerifyReport verify_typeB_limit(int n);
VerifyReport verify_typeC_extension(int n);
VerifyReport verify_typeD_limit(int n);

}  // namespace sqh
