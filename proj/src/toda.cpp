#include "sqh/toda.hpp"

#include "sqh/classical.hpp"
#include "sqh/errors.hpp"
#include "sqh/qh_stable.hpp"
#include "sqh/textio.hpp"
#include "sqh/weyl.hpp"

namespace sqh {

namespace {

RatExpr x(int i) { return RatExpr::of(var::x(i)); }
RatExpr q(int i, int e = 1) { return RatExpr::of(var::q(i), e); }

// hbar^e for a half-integral e, through s = hbar^(1/2).
RatExpr hbar_power(const Rational& e) {
  Rational twice = e * 2;
  if (!twice.is_integer()) throw DomainError("conjugator exponent " + e.str() + " is not a half-integer");
  long long t = twice.small_num();
  long long whole = t >= 0 ? t / 2 : -((-t + 1) / 2);
  RatExpr r = RatExpr::of(var::hbar(), int(whole));
  if (t - 2 * whole == 1) r *= RatExpr::of(var::s());
  return r;
}

void label(VerifyReport& r, const std::string& instance, const std::string& family, int n) {
  r.suite = "toda";
  r.instance = instance;
  r.reproducer = "sqh verify --suite toda --family " + family + " --rank " + std::to_string(n);
  r.pass = true;
}

void check_rank(int n, int lo, int hi) {
  if (n < lo || n > hi)
    throw DomainError("rank " + std::to_string(n) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

// Lower-right block shared by the B, C, D limits: -x_n .. -x_1 on the
// diagonal, 1 above it, -q_(n-i)/q_(n+1-i) below it.
void fill_mirror_block(SymMatrix& m, int n) {
  for (int i = 1; i <= n; ++i) {
    m(n + i - 1, n + i - 1) = -x(n + 1 - i);
    if (i < n) {
      m(n + i - 1, n + i) = 1;
      m(n + i, n + i - 1) = -(q(n - i) / q(n + 1 - i));
    }
  }
}

// Upper-left tridiagonal block: x_i, super `up`, sub sign * q_i/q_(i+1).
void fill_chain_block(SymMatrix& m, int n, int up, int sub_sign) {
  for (int i = 1; i <= n; ++i) {
    m(i - 1, i - 1) = x(i);
    if (i < n) {
      m(i - 1, i) = up;
      m(i, i - 1) = RatExpr(sub_sign) * q(i) / q(i + 1);
    }
  }
}

}  // namespace

RatExpr toda_substitute(const RatExpr& value, const RootSystem& rs) {
  MonomialMap f;
  for (int i = 1; i <= rs.dim(); ++i) {
    Rational e = rs.rho.coords[std::size_t(i - 1)] * 2;
    if (!e.is_integer()) throw InvariantViolation("2 rho has a non-integral coordinate");
    Monomial m = Monomial::of(var::q(i)) * Monomial::of(var::hbar(), -int(e.small_num()));
    f.send(var::q(i).slot(), m);
  }
  return apply(f, value);
}

TodaResult toda_matrix_limit(const TodaJob& job) {
  const int n = int(job.input.rows());
  if (int(job.conjugator.size()) != n) throw DomainError("conjugator length differs from the matrix size");
  if (!job.signs.empty() && int(job.signs.size()) != n) throw DomainError("sign list length differs from the matrix size");
  TodaResult out;
  out.limit = zero_matrix(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const RatExpr& e = job.input(i, j);
      if (e.is_zero()) continue;
      Rational d = job.conjugator[std::size_t(i)] - job.conjugator[std::size_t(j)];
      if (!d.is_integer())
        throw InvariantViolation("conjugated entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                 ") keeps a half power of hbar");
      int sign = job.signs.empty() ? 1 : job.signs[std::size_t(i)] * job.signs[std::size_t(j)];
      RatExpr scaled = RatExpr(sign) * hbar_power(d) * toda_substitute(e, job.rs);
      try {
        out.limit(i, j) = limit_hbar_inf(scaled);
      } catch (const LimitError& err) {
        throw LimitError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): " + err.what(),
                         err.degree_gap);
      }
    }
  if (job.expected) {
    auto d = first_difference(out.limit, *job.expected);
    if (d) {
      out.matches = false;
      out.detail = "entry (" + std::to_string(d->first + 1) + "," + std::to_string(d->second + 1) +
                   "): limit " + to_text(out.limit(d->first, d->second)) + " vs expected " +
                   to_text((*job.expected)(d->first, d->second));
    }
  }
  return out;
}

SymMatrix m_chi_in_x(Family family, int n) {
  RootSystem rs = build_root_system(family, n);
  std::map<int, RatExpr> sub;
  for (int i = 1; i <= n; ++i)
    sub[var::chi(i).slot()] = x(i) + delta_class_shift(rs, -Weight::unit(n, i));
  return map_entries(m_chi(family, n), [&](const RatExpr& e) { return substitute(e, sub); });
}

TodaJob standard_job(Family family, int n) {
  TodaJob job;
  job.rs = build_root_system(family, n);
  job.input = m_chi_in_x(family, n);
  switch (family) {
    case Family::A:
      for (int i = 1; i <= n; ++i) {
        job.conjugator.push_back(i - 1);
        job.signs.push_back(i % 2 ? 1 : -1);
      }
      job.expected = givental_kim_matrix(n);
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i <= 2 * n; ++i) job.conjugator.push_back(Rational(2 * (i - n) - 1, 2));
      job.expected = family == Family::B ? typeB_limit_matrix(n) : typeC_limit_matrix(n);
      break;
    case Family::D:
      for (int i = 1; i <= n; ++i) job.conjugator.push_back(i - n);
      for (int i = 1; i <= n; ++i) job.conjugator.push_back(i - 1);
      job.expected = typeD_limit_matrix(n);
      break;
  }
  return job;
}

// ---------------------------------------------------------------- limit matrices

SymMatrix givental_kim_matrix(int n) {
  check_rank(n, 1, kMaxIndex);
  SymMatrix m = zero_matrix(n);
  fill_chain_block(m, n, -1, 1);
  return m;
}

SymMatrix typeB_limit_matrix(int n) {
  check_rank(n, 1, kMaxIndex);
  SymMatrix m = zero_matrix(2 * n);
  fill_chain_block(m, n, 1, -1);
  fill_mirror_block(m, n);
  m(n - 1, n) = 2;
  m(n, n - 1) = RatExpr(-2) * q(n, 2);
  return m;
}

SymMatrix typeC_limit_matrix(int n) {
  check_rank(n, 1, kMaxIndex);
  SymMatrix m = zero_matrix(2 * n);
  fill_chain_block(m, n, 1, -1);
  fill_mirror_block(m, n);
  m(n - 1, n) = 1;
  for (int i = 1; i <= n; ++i) m(n + i - 1, n - i) = -q(n + 1 - i);
  return m;
}

SymMatrix typeC_extended_matrix(int n) {
  check_rank(n, 1, kMaxIndex);
  SymMatrix m = zero_matrix(2 * n + 1);
  fill_chain_block(m, n, -1, 1);
  m(n - 1, n) = Rational(-1, 2);
  m(n, n - 1) = q(n);
  m(n, n + 1) = Rational(1, 2);
  m(n + 1, n) = -q(n);
  for (int i = 1; i <= n; ++i) {
    m(n + i, n + i) = -x(n + 1 - i);
    if (i < n) {
      m(n + i, n + i + 1) = 1;
      m(n + i + 1, n + i) = -(q(n - i) / q(n + 1 - i));
    }
  }
  return m;
}

SymMatrix typeD_limit_matrix(int n) {
  check_rank(n, 2, kMaxIndex);
  SymMatrix m = zero_matrix(2 * n);
  fill_chain_block(m, n, 1, -1);
  fill_mirror_block(m, n);
  m(n - 2, n) = 1;
  m(n - 1, n + 1) = 1;
  m(n, n - 2) = -(q(n - 1) * q(n));
  m(n + 1, n - 1) = -(q(n - 1) * q(n));
  return m;
}

SymMatrix typeD_companion_matrix(int n) {
  check_rank(n, 2, kMaxIndex);
  SymMatrix m = zero_matrix(2 * n);
  fill_chain_block(m, n, -1, 1);
  fill_mirror_block(m, n);
  m(n - 2, n) = -1;
  m(n - 1, n + 1) = 1;
  m(n, n - 2) = q(n - 1) * q(n);
  m(n + 1, n - 1) = -(q(n - 1) * q(n));
  return m;
}

// ---------------------------------------------------------------- checks

namespace {

VerifyReport run_limit(Family family, int n, const std::string& instance) {
  Stopwatch sw;
  VerifyReport r;
  label(r, instance, family_name(family), n);
  try {
    TodaResult res = toda_matrix_limit(standard_job(family, n));
    if (!res.matches) {
      r.pass = false;
      r.detail = res.detail;
    }
  } catch (const LimitError& e) {
    r.pass = false;
    r.detail = e.what();
  }
  r.seconds = sw.seconds();
  return r;
}

bool same_char_poly(VerifyReport& r, const std::vector<RatExpr>& a, const std::vector<RatExpr>& b) {
  if (a.size() != b.size()) {
    r.pass = false;
    r.detail = "degree mismatch";
    return false;
  }
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!expect_equal(r, "E_" + std::to_string(k + 1), a[k], b[k])) return false;
  return true;
}

}  // namespace

VerifyReport verify_givental_kim(int n) {
  check_rank(n, 1, kMaxIndex);
  return run_limit(Family::A, n, "A" + std::to_string(n) + " tridiagonal limit");
}

VerifyReport verify_typeB_limit(int n) {
  check_rank(n, 1, kMaxIndex);
  return run_limit(Family::B, n, "B" + std::to_string(n) + " limit");
}

VerifyReport verify_typeC_extension(int n) {
  check_rank(n, 1, kMaxIndex);
  VerifyReport r = run_limit(Family::C, n, "C" + std::to_string(n) + " limit and extension");
  if (!r.pass) return r;
  Stopwatch sw;
  std::vector<RatExpr> lhs = char_poly(typeC_limit_matrix(n));
  lhs.push_back(0);  // the extra factor y
  same_char_poly(r, lhs, char_poly(typeC_extended_matrix(n)));
  r.seconds += sw.seconds();
  return r;
}

VerifyReport verify_typeD_limit(int n) {
  check_rank(n, 2, kMaxIndex);
  VerifyReport r = run_limit(Family::D, n, "D" + std::to_string(n) + " limit and companion");
  if (!r.pass) return r;
  Stopwatch sw;
  same_char_poly(r, char_poly(typeD_limit_matrix(n)), char_poly(typeD_companion_matrix(n)));
  r.seconds += sw.seconds();
  return r;
}

}  // namespace sqh
