#include "sqh/classical.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

#include "sqh/errors.hpp"
#include "sqh/textio.hpp"

namespace sqh {

namespace {

RatExpr hbar() { return RatExpr::of(var::hbar()); }
RatExpr q(int i, int e = 1) { return RatExpr::of(var::q(i), e); }
RatExpr chi(int i) { return RatExpr::of(var::chi(i)); }
RatExpr t(int i) { return RatExpr::of(var::t(i)); }

// hbar / (1 - m) for a q-monomial m.
RatExpr hfrac(const RatExpr& m, int p = 1) { return RatExpr(p) * hbar() / (RatExpr(1) - m); }

void check_size(int n, int lo, int hi, const char* what) {
  if (n < lo || n > hi)
    throw DomainError(std::string(what) + ": size " + std::to_string(n) + " outside [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
}

std::array<bool, kSlots> chi_mask() {
  std::array<bool, kSlots> mask{};
  for (int i = 1; i <= kMaxIndex; ++i) mask[std::size_t(var::chi(i).slot())] = true;
  return mask;
}

}  // namespace

SymMatrix m_chi(Family family, int n) {
  check_size(n, 1, kMaxIndex, "m_chi");
  if (family == Family::A) {
    SymMatrix m(n, n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) m(i - 1, j - 1) = i == j ? chi(i) : hfrac(q(i) / q(j));
    return m;
  }
  if (family == Family::D && n < 2) throw DomainError("type D needs n >= 2");
  const int p = family == Family::B ? 2 : 1;
  const bool typeD = family == Family::D;
  SymMatrix m(2 * n, 2 * n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      m(i - 1, j - 1) = i == j ? chi(i) : hfrac(q(i) / q(j));
      m(n + i - 1, n + j - 1) = i == j ? -chi(n + 1 - i) : hfrac(q(n + 1 - j) / q(n + 1 - i));
      if (i + j != n + 1) {
        m(i - 1, n + j - 1) = hfrac(q(i) * q(n + 1 - j));
        m(n + i - 1, j - 1) = hfrac(q(n + 1 - i, -1) * q(j, -1));
      } else if (typeD) {
        m(i - 1, n + j - 1) = 0;
        m(n + i - 1, j - 1) = 0;
      } else {
        m(i - 1, n + j - 1) = hfrac(q(i, p), p);
        m(n + i - 1, j - 1) = hfrac(q(j, -p), p);
      }
    }
  return m;
}

SymMatrix a_chi(int n) {
  check_size(n, 2, kMaxIndex, "a_chi");
  SymMatrix a(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      // One binomial at a time, so each denominator factor is kept as an atom.
      a(i - 1, j - 1) = i == j ? chi(i)
                               : hbar() * (RatExpr(1) - q(i)) * (RatExpr(1) + q(j)) / (RatExpr(1) - q(i) / q(j)) /
                                     (RatExpr(1) - q(i) * q(j));
  return a;
}

SymMatrix a_chi_negated(int n) {
  SymMatrix a = a_chi(n);
  for (int i = 0; i < n; ++i) a(i, i) = -a(i, i);
  return a;
}

const std::vector<RatExpr>& elementary_E_all(Family family, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<RatExpr>> memo;
  auto key = std::make_pair(int(family), n);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  std::vector<RatExpr> e = char_poly(m_chi(family, n));
  std::lock_guard<std::mutex> lock(mu);
  return memo.emplace(key, std::move(e)).first->second;
}

RatExpr elementary_E(Family family, int n, int k) {
  const auto& e = elementary_E_all(family, n);
  if (k < 1 || k > int(e.size())) throw DomainError("E_k index " + std::to_string(k) + " out of range");
  return e[std::size_t(k - 1)];
}

RatExpr elementary_symmetric(const std::vector<RatExpr>& xs, int k) {
  if (k < 0 || k > int(xs.size())) return 0;
  std::vector<RatExpr> e(std::size_t(k + 1));
  e[0] = 1;
  for (const auto& x : xs)
    for (int j = k; j >= 1; --j) e[std::size_t(j)] += e[std::size_t(j - 1)] * x;
  return e[std::size_t(k)];
}

std::vector<RatExpr> t_vars(int n) {
  std::vector<RatExpr> v;
  for (int i = 1; i <= n; ++i) v.push_back(t(i));
  return v;
}

std::vector<RatExpr> t_squares(int n) {
  std::vector<RatExpr> v;
  for (int i = 1; i <= n; ++i) v.push_back(t(i) * t(i));
  return v;
}

// ---------------------------------------------------------------- matchings

std::vector<int> Matching::fixed_points() const {
  std::vector<int> r;
  for (int i = 1; i < int(partner.size()); ++i)
    if (partner[std::size_t(i)] == i) r.push_back(i);
  return r;
}

std::vector<std::pair<int, int>> Matching::pairs() const {
  std::vector<std::pair<int, int>> r;
  for (int i = 1; i < int(partner.size()); ++i) {
    int j = partner[std::size_t(i)];
    if (j > i) r.emplace_back(i, j);
  }
  return r;
}

std::vector<std::vector<int>> subsets_colex(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (int(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i <= n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(1);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

namespace {

void enumerate_matchings(std::vector<int>& partner, const std::vector<int>& k_set, bool allow_fixed,
                         std::vector<Matching>& out) {
  auto first = std::find_if(k_set.begin(), k_set.end(), [&](int i) { return partner[std::size_t(i)] == 0; });
  if (first == k_set.end()) {
    out.push_back({partner});
    return;
  }
  int a = *first;
  if (allow_fixed) {
    partner[std::size_t(a)] = a;
    enumerate_matchings(partner, k_set, allow_fixed, out);
    partner[std::size_t(a)] = 0;
  }
  for (auto it = first + 1; it != k_set.end(); ++it) {
    int b = *it;
    if (partner[std::size_t(b)] != 0) continue;
    partner[std::size_t(a)] = b;
    partner[std::size_t(b)] = a;
    enumerate_matchings(partner, k_set, allow_fixed, out);
    partner[std::size_t(a)] = partner[std::size_t(b)] = 0;
  }
}

}  // namespace

std::vector<Matching> matchings_of(const std::vector<int>& k_set, int n) {
  std::vector<int> partner(std::size_t(n + 1), 0);
  std::vector<Matching> out;
  enumerate_matchings(partner, k_set, true, out);
  return out;
}

std::vector<Matching> perfect_matchings(int n) {
  std::vector<int> all;
  for (int i = 1; i <= n; ++i) all.push_back(i);
  std::vector<int> partner(std::size_t(n + 1), 0);
  std::vector<Matching> out;
  enumerate_matchings(partner, all, false, out);
  return out;
}

std::size_t telephone_number(int k) {
  std::size_t a = 1, b = 1;  // T(0), T(1)
  if (k <= 1) return 1;
  for (int i = 2; i <= k; ++i) {
    std::size_t c = b + std::size_t(i - 1) * a;
    a = b;
    b = c;
  }
  return b;
}

RatExpr pair_weight(int i, int j) {
  RatExpr r = q(i) / q(j);
  RatExpr d = RatExpr(1) - r;
  return hbar() * hbar() * r / (d * d);
}

RatExpr matching_formula_E(int n, int k) {
  check_size(n, 1, kMaxIndex, "matching formula");
  if (k < 1 || k > n) throw DomainError("matching formula needs 1 <= k <= n");
  RatExpr sum;
  for (const auto& kset : subsets_colex(n, k))
    for (const auto& pi : matchings_of(kset, n)) {
      RatExpr term = 1;
      for (int i : pi.fixed_points()) term *= chi(i);
      for (auto [i, j] : pi.pairs()) term *= pair_weight(i, j);
      sum += term;
    }
  return sum;
}

VerifyReport verify_matching_theorem(int n) {
  Stopwatch sw;
  VerifyReport r;
  r.suite = "matching";
  r.instance = "n=" + std::to_string(n);
  r.reproducer = "sqh verify --suite matching --rank " + std::to_string(n);
  r.pass = true;
  for (int k = 1; k <= n; ++k)
    if (!expect_equal(r, "E_" + std::to_string(k), elementary_E(Family::A, n, k), matching_formula_E(n, k))) break;
  r.seconds = sw.seconds();
  return r;
}

// ---------------------------------------------------------------- cyclic sums and the anti-Cauchy determinant

AntiCauchy anticauchy_det(int n) {
  check_size(n, 1, kMaxIndex, "anticauchy");
  Stopwatch sw;
  SymMatrix m = zero_matrix(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) m(i - 1, j - 1) = RatExpr(1) / (t(i) - t(j));
  AntiCauchy out;
  out.lhs = determinant(m);
  for (const auto& pm : perfect_matchings(n)) {
    RatExpr term = 1;
    for (auto [i, j] : pm.pairs()) {
      RatExpr d = t(i) - t(j);
      term /= d * d;
    }
    out.rhs += term;
  }
  VerifyReport& r = out.report;
  r.suite = "appendixB";
  r.instance = "anticauchy n=" + std::to_string(n);
  r.reproducer = "sqh verify --suite appendixB --rank " + std::to_string(n);
  r.pass = true;
  expect_equal(r, "det", out.lhs, out.rhs);
  r.seconds = sw.seconds();
  return out;
}

RatExpr cyclic_sum(int n) {
  check_size(n, 2, kMaxIndex, "cyclic sum");
  std::vector<int> perm;
  for (int i = 1; i <= n; ++i) perm.push_back(i);
  RatExpr sum;
  do {
    RatExpr term = 1;
    for (int i = 0; i < n; ++i) term /= t(perm[std::size_t(i)]) - t(perm[std::size_t((i + 1) % n)]);
    sum += term;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return sum;
}

VerifyReport verify_cyclic_sum(int n) {
  Stopwatch sw;
  VerifyReport r;
  r.suite = "appendixB";
  r.instance = "cyclic n=" + std::to_string(n);
  r.reproducer = "sqh verify --suite appendixB --rank " + std::to_string(n);
  r.pass = true;
  RatExpr expect = 0;
  if (n == 2) {
    RatExpr d = t(1) - t(2);
    expect = RatExpr(-1) / (d * d);
  }
  expect_equal(r, "sum", cyclic_sum(n), expect);
  r.seconds = sw.seconds();
  return r;
}

// ---------------------------------------------------------------- types B, C, D

namespace {

// Permutations of {0..n-1} all of whose nontrivial cycles have even length,
// with the sign of each.
void even_cycle_permutations(int n, std::vector<std::pair<std::vector<int>, int>>& out) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[std::size_t(i)] = i;
  do {
    std::vector<bool> seen(std::size_t(n), false);
    bool ok = true;
    int transpositions = 0;
    for (int i = 0; i < n && ok; ++i) {
      if (seen[std::size_t(i)]) continue;
      int len = 0;
      for (int j = i; !seen[std::size_t(j)]; j = perm[std::size_t(j)]) {
        seen[std::size_t(j)] = true;
        ++len;
      }
      if (len > 1 && len % 2) ok = false;
      transpositions += len - 1;
    }
    if (ok) out.emplace_back(perm, transpositions % 2 ? -1 : 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

VerifyReport verify_typeD(int n) {
  check_size(n, 2, kMaxIndex, "type D check");
  Stopwatch sw;
  VerifyReport r;
  r.suite = "typeD";
  r.instance = "D" + std::to_string(n);
  r.reproducer = "sqh verify --suite typeD --family D --rank " + std::to_string(n);
  r.pass = true;

  SymMatrix a = a_chi(n);
  RatExpr det_a = determinant(a);
  expect_equal(r, "det M(chi) vs det A(chi) det A(-chi)", determinant(m_chi(Family::D, n)),
               det_a * determinant(a_chi_negated(n)));

  std::vector<std::pair<std::vector<int>, int>> perms;
  even_cycle_permutations(n, perms);
  RatExpr expansion;
  for (const auto& [perm, sign] : perms) {
    RatExpr term = sign;
    for (int i = 0; i < n; ++i) term *= a(i, perm[std::size_t(i)]);
    expansion += term;
  }
  expect_equal(r, "even-cycle expansion", det_a, expansion);

  RatExpr en = 1;
  for (int i = 1; i <= n; ++i) en *= chi(i);
  expect_equal(r, "det A(chi) mod hbar", substitute(det_a, {{kHbarSlot, RatExpr(0)}}), en);
  r.seconds = sw.seconds();
  return r;
}

VerifyReport verify_odd_vanishing(Family family, int n) {
  if (family == Family::A) throw DomainError("odd vanishing concerns types B, C, D");
  Stopwatch sw;
  VerifyReport r;
  r.suite = "oddvanish";
  r.instance = family_name(family) + std::to_string(n);
  r.reproducer = "sqh verify --suite oddvanish --family " + family_name(family) + " --rank " + std::to_string(n);
  r.pass = true;
  const auto& e = elementary_E_all(family, n);
  for (int k = 1; k <= n; ++k)
    if (!expect_equal(r, "E_" + std::to_string(2 * k - 1), e[std::size_t(2 * k - 2)], RatExpr(0))) break;
  r.seconds = sw.seconds();
  return r;
}

// ---------------------------------------------------------------- tridiagonal

RatExpr tridiag_det(const std::vector<RatExpr>& sub, const std::vector<RatExpr>& diag,
                    const std::vector<RatExpr>& super) {
  const std::size_t n = diag.size();
  if (n == 0 || sub.size() + 1 != n || super.size() + 1 != n)
    throw DomainError("tridiagonal data needs lengths n-1, n, n-1");
  RatExpr sum;
  std::function<void(std::size_t, RatExpr)> rec = [&](std::size_t i, RatExpr acc) {
    if (i >= n) {
      sum += acc;
      return;
    }
    rec(i + 1, acc * diag[i]);
    if (i + 1 < n) rec(i + 2, -(acc * sub[i] * super[i]));
  };
  rec(0, RatExpr(1));
  return sum;
}

SymMatrix tridiag_matrix(const std::vector<RatExpr>& sub, const std::vector<RatExpr>& diag,
                         const std::vector<RatExpr>& super) {
  const int n = int(diag.size());
  SymMatrix m = zero_matrix(n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = diag[std::size_t(i)];
    if (i + 1 < n) {
      m(i + 1, i) = sub[std::size_t(i)];
      m(i, i + 1) = super[std::size_t(i)];
    }
  }
  return m;
}

VerifyReport verify_tridiag(int n) {
  check_size(n, 1, kMaxIndex, "tridiagonal check");
  Stopwatch sw;
  VerifyReport r;
  r.suite = "toda";
  r.instance = "tridiagonal n=" + std::to_string(n);
  r.reproducer = "sqh verify --suite toda --rank " + std::to_string(n);
  r.pass = true;
  std::vector<RatExpr> sub, diag, super, nsub, nsuper;
  for (int i = 1; i <= n; ++i) {
    diag.push_back(RatExpr::of(var::x(i)));
    if (i < n) {
      sub.push_back(RatExpr::of(var::a(i)));
      super.push_back(RatExpr::of(var::b(i)));
      nsub.push_back(-sub.back());
      nsuper.push_back(-super.back());
    }
  }
  expect_equal(r, "matching sum vs determinant", tridiag_det(sub, diag, super),
               determinant(tridiag_matrix(sub, diag, super)));
  auto c1 = char_poly(tridiag_matrix(sub, diag, super));
  auto c2 = char_poly(tridiag_matrix(nsub, diag, nsuper));
  for (std::size_t k = 0; k < c1.size(); ++k)
    if (!expect_equal(r, "sign flip E_" + std::to_string(k + 1), c1[k], c2[k])) break;
  r.seconds = sw.seconds();
  return r;
}

std::string elementary_E_latex(Family family, int n, int k) {
  return "\\mathcal{E}_{" + std::to_string(k) + "}(\\chi) = " +
         to_latex_grouped(elementary_E(family, n, k), chi_mask());
}

}  // namespace sqh
