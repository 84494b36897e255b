#include "sqh/calogero_moser.hpp"

#include <map>
#include <mutex>

#include "sqh/errors.hpp"
#include "sqh/qh_stable.hpp"
#include "sqh/textio.hpp"

namespace sqh {

namespace {

RatExpr hbar() { return RatExpr::of(var::hbar()); }

const std::vector<MonomialMap>& twists(const WeylContext& ctx) {
  static std::mutex mu;
  static std::map<std::string, std::vector<MonomialMap>> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(ctx.rs.name());
  if (it != memo.end()) return it->second;
  std::vector<MonomialMap> maps;
  for (const auto& w : ctx.elems) maps.push_back(q_action(w, true));
  return memo.emplace(ctx.rs.name(), std::move(maps)).first->second;
}

}  // namespace

SkewElem SkewElem::zero(const WeylContext& ctx) { return {std::vector<RatExpr>(std::size_t(ctx.size()))}; }

SkewElem SkewElem::scalar(const WeylContext& ctx, const RatExpr& f) {
  SkewElem e = zero(ctx);
  e.coeff[std::size_t(ctx.index(WeylElem::identity(ctx.rs.dim())))] = f;
  return e;
}

SkewElem SkewElem::group(const WeylContext& ctx, const WeylElem& w) {
  SkewElem e = zero(ctx);
  e.coeff[std::size_t(ctx.index(w))] = 1;
  return e;
}

bool SkewElem::is_zero() const {
  for (const auto& c : coeff)
    if (!c.is_zero()) return false;
  return true;
}

bool SkewElem::operator==(const SkewElem& o) const {
  if (coeff.size() != o.coeff.size()) return false;
  for (std::size_t i = 0; i < coeff.size(); ++i)
    if (!(coeff[i] == o.coeff[i])) return false;
  return true;
}

SkewElem SkewElem::operator+(const SkewElem& o) const {
  SkewElem r{coeff};
  for (std::size_t i = 0; i < coeff.size(); ++i) r.coeff[i] += o.coeff[i];
  return r;
}

SkewElem SkewElem::operator-(const SkewElem& o) const {
  SkewElem r{coeff};
  for (std::size_t i = 0; i < coeff.size(); ++i) r.coeff[i] -= o.coeff[i];
  return r;
}

RatExpr SkewElem::sum_of_coefficients() const {
  RatExpr s;
  for (const auto& c : coeff) s += c;
  return s;
}

SkewElem dunkl(const WeylContext& ctx, const Weight& lambda) {
  SkewElem d = SkewElem::scalar(ctx, p_form(lambda));
  const auto& roots = ctx.rs.positive_roots;
  for (std::size_t r = 0; r < roots.size(); ++r) {
    Rational c = pairing(lambda, roots[r].coroot);
    if (c.is_zero()) continue;
    RatExpr q = q_power(roots[r].coroot);
    d.coeff[std::size_t(ctx.index(ctx.reflections[r]))] -= hbar() * RatExpr(c) * q / (RatExpr(1) - q);
  }
  return d;
}

SkewElem skew_mul(const WeylContext& ctx, const SkewElem& a, const SkewElem& b) {
  const auto& tw = twists(ctx);
  SkewElem r = SkewElem::zero(ctx);
  for (std::size_t i = 0; i < a.coeff.size(); ++i) {
    if (a.coeff[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeff.size(); ++j) {
      if (b.coeff[j].is_zero()) continue;
      int k = ctx.index(ctx.elems[i] * ctx.elems[j]);
      r.coeff[std::size_t(k)] += a.coeff[i] * apply(tw[i], b.coeff[j]);
    }
  }
  return r;
}

SkewElem skew_pow(const WeylContext& ctx, const SkewElem& a, int k) {
  if (k < 0) throw DomainError("negative power in the skew group algebra");
  SkewElem r = SkewElem::scalar(ctx, 1);
  for (int i = 0; i < k; ++i) r = skew_mul(ctx, r, a);
  return r;
}

SkewElem eval_on_dunkl(const WeylContext& ctx, const Poly& f) {
  const int n = ctx.rs.dim();
  std::vector<std::vector<SkewElem>> powers(static_cast<std::size_t>(n));  // powers[i][m] = Dun_{e_(i+1)}^m
  auto power = [&](int i, int m) -> const SkewElem& {
    auto& ps = powers[std::size_t(i)];
    if (ps.empty()) ps.push_back(SkewElem::scalar(ctx, 1));
    while (int(ps.size()) <= m) ps.push_back(skew_mul(ctx, ps.back(), dunkl(ctx, Weight::unit(n, i + 1))));
    return ps[std::size_t(m)];
  };
  SkewElem total = SkewElem::zero(ctx);
  for (const auto& t : f.terms()) {
    Monomial rest = t.m;
    SkewElem prod = SkewElem::scalar(ctx, 1);
    for (int i = 0; i < n; ++i) {
      int slot = var::p(i + 1).slot();
      int m = t.m[slot];
      if (m < 0) throw DomainError("negative p exponent in eval_on_dunkl");
      rest.set(slot, 0);
      if (m > 0) prod = skew_mul(ctx, prod, power(i, m));
    }
    RatExpr c = RatExpr(Poly::monomial(rest, t.c));
    for (auto& x : prod.coeff)
      if (!x.is_zero()) x = c * x;
    total = total + prod;
  }
  return total;
}

RatExpr radial_part(const WeylContext& ctx, const Weight& lambda, int k) {
  if (k < 1) throw DomainError("radial part needs k >= 1");
  RatExpr f;
  for (const auto& u : min_coset_reps(ctx.rs, lambda, ctx.elems.size()).reps)
    f += p_form(act_weight(u, lambda)).pow(k);
  return eval_on_dunkl(ctx, f.num()).sum_of_coefficients();
}

SymMatrix y_matrix(const WeylContext& ctx, const Weight& lambda) {
  return theta_matrix(ctx, lambda).skeleton([](const Weight& mu) { return p_form(mu); });
}

RatExpr gauge_classical(const RatExpr& x, const RootSystem& rs) {
  std::map<int, RatExpr> sub;
  for (int i = 1; i <= rs.dim(); ++i)
    sub[var::p(i).slot()] = RatExpr::of(var::p(i)) + delta_class_shift(rs, Weight::unit(rs.dim(), i));
  return substitute(x, sub);
}

SymMatrix right_regular(const WeylContext& ctx, const SkewElem& x) {
  const auto& tw = twists(ctx);
  const int n = ctx.size();
  SymMatrix m = zero_matrix(n);
  for (int w = 0; w < n; ++w)
    for (int v = 0; v < n; ++v) {
      const RatExpr& c = x.coeff[std::size_t(v)];
      if (c.is_zero()) continue;
      int row = ctx.index(ctx.elems[std::size_t(w)] * ctx.elems[std::size_t(v)]);
      m(row, w) += apply(tw[std::size_t(w)], c);
    }
  return m;
}

// ---------------------------------------------------------------- checks

namespace {

VerifyReport start(const std::string& suite, const WeylContext& ctx, const std::string& label, int k) {
  VerifyReport r;
  r.suite = suite;
  r.instance = instance_name(ctx.rs, label, k);
  r.reproducer = reproducer(suite, ctx.rs, label, k);
  r.pass = true;
  return r;
}

}  // namespace

VerifyReport verify_cm_corollary(const WeylContext& ctx, const Weight& lambda, int k, const std::string& weight_label) {
  Stopwatch sw;
  VerifyReport r = start("cm", ctx, weight_label, k);
  expect_equal(r, "tr(Y^k) vs radial part", trace(matpow(y_matrix(ctx, lambda), k)), radial_part(ctx, lambda, k));
  r.seconds = sw.seconds();
  return r;
}

VerifyReport verify_hamiltonian(const WeylContext& ctx, const Weight& lambda, const std::string& weight_label) {
  if (!is_strictly_dominant(ctx.rs, lambda) && !is_strictly_dominant(ctx.rs, -lambda))
    throw DomainError("the Hamiltonian check needs a strictly dominant weight");
  Stopwatch sw;
  VerifyReport r = start("hamiltonian", ctx, weight_label, 0);
  RatExpr rhs;
  for (const auto& w : ctx.elems) rhs += p_form(act_weight(w, lambda)).pow(2);
  for (const auto& root : ctx.rs.positive_roots) {
    Rational s;
    for (const auto& w : ctx.elems) {
      Rational c = pairing(act_weight(w, lambda), root.coroot);
      s += c * c;
    }
    RatExpr q = q_power(root.coroot);
    rhs -= hbar() * hbar() * RatExpr(s) / (q - RatExpr(2) + q.inverse());
  }
  expect_equal(r, "tr(Y^2)", trace(matpow(y_matrix(ctx, lambda), 2)), rhs);
  r.seconds = sw.seconds();
  return r;
}

VerifyReport verify_tracefree(const WeylContext& ctx, const Weight& lambda, int k, const std::string& weight_label) {
  if (!is_strictly_dominant(ctx.rs, lambda) && !is_strictly_dominant(ctx.rs, -lambda))
    throw DomainError("the trace-free formula needs a strictly dominant weight");
  Stopwatch sw;
  VerifyReport r = start("tracefree", ctx, weight_label, k);
  SkewElem total = SkewElem::zero(ctx);
  SkewElem base = skew_pow(ctx, dunkl(ctx, lambda), k);
  for (const auto& w : ctx.elems) {
    total = total + skew_pow(ctx, dunkl(ctx, act_weight(w, lambda)), k);
    SkewElem g = SkewElem::group(ctx, w), ginv = SkewElem::group(ctx, w.inverse());
    total = total - skew_mul(ctx, skew_mul(ctx, g, base), ginv);
  }
  expect_equal(r, "trace", trace(right_regular(ctx, total)), RatExpr(0));
  r.seconds = sw.seconds();
  return r;
}

VerifyReport verify_dunkl_commutativity(const WeylContext& ctx) {
  Stopwatch sw;
  VerifyReport r = start("cm", ctx, "", 0);
  r.instance += " dunkl commutativity";
  // Fundamental weights, then the coordinate vectors that eval_on_dunkl uses.
  std::vector<Weight> ws = ctx.rs.fundamental_weights;
  for (int i = 1; i <= ctx.rs.dim(); ++i) ws.push_back(Weight::unit(ctx.rs.dim(), i));
  for (std::size_t a = 0; a < ws.size() && r.pass; ++a)
    for (std::size_t b = a + 1; b < ws.size() && r.pass; ++b) {
      SkewElem da = dunkl(ctx, ws[a]), db = dunkl(ctx, ws[b]);
      SkewElem c = skew_mul(ctx, da, db) - skew_mul(ctx, db, da);
      for (std::size_t i = 0; i < c.coeff.size(); ++i)
        if (!expect_equal(r, "[Dun" + ws[a].str() + ", Dun" + ws[b].str() + "] at " + ctx.elems[i].str(),
                          c.coeff[i], RatExpr(0)))
          break;
    }
  r.seconds = sw.seconds();
  return r;
}

}  // namespace sqh
