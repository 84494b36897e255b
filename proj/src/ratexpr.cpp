#include "sqh/ratexpr.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

#include "sqh/errors.hpp"

namespace sqh {

using Factors = std::vector<RatExpr::Factor>;

class RatExprAccess {
 public:
  static RatExpr make(Poly num, Factors f, Poly gen) {
    RatExpr r;
    r.num_ = std::move(num);
    if (r.num_.is_zero()) return r;
    r.factors_ = std::move(f);
    r.general_ = std::move(gen);
    return r;
  }
  static Poly& num(RatExpr& r) { return r.num_; }
  static Factors& factors(RatExpr& r) { return r.factors_; }
  static Poly& general(RatExpr& r) { return r.general_; }
};

namespace {

// Irreducible atoms seen by this thread; used to split polynomials that are
// neither binomials nor linear before they end up in the general part.
thread_local std::vector<Poly> t_registry;
constexpr std::size_t kRegistryCap = 4096;

void remember(const Poly& p) {
  if (t_registry.size() >= kRegistryCap) return;
  for (const auto& r : t_registry)
    if (r == p) return;
  t_registry.push_back(p);
}

void add_factor(Factors& f, const Poly& p, int mult) {
  if (mult == 0) return;
  auto it = std::lower_bound(f.begin(), f.end(), p,
                             [](const RatExpr::Factor& a, const Poly& b) { return compare(a.p, b) < 0; });
  if (it != f.end() && it->p == p) {
    it->mult += mult;
    if (it->mult == 0) f.erase(it);
  } else {
    f.insert(it, {p, mult});
  }
}

Monomial inv_mono(const Monomial& m) { return Monomial{} / m; }

// Linear in some slot with a unit (single-term) coefficient on one side:
// any factorization must then involve a unit, so the polynomial is irreducible.
bool certified_linear(const Poly& p) {
  for (int v = 0; v < kNumVars; ++v) {
    if (p.max_exp(v) != 1 || p.min_exp(v) != 0) continue;
    if (p.coeff(v, 1).is_monomial() || p.coeff(v, 0).is_monomial()) return true;
  }
  return false;
}

const std::vector<Rational>& cyclotomic(int d) {
  static thread_local std::map<int, std::vector<Rational>> cache;
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  // x^d - 1 divided by every Phi_e with e | d, e < d.
  std::vector<Rational> num(d + 1);
  num[0] = Rational(-1);
  num[d] = Rational(1);
  for (int e = 1; e < d; ++e) {
    if (d % e) continue;
    const std::vector<Rational> den = cyclotomic(e);
    std::vector<Rational> quot(num.size() - den.size() + 1);
    for (int i = int(num.size()) - 1; i >= int(den.size()) - 1; --i) {
      Rational c = num[i];
      int shift = i - int(den.size()) + 1;
      quot[shift] = c;
      for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
    }
    num = quot;
  }
  return cache.emplace(d, num).first->second;
}

void factor_into(Poly p, int mult, Factors& out, Poly& general);

Poly derivative(const Poly& p, int slot) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    int e = t.m.e[slot];
    if (!e) continue;
    Term d = t;
    d.c *= Rational(e);
    d.m.set(slot, e - 1);
    out.push_back(d);
  }
  return Poly::from_terms(std::move(out));
}

void factor_binomial(const Poly& p, int mult, Factors& out, Poly& general) {
  const Term& t1 = p.terms()[0];
  const Term& t2 = p.terms()[1];
  Monomial x = t1.m / t2.m;
  int k = 0;
  for (int i = 0; i < kNumVars; ++i) k = std::gcd(k, std::abs(int(x.e[i])));
  Monomial u;
  for (int i = 0; i < kNumVars; ++i) u.e[i] = static_cast<std::int8_t>(x.e[i] / k);
  u.deg = static_cast<std::int16_t>(x.deg / k);
  Rational c = t2.c;  // p = t2.m * (u^k + c)
  std::vector<int> ds;
  if (c == Rational(-1)) {
    for (int d = 1; d <= k; ++d)
      if (k % d == 0) ds.push_back(d);
  } else if (c == Rational(1)) {
    for (int d = 1; d <= 2 * k; ++d)
      if ((2 * k) % d == 0 && k % d != 0) ds.push_back(d);
  } else if (k == 1) {
    add_factor(out, p, mult);
    remember(p);
    return;
  } else {
    general = general * p.pow(mult);
    return;
  }
  for (int d : ds) {
    const auto& coeffs = cyclotomic(d);
    std::vector<Term> terms;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
      if (!coeffs[j].is_zero()) terms.push_back({u.pow(int(j)), coeffs[j]});
    Poly atom = Poly::from_terms(std::move(terms)).normalized();
    add_factor(out, atom, mult);
    remember(atom);
  }
}

void factor_into(Poly p, int mult, Factors& out, Poly& general) {
  if (p.is_constant()) return;
  if (p.uses(kSSlot)) throw ArithmeticError("half power of hbar inside a denominator");
  if (p.size() == 2) return factor_binomial(p, mult, out, general);
  if (certified_linear(p)) {
    add_factor(out, p, mult);
    remember(p);
    return;
  }
  bool split = false;
  const std::vector<Poly> known = t_registry;
  for (const auto& r : known) {
    if (r.size() > p.size()) continue;
    while (auto q = try_divide(p, r)) {
      add_factor(out, r, mult);
      p = *q;
      split = true;
      if (p.is_constant()) return;
    }
  }
  if (split) return factor_into(p.normalized(), mult, out, general);
  // Square-free split: expanded powers like (q1 - q2)^2 reach here when the
  // base was never seen as an atom.
  for (int v = 0; v < kNumVars; ++v) {
    if (p.max_exp(v) < 2) continue;
    Poly g = gcd(p, derivative(p, v));
    if (g.is_constant()) break;
    Poly rest = *divide_exact(p, g);
    factor_into(g, mult, out, general);
    return factor_into(rest.normalized(), mult, out, general);
  }
  general = general * p.pow(mult);
}

Poly expand(const Factors& f, const Poly& gen) {
  Poly d = gen;
  for (const auto& x : f) d = d * x.p.pow(x.mult);
  return d;
}

Poly power_product(const std::vector<std::pair<const Poly*, int>>& items) {
  Poly r(1);
  for (const auto& [p, e] : items)
    if (e > 0) r = r * p->pow(e);
  return r;
}

// Moves atoms from `atoms` that divide `gen` out of it and into `f`.
void pull_atoms(Factors& f, Poly& gen, const Factors& atoms) {
  if (gen.is_one()) return;
  for (const auto& a : atoms) {
    while (auto q = try_divide(gen, a.p)) {
      gen = *q;
      add_factor(f, a.p, 1);
      if (gen.is_one()) return;
    }
  }
}

// Cancels common factors between num and the denominator (f, gen).
void cancel(Poly& num, Factors& f, Poly& gen) {
  for (auto& x : f) {
    while (x.mult > 0) {
      auto q = try_divide(num, x.p);
      if (!q) break;
      num = *q;
      --x.mult;
    }
  }
  std::erase_if(f, [](const RatExpr::Factor& x) { return x.mult == 0; });
  if (!gen.is_one()) {
    Poly g = gcd(num, gen);
    if (!g.is_one()) {
      num = *divide_exact(num, g);
      Poly rest = *divide_exact(gen, g);
      gen = Poly(1);
      if (!rest.is_constant()) factor_into(rest.normalized(), 1, f, gen);
    }
  }
}

RatExpr subst_poly(const Poly& p, const std::map<int, RatExpr>& map) {
  // Group terms by their exponents on substituted slots.
  std::map<std::vector<int>, std::vector<Term>> groups;
  for (const auto& t : p.terms()) {
    std::vector<int> sig;
    Term rest = t;
    for (const auto& [slot, _] : map) {
      sig.push_back(t.m.e[slot]);
      rest.m.set(slot, 0);
    }
    groups[sig].push_back(rest);
  }
  RatExpr acc;
  std::map<std::pair<int, int>, RatExpr> powers;
  for (auto& [sig, terms] : groups) {
    RatExpr part(Poly::from_terms(std::move(terms)));
    std::size_t i = 0;
    for (const auto& [slot, value] : map) {
      int e = sig[i++];
      if (e == 0) continue;
      auto key = std::make_pair(slot, e);
      auto it = powers.find(key);
      if (it == powers.end()) it = powers.emplace(key, value.pow(e)).first;
      part = part * it->second;
    }
    acc += part;
  }
  return acc;
}

}  // namespace

// ---------------------------------------------------------------- basics

RatExpr RatExpr::of(Var v, int exp) { return RatExpr(Poly::of(v, exp)); }

RatExpr RatExpr::fraction(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw ArithmeticError("zero denominator");
  if (num.is_zero()) return RatExpr();
  Rational c;
  Monomial m;
  Poly dn = den.normalized(&c, &m);
  Poly n = num.shifted(inv_mono(m)).scaled(c.inverse());
  Factors f;
  Poly gen(1);
  factor_into(dn, 1, f, gen);
  cancel(n, f, gen);
  return RatExprAccess::make(std::move(n), std::move(f), std::move(gen));
}

Poly RatExpr::den() const { return expand(factors_, general_); }

Rational RatExpr::constant_value() const {
  if (!is_constant()) throw DomainError("expression is not constant: " + str());
  return num_.constant_term();
}

bool RatExpr::uses(int slot) const {
  if (num_.uses(slot) || general_.uses(slot)) return true;
  for (const auto& f : factors_)
    if (f.p.uses(slot)) return true;
  return false;
}

RatExpr RatExpr::operator-() const {
  RatExpr r = *this;
  r.num_ = -r.num_;
  return r;
}

RatExpr operator*(const RatExpr& a, const RatExpr& b) {
  if (a.is_zero() || b.is_zero()) return RatExpr();
  if (a.is_polynomial() && b.is_polynomial()) return RatExpr(a.num_ * b.num_);
  Poly na = a.num_, nb = b.num_;
  Factors fa = a.factors_, fb = b.factors_;
  Poly ga = a.general_, gb = b.general_;
  pull_atoms(fa, ga, b.factors_);
  pull_atoms(fb, gb, a.factors_);
  if (!b.is_polynomial()) cancel(na, fb, gb);
  if (!a.is_polynomial()) cancel(nb, fa, ga);
  for (const auto& x : fb) add_factor(fa, x.p, x.mult);
  return RatExprAccess::make(na * nb, std::move(fa), ga * gb);
}

RatExpr operator+(const RatExpr& a, const RatExpr& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_polynomial() && b.is_polynomial()) return RatExpr(a.num_ + b.num_);
  if (a.factors_ == b.factors_ && a.general_ == b.general_) {
    Poly n = a.num_ + b.num_;
    if (n.is_zero()) return RatExpr();
    Factors f = a.factors_;
    Poly g = a.general_;
    cancel(n, f, g);
    return RatExprAccess::make(std::move(n), std::move(f), std::move(g));
  }
  Factors fa = a.factors_, fb = b.factors_;
  Poly ga = a.general_, gb = b.general_;
  pull_atoms(fa, ga, b.factors_);
  pull_atoms(fb, gb, a.factors_);

  struct Entry {
    const Poly* p;
    int ma, mb;
  };
  std::vector<Entry> all;
  std::size_t i = 0, j = 0;
  while (i < fa.size() || j < fb.size()) {
    int c = i == fa.size() ? 1 : j == fb.size() ? -1 : compare(fa[i].p, fb[j].p);
    if (c < 0) {
      all.push_back({&fa[i].p, fa[i].mult, 0});
      ++i;
    } else if (c > 0) {
      all.push_back({&fb[j].p, 0, fb[j].mult});
      ++j;
    } else {
      all.push_back({&fa[i].p, fa[i].mult, fb[j].mult});
      ++i;
      ++j;
    }
  }
  Poly g(1);
  if (!ga.is_one() && !gb.is_one()) g = gcd(ga, gb);
  Poly mul_a_gen = g.is_one() ? gb : *divide_exact(gb, g);
  Poly mul_b_gen = g.is_one() ? ga : *divide_exact(ga, g);
  std::vector<std::pair<const Poly*, int>> pa, pb;
  for (const auto& e : all) {
    int m = std::max(e.ma, e.mb);
    pa.push_back({e.p, m - e.ma});
    pb.push_back({e.p, m - e.mb});
  }
  Poly n = a.num_ * (power_product(pa) * mul_a_gen) + b.num_ * (power_product(pb) * mul_b_gen);
  if (n.is_zero()) return RatExpr();
  Factors f;
  for (const auto& e : all) {
    int m = std::max(e.ma, e.mb);
    if (e.ma == e.mb) {
      while (m > 0) {
        auto q = try_divide(n, *e.p);
        if (!q) break;
        n = *q;
        --m;
      }
    }
    if (m > 0) f.push_back({*e.p, m});
  }
  Poly gen = ga * mul_a_gen;
  if (!g.is_one()) {
    Factors none;
    cancel(n, none, gen);
    for (const auto& x : none) add_factor(f, x.p, x.mult);
  }
  return RatExprAccess::make(std::move(n), std::move(f), std::move(gen));
}

RatExpr operator-(const RatExpr& a, const RatExpr& b) { return a + (-b); }

RatExpr RatExpr::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero expression");
  Rational c;
  Monomial m;
  Poly nn = num_.normalized(&c, &m);
  Poly n = den().shifted(inv_mono(m)).scaled(c.inverse());
  Factors f;
  Poly gen(1);
  factor_into(nn, 1, f, gen);
  return RatExprAccess::make(std::move(n), std::move(f), std::move(gen));
}

RatExpr operator/(const RatExpr& a, const RatExpr& b) { return a * b.inverse(); }

RatExpr RatExpr::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  if (k == 0) return RatExpr(1);
  if (is_zero()) return RatExpr();
  // A reduced fraction stays reduced under powers.
  Factors f = factors_;
  for (auto& x : f) x.mult *= k;
  return RatExprAccess::make(num_.pow(unsigned(k)), std::move(f), general_.pow(unsigned(k)));
}

bool operator==(const RatExpr& a, const RatExpr& b) {
  if (a.general_.is_one() && b.general_.is_one()) return a.num_ == b.num_ && a.factors_ == b.factors_;
  return (a - b).is_zero();
}

std::uint64_t RatExpr::eval_mod(const std::array<std::uint64_t, kSlots>& point) const {
  std::uint64_t d = den().eval_mod(point);
  if (d == 0) throw ArithmeticError("denominator vanishes at evaluation point");
  return modp::mul(num_.eval_mod(point), modp::inv(d));
}

namespace {
Rational eval_poly(const Poly& p, const std::map<int, Rational>& values) {
  Rational acc;
  for (const auto& t : p.terms()) {
    Rational v = t.c;
    for (int i = 0; i < kNumVars; ++i) {
      int e = t.m.e[i];
      if (e == 0) continue;
      auto it = values.find(i);
      if (it == values.end()) throw DomainError("missing value for " + Var::from_slot(i).name());
      Rational base = e > 0 ? it->second : it->second.inverse();
      for (int k = 0; k < std::abs(e); ++k) v *= base;
    }
    acc += v;
  }
  return acc;
}
}  // namespace

Rational RatExpr::eval(const std::map<int, Rational>& values) const {
  Rational d = eval_poly(den(), values);
  if (d.is_zero()) throw ArithmeticError("denominator vanishes at evaluation point");
  return eval_poly(num_, values) / d;
}

std::string RatExpr::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den().str() + ")";
}

RatExpr normalize(const RatExpr& x) { return RatExpr::fraction(x.num(), x.den()); }

// ---------------------------------------------------------------- substitution

RatExpr substitute(const RatExpr& x, const std::map<int, RatExpr>& map) {
  if (map.empty() || x.is_zero()) return x;
  std::array<bool, kSlots> mask{};
  for (const auto& [slot, _] : map) mask[slot] = true;
  RatExpr num = x.num().uses_any_of(mask) ? subst_poly(x.num(), map) : RatExpr(x.num());
  bool den_touched = x.general().uses_any_of(mask);
  for (const auto& f : x.factors()) den_touched = den_touched || f.p.uses_any_of(mask);
  RatExpr den_inv;
  if (!den_touched) {
    den_inv = RatExprAccess::make(Poly(1), x.factors(), x.general());
  } else {
    RatExpr d = subst_poly(x.general(), map);
    for (const auto& f : x.factors()) d = d * subst_poly(f.p, map).pow(f.mult);
    if (d.is_zero()) throw ArithmeticError("substitution sends a denominator to zero");
    den_inv = d.inverse();
  }
  return num * den_inv;
}

MonomialMap::MonomialMap() {
  for (int i = 0; i < kNumVars; ++i) {
    image[i] = Monomial::of(Var::from_slot(i));
    sign[i] = 1;
  }
  for (int i = kNumVars; i < kSlots; ++i) sign[i] = 1;
}

Monomial MonomialMap::apply(const Monomial& m, int* sign_out) const {
  Monomial r;
  int s = 1;
  for (int i = 0; i < kNumVars; ++i) {
    int e = m.e[i];
    if (e == 0) continue;
    r = r * image[i].pow(e);
    if (sign[i] < 0 && (e & 1)) s = -s;
  }
  if (sign_out) *sign_out = s;
  return r;
}

Poly apply(const MonomialMap& f, const Poly& p) {
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    int s;
    Monomial m = f.apply(t.m, &s);
    out.push_back({m, s < 0 ? -t.c : t.c});
  }
  return Poly::from_terms(std::move(out));
}

RatExpr apply(const MonomialMap& f, const RatExpr& x) {
  if (x.is_zero()) return x;
  Poly num = apply(f, x.num());
  // Automorphisms keep atoms irreducible and pairwise coprime; only the
  // units pulled out during renormalization move to the numerator.
  Factors fs;
  for (const auto& a : x.factors()) {
    Rational c;
    Monomial m;
    Poly img = apply(f, a.p).normalized(&c, &m);
    Rational cp(1);
    for (int k = 0; k < a.mult; ++k) cp *= c;
    num = num.shifted(inv_mono(m.pow(a.mult))).scaled(cp.inverse());
    add_factor(fs, img, a.mult);
    remember(img);
  }
  Poly gen(1);
  if (!x.general().is_one()) {
    Rational c;
    Monomial m;
    gen = apply(f, x.general()).normalized(&c, &m);
    num = num.shifted(inv_mono(m)).scaled(c.inverse());
  }
  return RatExprAccess::make(std::move(num), std::move(fs), std::move(gen));
}

// ---------------------------------------------------------------- hbar limit

namespace {

int half_deg(const Monomial& m) { return 2 * m.e[kHbarSlot] + m.e[kSSlot]; }

int top_half_deg(const Poly& p) {
  int d = INT_MIN;
  for (const auto& t : p.terms()) d = std::max(d, half_deg(t.m));
  return d;
}

Poly top_part(const Poly& p, int d) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    if (half_deg(t.m) != d) continue;
    Term u = t;
    u.m.set(kHbarSlot, 0);
    u.m.set(kSSlot, 0);
    out.push_back(u);
  }
  return Poly::from_terms(std::move(out));
}

}  // namespace

int hbar_half_degree(const RatExpr& x) {
  if (x.is_zero()) return INT_MIN;
  int d = top_half_deg(x.num()) - top_half_deg(x.general());
  for (const auto& f : x.factors()) d -= f.mult * top_half_deg(f.p);
  return d;
}

RatExpr limit_hbar_inf(const RatExpr& x) {
  if (x.is_zero()) return x;
  int nd = top_half_deg(x.num());
  int dd = top_half_deg(x.general());
  Poly lc = top_part(x.general(), dd);
  for (const auto& f : x.factors()) {
    int d = top_half_deg(f.p);
    dd += f.mult * d;
    lc = lc * top_part(f.p, d).pow(unsigned(f.mult));
  }
  int gap = nd - dd;
  if (gap < 0) return RatExpr();
  if (gap > 0)
    throw LimitError("divergent hbar limit (gap " + std::to_string(gap) + " half-degrees): " + x.str(), gap);
  return RatExpr::fraction(top_part(x.num(), nd), lc);
}

}  // namespace sqh
