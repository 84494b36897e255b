#include "sqh/poly.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <unordered_map>

#include "sqh/errors.hpp"

namespace sqh {

namespace {

std::int8_t checked(int v) {
  if (v > 127 || v < -127) throw ArithmeticError("exponent overflow");
  return static_cast<std::int8_t>(v);
}

struct Desc {
  bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
};

void rewrite_s(Monomial& m) {
  int es = m.e[kSSlot];
  if (es == 0 || es == 1) return;
  int q = es >= 0 ? es / 2 : -((-es + 1) / 2);
  int r = es - 2 * q;
  m.e[kSSlot] = static_cast<std::int8_t>(r);
  m.e[kHbarSlot] = checked(m.e[kHbarSlot] + q);
  m.deg = static_cast<std::int16_t>(m.deg - q);
}

Monomial inverse(const Monomial& m) {
  Monomial r;
  for (int i = 0; i < kSlots; ++i) r.e[i] = static_cast<std::int8_t>(-m.e[i]);
  r.deg = static_cast<std::int16_t>(-m.deg);
  rewrite_s(r);
  return r;
}

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) c = -1;
    else if (j == b.size()) c = 1;
    else c = compare(a[i].m, b[j].m);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j]);
      if (negate_b) out.back().c = -out.back().c;
      ++j;
    } else {
      Rational s = negate_b ? a[i].c - b[j].c : a[i].c + b[j].c;
      if (!s.is_zero()) out.push_back({a[i].m, s});
      ++i;
      ++j;
    }
  }
  return out;
}

int max_deg(const Poly& p, int slot) { return p.max_exp(slot); }

Poly content_wrt(const Poly& p, int slot);

Poly primitive_part(const Poly& p, int slot) {
  Poly c = content_wrt(p, slot);
  if (c.is_one()) return p;
  auto q = divide_exact(p, c);
  if (!q) throw InvariantViolation("content does not divide polynomial");
  return *q;
}

Poly content_wrt(const Poly& p, int slot) {
  int lo = p.min_exp(slot), hi = p.max_exp(slot);
  Poly g;
  for (int d = hi; d >= lo; --d) {
    Poly c = p.coeff(slot, d);
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.normalized() : gcd(g, c);
    if (g.is_one()) break;
  }
  return g.is_zero() ? Poly(1) : g;
}

// Scales p to integer coefficients with no common factor, so remainder
// sequences over Q do not grow their coefficients for nothing.
Poly integer_primitive(const Poly& p) {
  mpz_class num = 0, den = 1;
  for (const auto& t : p.terms()) {
    mpq_class c = t.c.to_mpq();
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  if (num == 0 || (num == 1 && den == 1)) return p;
  return p.scaled(Rational(mpq_class(den, num)));
}

Poly prem(const Poly& a, const Poly& b, int slot) {
  int n = max_deg(b, slot);
  Poly lcb = b.coeff(slot, n);
  Poly r = a;
  while (!r.is_zero() && max_deg(r, slot) >= n) {
    int d = max_deg(r, slot);
    Poly lcr = r.coeff(slot, d);
    r = r * lcb - (lcr * b).shifted(Monomial::of(Var::from_slot(slot), d - n));
  }
  return r;
}

}  // namespace

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(Var v, int exp) {
  Monomial m;
  m.e[v.slot()] = checked(exp);
  m.deg = static_cast<std::int16_t>(exp);
  rewrite_s(m);
  return m;
}

bool Monomial::has_negative() const {
  for (auto x : e)
    if (x < 0) return true;
  return false;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kSlots; ++i) {
    int s = e[i] + o.e[i];
    if (s > 127 || s < -127) throw ArithmeticError("exponent overflow");
    r.e[i] = static_cast<std::int8_t>(s);
  }
  r.deg = static_cast<std::int16_t>(deg + o.deg);
  rewrite_s(r);
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const { return *this * inverse(o); }

Monomial Monomial::pow(int k) const {
  Monomial r;
  for (int i = 0; i < kSlots; ++i) r.e[i] = checked(e[i] * k);
  r.deg = static_cast<std::int16_t>(deg * k);
  rewrite_s(r);
  return r;
}

void Monomial::set(int slot, int value) {
  deg = static_cast<std::int16_t>(deg - e[slot] + value);
  e[slot] = checked(value);
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto x : e) {
    h ^= static_cast<std::uint8_t>(x);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

int compare(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
  for (int i = kNumVars - 1; i >= 0; --i) {
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
  }
  return 0;
}

// ---------------------------------------------------------------- Poly

Poly::Poly(const Rational& c) {
  if (!c.is_zero()) terms_.push_back({Monomial{}, c});
}

Poly Poly::of(Var v, int exp) { return monomial(Monomial::of(v, exp)); }

Poly Poly::monomial(const Monomial& m, const Rational& c) {
  Poly p;
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return compare(a.m, b.m) > 0; });
  Poly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().m == t.m) {
      p.terms_.back().c += t.c;
      if (p.terms_.back().c.is_zero()) p.terms_.pop_back();
    } else if (!t.c.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Rational Poly::constant_term() const {
  for (const auto& t : terms_)
    if (t.m.is_one()) return t.c;
  return Rational();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Poly r;
  r.terms_ = merge(a.terms_, b.terms_, false);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  if (b.is_zero()) return a;
  Poly r;
  r.terms_ = merge(a.terms_, b.terms_, true);
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  const Poly& small = a.size() <= b.size() ? a : b;
  const Poly& big = a.size() <= b.size() ? b : a;
  const bool s_clash = a.uses(kSSlot) && b.uses(kSSlot);
  if (!s_clash && small.size() <= 8) {
    Poly acc = big.shifted(small.terms_[0].m).scaled(small.terms_[0].c);
    for (std::size_t i = 1; i < small.size(); ++i) acc += big.shifted(small.terms_[i].m).scaled(small.terms_[i].c);
    return acc;
  }
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) {
      auto [it, fresh] = acc.try_emplace(x.m * y.m, x.c * y.c);
      if (!fresh) it->second += x.c * y.c;
    }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) terms.push_back({m, c});
  return Poly::from_terms(std::move(terms));
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].m == b.terms_[i].m) || !(a.terms_[i].c == b.terms_[i].c)) return false;
  return true;
}

Poly Poly::scaled(const Rational& c) const {
  if (c.is_zero()) return Poly();
  if (c.is_one()) return *this;
  Poly r = *this;
  for (auto& t : r.terms_) t.c *= c;
  return r;
}

Poly Poly::shifted(const Monomial& m) const {
  if (m.is_one()) return *this;
  Poly r = *this;
  for (auto& t : r.terms_) t.m = t.m * m;
  if (m.uses(kSSlot) && uses(kSSlot))
    std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& x, const Term& y) { return compare(x.m, y.m) > 0; });
  return r;
}

Poly Poly::pow(unsigned k) const {
  Poly r(1), base = *this;
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

bool Poly::uses(int slot) const {
  for (const auto& t : terms_)
    if (t.m.e[slot] != 0) return true;
  return false;
}

bool Poly::uses_any_of(const std::array<bool, kSlots>& mask) const {
  for (const auto& t : terms_)
    for (int i = 0; i < kNumVars; ++i)
      if (mask[i] && t.m.e[i] != 0) return true;
  return false;
}

int Poly::min_exp(int slot) const {
  int r = 127;
  for (const auto& t : terms_) r = std::min<int>(r, t.m.e[slot]);
  return terms_.empty() ? 0 : r;
}

int Poly::max_exp(int slot) const {
  int r = -127;
  for (const auto& t : terms_) r = std::max<int>(r, t.m.e[slot]);
  return terms_.empty() ? 0 : r;
}

Monomial Poly::content() const {
  Monomial m;
  if (terms_.empty()) return m;
  m = terms_[0].m;
  for (const auto& t : terms_)
    for (int i = 0; i < kNumVars; ++i) m.e[i] = std::min(m.e[i], t.m.e[i]);
  int d = 0;
  for (int i = 0; i < kNumVars; ++i) d += m.e[i];
  m.deg = static_cast<std::int16_t>(d);
  return m;
}

Poly Poly::coeff(int slot, int exp) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.m.e[slot] != exp) continue;
    Term u = t;
    u.m.set(slot, 0);
    out.push_back(u);
  }
  return from_terms(std::move(out));
}

Poly Poly::normalized(Rational* unit_c, Monomial* unit_m) const {
  if (terms_.empty()) throw ArithmeticError("normalizing the zero polynomial");
  Monomial m = content();
  Poly r = shifted(inverse(m));
  Rational c = r.lead().c;
  r = r.scaled(c.inverse());
  if (unit_c) *unit_c = c;
  if (unit_m) *unit_m = m;
  return r;
}

std::uint64_t Poly::eval_mod(const std::array<std::uint64_t, kSlots>& point) const {
  std::uint64_t acc = 0;
  std::array<std::uint64_t, kSlots> inv{};
  for (const auto& t : terms_) {
    std::uint64_t v = t.c.mod_p();
    for (int i = 0; i < kNumVars; ++i) {
      int ex = t.m.e[i];
      if (ex == 0) continue;
      if (ex > 0) {
        v = modp::mul(v, modp::pow(point[i], ex));
      } else {
        if (inv[i] == 0) inv[i] = modp::inv(point[i]);
        v = modp::mul(v, modp::pow(inv[i], -ex));
      }
    }
    acc = modp::add(acc, v);
  }
  return acc;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    std::string mono;
    for (int i = 0; i < kNumVars; ++i) {
      int ex = t.m.e[i];
      if (ex == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += Var::from_slot(i).name();
      if (ex != 1) mono += "^" + std::to_string(ex);
    }
    Rational c = t.c;
    bool neg = c.sign() < 0;
    if (neg) c = -c;
    std::string body;
    if (mono.empty()) body = c.str();
    else if (c.is_one()) body = mono;
    else body = c.str() + "*" + mono;
    if (first) out = neg ? "-" + body : body;
    else out += (neg ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

int compare(const Poly& a, const Poly& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = compare(a.terms()[i].m, b.terms()[i].m);
    if (c) return c;
    auto o = a.terms()[i].c <=> b.terms()[i].c;
    if (o != 0) return o < 0 ? -1 : 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

// ---------------------------------------------------------------- division

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw ArithmeticError("division by the zero polynomial");
  if (a.is_zero()) return Poly();
  if (b.is_monomial()) return a.shifted(inverse(b.lead().m)).scaled(b.lead().c.inverse());

  // Newton-box bounds on the quotient: every quotient term lies in
  // [min(a) - min(b), max(a) - max(b)] slotwise, which also bounds the loop.
  std::array<int, kSlots> lo{}, hi{};
  for (int i = 0; i < kNumVars; ++i) {
    lo[i] = a.min_exp(i) - b.min_exp(i);
    hi[i] = a.max_exp(i) - b.max_exp(i);
    if (lo[i] > hi[i]) return std::nullopt;
  }
  std::map<Monomial, Rational, Desc> rem;
  for (const auto& t : a.terms()) rem.emplace_hint(rem.end(), t.m, t.c);
  const Term& lb = b.lead();
  Rational lb_inv = lb.c.inverse();
  std::vector<Term> quot;
  while (!rem.empty()) {
    auto it = rem.begin();
    Monomial qm = it->first / lb.m;
    for (int i = 0; i < kNumVars; ++i)
      if (qm.e[i] < lo[i] || qm.e[i] > hi[i]) return std::nullopt;
    Rational qc = it->second * lb_inv;
    for (const auto& t : b.terms()) {
      Monomial m = t.m * qm;
      auto [pos, fresh] = rem.try_emplace(m, -(t.c * qc));
      if (!fresh) {
        pos->second -= t.c * qc;
        if (pos->second.is_zero()) rem.erase(pos);
      }
    }
    quot.push_back({qm, qc});
  }
  return Poly::from_terms(std::move(quot));
}

const std::array<std::uint64_t, kSlots>& default_mod_point(int which) {
  static const auto points = [] {
    std::array<std::array<std::uint64_t, kSlots>, 4> pts{};
    std::mt19937_64 gen(0x5eed1234abcdULL);
    for (auto& p : pts)
      for (auto& v : p) v = 2 + gen() % (modp::P - 3);
    return pts;
  }();
  return points[which & 3];
}

std::optional<Poly> try_divide(const Poly& a, const Poly& b) {
  if (a.is_zero()) return Poly();
  if (b.size() >= 2) {
    // If b is linear in some slot with a monomial coefficient, evaluate a at
    // a root of b modulo p: a nonzero residue proves b does not divide a.
    for (int v = kNumVars - 1; v >= 0; --v) {
      if (b.max_exp(v) != 1 || b.min_exp(v) != 0) continue;
      Poly b1 = b.coeff(v, 1);
      if (!b1.is_monomial()) continue;
      auto pt = default_mod_point(1);
      pt[v] = 1;
      std::uint64_t b0 = b.coeff(v, 0).eval_mod(pt);
      std::uint64_t c1 = b1.eval_mod(pt);
      if (b0 == 0) break;
      pt[v] = modp::mul(modp::sub(0, b0), modp::inv(c1));
      if (a.eval_mod(pt) != 0) return std::nullopt;
      break;
    }
  }
  return divide_exact(a, b);
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return Poly();
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  Poly A = a.normalized(), B = b.normalized();
  if (A.is_constant() || B.is_constant()) return Poly(1);
  if (A == B) return A;
  if (A.size() <= B.size()) {
    if (try_divide(B, A)) return A;
  } else if (try_divide(A, B)) {
    return B;
  }
  int v = -1;
  for (int i = kNumVars - 1; i >= 0; --i)
    if (A.uses(i) && B.uses(i)) {
      v = i;
      break;
    }
  if (v < 0) return Poly(1);
  Poly ca = content_wrt(A, v), cb = content_wrt(B, v);
  Poly c = gcd(ca, cb);
  Poly pa = integer_primitive(*divide_exact(A, ca)), pb = integer_primitive(*divide_exact(B, cb));
  if (max_deg(pa, v) < max_deg(pb, v)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    if (max_deg(pb, v) == 0) {
      pa = Poly(1);
      break;
    }
    Poly r = prem(pa, pb, v);
    pa = pb;
    pb = r.is_zero() ? r : integer_primitive(primitive_part(r, v));
  }
  return (c * pa).normalized();
}

}  // namespace sqh
