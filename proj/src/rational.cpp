#include "sqh/rational.hpp"

#include <functional>
#include <ostream>

#include "sqh/errors.hpp"

namespace sqh {

namespace {

// Small values keep |num|, den below 2^62 so that negation and the 128-bit
// intermediate products never overflow.
constexpr __int128 kLimit = __int128(1) << 62;

unsigned __int128 gcd_u128(unsigned __int128 a, unsigned __int128 b) {
  while (b != 0) {
    unsigned __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

__int128 abs128(__int128 v) { return v < 0 ? -v : v; }

mpz_class mpz_from_i128(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? (unsigned __int128)(-v) : (unsigned __int128)v;
  mpz_class hi = (unsigned long)(std::uint64_t)(u >> 64);
  mpz_class lo = (unsigned long)(std::uint64_t)u;
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

bool fits(const mpz_class& z) { return mpz_sizeinbase(z.get_mpz_t(), 2) <= 62; }

std::uint64_t mpz_mod_p(const mpz_class& z) {
  mpz_class r;
  mpz_class p = (unsigned long)modp::P;
  mpz_mod(r.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t());
  return (std::uint64_t)r.get_ui();
}

}  // namespace

namespace modp {
std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 r = (unsigned __int128)a * b;
  std::uint64_t lo = (std::uint64_t)(r & P);
  std::uint64_t hi = (std::uint64_t)(r >> 61);
  return add(lo, hi % P);
}
std::uint64_t pow(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}
std::uint64_t inv(std::uint64_t a) {
  if (a == 0) throw ArithmeticError("inverse of zero modulo p");
  return pow(a, P - 2);
}
}  // namespace modp

Rational::Rational(long v) : Rational((long long)v) {}

Rational::Rational(long long v) {
  if (v > -kLimit && v < kLimit) {
    n_ = v;
  } else {
    *this = from_mpq_demote(mpq_class(mpz_from_i128(v)));
  }
}

Rational::Rational(long long num, long long den) {
  if (den == 0) throw ArithmeticError("rational with zero denominator");
  *this = from_i128(num, den);
}

Rational::Rational(const mpq_class& v) { *this = from_mpq_demote(v); }

Rational Rational::from_i128(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return Rational();
  unsigned __int128 g = gcd_u128((unsigned __int128)abs128(n), (unsigned __int128)d);
  n /= (__int128)g;
  d /= (__int128)g;
  Rational r;
  if (abs128(n) < kLimit && d < kLimit) {
    r.n_ = (std::int64_t)n;
    r.d_ = (std::int64_t)d;
    return r;
  }
  mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  r.n_ = 0;
  r.d_ = 1;
  return r;
}

Rational Rational::from_mpq_demote(mpq_class v) {
  v.canonicalize();
  Rational r;
  if (fits(v.get_num()) && fits(v.get_den())) {
    r.n_ = v.get_num().get_si();
    r.d_ = v.get_den().get_si();
    return r;
  }
  r.big_ = std::make_shared<const mpq_class>(std::move(v));
  return r;
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw DomainError("cannot parse rational '" + s + "'");
  if (q.get_den() == 0) throw ArithmeticError("rational with zero denominator");
  return from_mpq_demote(q);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class((long)n_), mpz_class((long)d_));
}

mpz_class Rational::numerator() const { return big_ ? big_->get_num() : mpz_class((long)n_); }
mpz_class Rational::denominator() const { return big_ ? big_->get_den() : mpz_class((long)d_); }

double Rational::to_double() const { return big_ ? big_->get_d() : double(n_) / double(d_); }

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (d_ == 1) return std::to_string(n_);
  return std::to_string(n_) + "/" + std::to_string(d_);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : d_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (n_ > 0) - (n_ < 0);
}

Rational Rational::operator-() const {
  if (big_) return from_mpq_demote(-*big_);
  Rational r;
  r.n_ = -n_;
  r.d_ = d_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.d_ == 1 && b.d_ == 1) return Rational::from_i128((__int128)a.n_ + b.n_, 1);
    return Rational::from_i128((__int128)a.n_ * b.d_ + (__int128)b.n_ * a.d_, (__int128)a.d_ * b.d_);
  }
  return Rational::from_mpq_demote(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.n_ == 0 || b.n_ == 0) return Rational();
    return Rational::from_i128((__int128)a.n_ * b.n_, (__int128)a.d_ * b.d_);
  }
  return Rational::from_mpq_demote(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw ArithmeticError("division by zero");
  if (!a.big_ && !b.big_) return Rational::from_i128((__int128)a.n_ * b.d_, (__int128)a.d_ * b.n_);
  return Rational::from_mpq_demote(a.to_mpq() / b.to_mpq());
}

Rational Rational::inverse() const { return Rational(1) / *this; }

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical: a promoted value never fits the small range
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    __int128 l = (__int128)a.n_ * b.d_;
    __int128 r = (__int128)b.n_ * a.d_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::uint64_t Rational::mod_p() const {
  if (!big_) {
    std::uint64_t num = n_ >= 0 ? std::uint64_t(n_) % modp::P : modp::sub(0, std::uint64_t(-n_) % modp::P);
    return modp::mul(num, modp::inv(std::uint64_t(d_) % modp::P));
  }
  return modp::mul(mpz_mod_p(big_->get_num()), modp::inv(mpz_mod_p(big_->get_den())));
}

std::size_t Rational::hash() const {
  if (!big_) return std::hash<std::int64_t>()(n_) * 31 + std::hash<std::int64_t>()(d_);
  return std::hash<std::string>()(big_->get_str());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace sqh
