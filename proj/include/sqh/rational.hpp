#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace sqh {

// Exact rational number. Small values live in two machine words; anything
// that outgrows them is promoted to a shared immutable GMP rational.
class Rational {
 public:
  Rational() noexcept = default;
  Rational(int v) noexcept : n_(v) {}
  Rational(long v);
  Rational(long long v);
  Rational(long long num, long long den);
  explicit Rational(const mpq_class& v);

  static Rational parse(std::string_view text);

  mpq_class to_mpq() const;
  mpz_class numerator() const;
  mpz_class denominator() const;
  double to_double() const;
  std::string str() const;

  bool is_zero() const noexcept { return !big_ && n_ == 0; }
  bool is_one() const noexcept { return !big_ && n_ == 1 && d_ == 1; }
  bool is_integer() const;
  int sign() const;

  // Fast path accessors; valid only when is_small().
  bool is_small() const noexcept { return !big_; }
  std::int64_t small_num() const noexcept { return n_; }
  std::int64_t small_den() const noexcept { return d_; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  Rational inverse() const;
  Rational abs() const { return sign() < 0 ? -*this : *this; }

  // Residue modulo the prime 2^61-1; throws if the denominator vanishes there.
  std::uint64_t mod_p() const;

  std::size_t hash() const;

 private:
  static Rational from_i128(__int128 n, __int128 d);
  static Rational from_mpq_demote(mpq_class v);

  std::int64_t n_ = 0;
  std::int64_t d_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

namespace modp {
inline constexpr std::uint64_t P = (std::uint64_t(1) << 61) - 1;
std::uint64_t mul(std::uint64_t a, std::uint64_t b);
inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= P ? s - P : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + P - b; }
std::uint64_t pow(std::uint64_t a, std::uint64_t e);
std::uint64_t inv(std::uint64_t a);
}  // namespace modp

}  // namespace sqh
