#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

namespace dynflow {

/// Exact fraction backed by GMP. Always in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(const mpz_class& num, const mpz_class& den = 1);
  explicit Rational(mpq_class q);

  /// Parses "n", "n/d" or "-n/d".
  static Rational parse(std::string_view text);
  /// 2^e for any signed e.
  static Rational pow2(long e);
  /// base^e for e >= 0.
  static Rational pow(const Rational& base, unsigned long e);

  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  /// Requires is_integer() and a value that fits in int64.
  std::int64_t to_int64() const;
  /// floor(this)
  mpz_class floor() const;
  double to_double() const { return q_.get_d(); }

  /// Always "num/den", even for integers.
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.q_, b.q_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  mpq_class q_;
};

Rational abs(const Rational& r);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// Largest g > 0 such that every value is an integer multiple of g. Zeros are
/// ignored. Throws std::invalid_argument for empty/all-zero input or a
/// negative value.
Rational rat_gcd(std::span<const Rational> values);

/// Least common multiple of the denominators.
mpz_class common_denominator(std::span<const Rational> values);

}  // namespace dynflow

template <>
struct std::hash<dynflow::Rational> {
  std::size_t operator()(const dynflow::Rational& r) const noexcept {
    return std::hash<std::string>{}(r.str());
  }
};
