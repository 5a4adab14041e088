#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace ospd::exactlin {

// Exact rational number. Values whose numerator and denominator fit in a
// signed 64-bit word are kept inline; anything larger spills into a GMP
// rational. The representation is always canonical: denominator > 0,
// gcd(num, den) = 1, and a value is small whenever it fits.
class Rational {
 public:
  Rational() = default;
  Rational(long long value) : num_(value) {  // NOLINT(google-explicit-constructor)
    if (value == INT64_MIN) assign_big(mpq_class(mpz_class(static_cast<long>(value))));
  }
  Rational(long long num, long long den);
  explicit Rational(const mpq_class& value) { assign_big(value); }

  Rational(const Rational& other) : num_(other.num_), den_(other.den_) {
    if (other.big_) big_ = std::make_unique<mpq_class>(*other.big_);
  }
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& other) {
    if (this != &other) {
      num_ = other.num_;
      den_ = other.den_;
      big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;

  // Parses "p", "p/q" or "-p/q" (decimal).
  static Rational parse(std::string_view text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  bool is_small() const { return !big_; }
  int sign() const;

  mpq_class to_mpq() const;
  // Canonical "p/q" text, always with an explicit denominator.
  std::string str() const;
  std::string numerator_str() const;
  std::string denominator_str() const;
  // Only valid when is_small().
  std::int64_t small_num() const { return num_; }
  std::int64_t small_den() const { return den_; }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // Checks the canonical-form invariant; used by property tests.
  bool is_canonical() const;

 private:
  void assign_big(const mpq_class& value);
  void assign_wide(__int128 num, __int128 den);
  void slow_add(const Rational& rhs, bool subtract);
  void slow_mul(const Rational& rhs);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace ospd::exactlin
