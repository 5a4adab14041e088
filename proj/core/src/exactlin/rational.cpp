#include "ospd/exactlin/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace ospd::exactlin {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr i128 kSmallMax = INT64_MAX;

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(i128 v) { return v <= kSmallMax && v >= -kSmallMax; }

mpz_class to_mpz(i128 v) {
  const bool neg = v < 0;
  u128 mag = abs128(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
  mpz_class out = (hi << 64) + lo;
  return neg ? mpz_class(-out) : out;
}

}  // namespace

Rational::Rational(long long num, long long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  assign_wide(num, den);
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator");
  q.canonicalize();
  return Rational(q);
}

void Rational::assign_big(const mpq_class& value) {
  const mpz_class& n = value.get_num();
  const mpz_class& d = value.get_den();
  if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != INT64_MIN && d.get_si() != INT64_MIN) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
  } else {
    big_ = std::make_unique<mpq_class>(value);
    num_ = 0;
    den_ = 1;
  }
}

void Rational::assign_wide(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) {
    num_ = 0;
    den_ = 1;
    big_.reset();
    return;
  }
  u128 g = gcd128(abs128(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  if (fits(num) && fits(den)) {
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    big_.reset();
  } else {
    mpq_class q(to_mpz(num), to_mpz(den));
    big_ = std::make_unique<mpq_class>(q);
    num_ = 0;
    den_ = 1;
  }
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string Rational::numerator_str() const {
  return big_ ? big_->get_num().get_str() : std::to_string(num_);
}

std::string Rational::denominator_str() const {
  return big_ ? big_->get_den().get_str() : std::to_string(den_);
}

std::string Rational::str() const { return numerator_str() + "/" + denominator_str(); }

Rational Rational::operator-() const {
  Rational out;
  if (big_) {
    out.assign_big(-*big_);
  } else {
    out.num_ = -num_;
    out.den_ = den_;
  }
  return out;
}

void Rational::slow_add(const Rational& rhs, bool subtract) {
  mpq_class r = subtract ? mpq_class(to_mpq() - rhs.to_mpq()) : mpq_class(to_mpq() + rhs.to_mpq());
  assign_big(r);
}

void Rational::slow_mul(const Rational& rhs) { assign_big(mpq_class(to_mpq() * rhs.to_mpq())); }

Rational& Rational::operator+=(const Rational& rhs) {
  if (rhs.is_zero()) return *this;
  if (big_ || rhs.big_) {
    slow_add(rhs, false);
    return *this;
  }
  if (den_ == 1 && rhs.den_ == 1) {
    i128 s = static_cast<i128>(num_) + rhs.num_;
    if (fits(s)) {
      num_ = static_cast<std::int64_t>(s);
      return *this;
    }
    assign_wide(s, 1);
    return *this;
  }
  assign_wide(static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_,
              static_cast<i128>(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (rhs.is_zero()) return *this;
  if (big_ || rhs.big_) {
    slow_add(rhs, true);
    return *this;
  }
  if (den_ == 1 && rhs.den_ == 1) {
    i128 s = static_cast<i128>(num_) - rhs.num_;
    if (fits(s)) {
      num_ = static_cast<std::int64_t>(s);
      return *this;
    }
    assign_wide(s, 1);
    return *this;
  }
  assign_wide(static_cast<i128>(num_) * rhs.den_ - static_cast<i128>(rhs.num_) * den_,
              static_cast<i128>(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  if (is_zero()) return *this;
  if (rhs.is_zero()) {
    *this = Rational();
    return *this;
  }
  if (big_ || rhs.big_) {
    slow_mul(rhs);
    return *this;
  }
  if (den_ == 1 && rhs.den_ == 1) {
    i128 p = static_cast<i128>(num_) * rhs.num_;
    if (fits(p)) {
      num_ = static_cast<std::int64_t>(p);
      return *this;
    }
    assign_wide(p, 1);
    return *this;
  }
  // Cross-cancel so the product is already in lowest terms.
  u128 g1 = gcd128(abs128(num_), static_cast<u128>(rhs.den_));
  u128 g2 = gcd128(abs128(rhs.num_), static_cast<u128>(den_));
  i128 n = (static_cast<i128>(num_) / static_cast<i128>(g1)) * (static_cast<i128>(rhs.num_) / static_cast<i128>(g2));
  i128 d = (static_cast<i128>(den_) / static_cast<i128>(g2)) * (static_cast<i128>(rhs.den_) / static_cast<i128>(g1));
  if (fits(n) && fits(d)) {
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
  } else {
    assign_wide(n, d);
  }
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
  if (big_ || rhs.big_) {
    assign_big(mpq_class(to_mpq() / rhs.to_mpq()));
    return *this;
  }
  Rational inv;
  inv.num_ = rhs.num_ < 0 ? -rhs.den_ : rhs.den_;
  inv.den_ = rhs.num_ < 0 ? -rhs.num_ : rhs.num_;
  return *this *= inv;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  // Canonical form: a big value never equals a small one.
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

bool Rational::is_canonical() const {
  if (big_) {
    mpq_class copy = *big_;
    copy.canonicalize();
    bool fits_small = big_->get_num().fits_slong_p() && big_->get_den().fits_slong_p() &&
                      big_->get_num().get_si() != INT64_MIN && big_->get_den().get_si() != INT64_MIN;
    return copy == *big_ && big_->get_den() > 0 && !fits_small;
  }
  if (den_ <= 0) return false;
  if (num_ == 0) return den_ == 1;
  return gcd128(abs128(num_), static_cast<u128>(den_)) == 1;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

}  // namespace ospd::exactlin
