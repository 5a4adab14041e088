#pragma once

#include "ospd/exactlin/rational.hpp"

#include <iosfwd>
#include <string>

namespace ospd::exactlin {

// Element re + im*i of the Gaussian rationals Q(i).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const { return re_.is_one() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  bool is_canonical() const { return re_.is_canonical() && im_.is_canonical(); }

  GaussianRational conj() const { return {re_, -im_}; }
  // |z|^2 as a rational.
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& rhs) {
    re_ += rhs.re_;
    im_ += rhs.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& rhs) {
    re_ -= rhs.re_;
    im_ -= rhs.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& rhs);
  GaussianRational& operator/=(const GaussianRational& rhs) { return *this *= rhs.inverse(); }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  // Human-readable form such as "1/2-3i".
  std::string str() const;

 private:
  Rational re_;
  Rational im_;
};

// Subtracts c*b from a in place; skips work when c or b vanishes.
inline void sub_mul(GaussianRational& a, const GaussianRational& c, const GaussianRational& b) {
  if (c.is_zero() || b.is_zero()) return;
  a -= c * b;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& value);

}  // namespace ospd::exactlin
