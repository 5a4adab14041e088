#include "ospd/exactlin/gaussian_rational.hpp"

#include <ostream>
#include <stdexcept>

namespace ospd::exactlin {

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) {
  if (im_.is_zero() && rhs.im_.is_zero()) {
    re_ *= rhs.re_;
    return *this;
  }
  if (rhs.im_.is_zero()) {
    re_ *= rhs.re_;
    im_ *= rhs.re_;
    return *this;
  }
  if (rhs.re_.is_zero()) {
    // (a+bi)(di) = -bd + adi
    Rational new_re = -(im_ * rhs.im_);
    im_ = re_ * rhs.im_;
    re_ = std::move(new_re);
    return *this;
  }
  Rational new_re = re_ * rhs.re_ - im_ * rhs.im_;
  Rational new_im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(new_re);
  im_ = std::move(new_im);
  return *this;
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw std::domain_error("GaussianRational: division by zero");
  if (im_.is_zero()) return {Rational(1) / re_, Rational(0)};
  Rational n = norm();
  return {re_ / n, -im_ / n};
}

std::string GaussianRational::str() const {
  auto show = [](const Rational& r) { return r.is_integer() ? r.numerator_str() : r.str(); };
  if (im_.is_zero()) return show(re_);
  std::string imag;
  if (im_ == Rational(1)) {
    imag = "i";
  } else if (im_ == Rational(-1)) {
    imag = "-i";
  } else {
    imag = show(im_) + "i";
  }
  if (re_.is_zero()) return imag;
  return show(re_) + (im_.sign() > 0 ? "+" : "") + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& value) { return os << value.str(); }

}  // namespace ospd::exactlin
