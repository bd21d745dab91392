#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace nahmrat {

// Exact Gaussian rational a + b*i with a, b arbitrary-precision rationals.
// mpq_class keeps denominators positive and in lowest terms, so equality is
// plain component comparison.
class GaussScalar {
public:
  GaussScalar() : re_(0), im_(0) {}
  GaussScalar(long v) : re_(v), im_(0) {}  // NOLINT(google-explicit-constructor)
  GaussScalar(const mpq_class& re) : re_(re), im_(0) { re_.canonicalize(); }  // NOLINT
  GaussScalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }
  GaussScalar(long p, long q) : re_(mpq_class(p, q)), im_(0) { re_.canonicalize(); }

  static GaussScalar i() { return GaussScalar(mpq_class(0), mpq_class(1)); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }

  GaussScalar conj() const { return GaussScalar(re_, -im_); }

  GaussScalar operator-() const { return GaussScalar(-re_, -im_); }
  GaussScalar& operator+=(const GaussScalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussScalar& operator-=(const GaussScalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussScalar& operator*=(const GaussScalar& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  GaussScalar& operator/=(const GaussScalar& o);

  friend GaussScalar operator+(GaussScalar a, const GaussScalar& b) { return a += b; }
  friend GaussScalar operator-(GaussScalar a, const GaussScalar& b) { return a -= b; }
  friend GaussScalar operator*(GaussScalar a, const GaussScalar& b) { return a *= b; }
  friend GaussScalar operator/(GaussScalar a, const GaussScalar& b) { return a /= b; }
  friend bool operator==(const GaussScalar& a, const GaussScalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussScalar& a, const GaussScalar& b) { return !(a == b); }

  // Text form: "a/b" when real, "a/b+c/di" / "a/b-c/di" otherwise.  Integer
  // denominators of 1 print without the slash, matching GMP.
  std::string str() const;
  // Parses the forms produced by str() plus bare "i", "-i", "3i", "(a+bi)".
  static GaussScalar parse(const std::string& text);

  double re_d() const { return re_.get_d(); }
  double im_d() const { return im_.get_d(); }

private:
  mpq_class re_, im_;
};

std::ostream& operator<<(std::ostream& os, const GaussScalar& s);

}  // namespace nahmrat
