#pragma once

#include <complex>
#include <string>

#include <gmpxx.h>

namespace xlk {

using Complex = std::complex<double>;

// a + b i with a, b arbitrary-precision rationals
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(long v) : re_(v), im_(0) {}
  GaussRational(const mpq_class& re, const mpq_class& im = 0) : re_(re), im_(im) {
    re_.canonicalize();
    im_.canonicalize();
  }
  static GaussRational frac(long num, long den) { return GaussRational(mpq_class(num, den)); }
  static GaussRational i() { return GaussRational(0, 1); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussRational conj() const { return GaussRational(re_, -im_); }
  GaussRational inverse() const;
  Complex to_complex() const { return {re_.get_d(), im_.get_d()}; }

  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  GaussRational operator-() const { return GaussRational(-re_, -im_); }

  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

  // "3/2", "-i", "3/2*i", "(1-2*i)"
  std::string to_string() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

inline Complex to_complex(const GaussRational& g) { return g.to_complex(); }
inline Complex to_complex(const Complex& z) { return z; }

}  // namespace xlk
