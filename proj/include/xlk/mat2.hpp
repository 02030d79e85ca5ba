#pragma once

#include <algorithm>
#include <cmath>
#include <ostream>

#include "xlk/gaussian.hpp"
#include "xlk/laurent.hpp"

namespace xlk {

template <class T>
struct Mat2 {
  T a, b, c, d;

  Mat2() : a(1), b(0), c(0), d(1) {}
  Mat2(T a_, T b_, T c_, T d_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

  static Mat2 identity() { return Mat2(); }

  T det() const { return a * d - b * c; }
  T trace() const { return a + d; }
  Mat2 adjugate() const { return Mat2(d, -b, -c, a); }
  // valid for determinant-one matrices
  Mat2 inverse() const { return adjugate(); }

  Mat2 operator*(const Mat2& o) const {
    return Mat2(a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d);
  }
  Mat2& operator*=(const Mat2& o) { return *this = *this * o; }
  Mat2 operator+(const Mat2& o) const { return Mat2(a + o.a, b + o.b, c + o.c, d + o.d); }
  Mat2 operator-(const Mat2& o) const { return Mat2(a - o.a, b - o.b, c - o.c, d - o.d); }
  Mat2 operator-() const { return Mat2(-a, -b, -c, -d); }
  Mat2 scaled(const T& s) const { return Mat2(a * s, b * s, c * s, d * s); }

  bool operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
  bool operator!=(const Mat2& o) const { return !(*this == o); }
};

using CMat = Mat2<Complex>;
using QMat = Mat2<GaussRational>;
using PMat = Mat2<LaurentPoly>;

template <class T>
Mat2<T> conjugate(const Mat2<T>& by, const Mat2<T>& m) {
  return by * m * by.inverse();
}

inline CMat to_complex(const QMat& m) {
  return CMat(m.a.to_complex(), m.b.to_complex(), m.c.to_complex(), m.d.to_complex());
}

// max absolute entry deviation
inline double max_abs_diff(const CMat& x, const CMat& y) {
  return std::max({std::abs(x.a - y.a), std::abs(x.b - y.b), std::abs(x.c - y.c), std::abs(x.d - y.d)});
}

inline double max_abs(const CMat& x) {
  return std::max({std::abs(x.a), std::abs(x.b), std::abs(x.c), std::abs(x.d)});
}

inline bool approx_equal(const CMat& x, const CMat& y, double tol) { return max_abs_diff(x, y) < tol; }

inline bool approx_equal(Complex x, Complex y, double tol) { return std::abs(x - y) < tol; }

// tr(X Y X^-1 Y^-1)
template <class T>
T trace_commutator(const Mat2<T>& x, const Mat2<T>& y) {
  return (x * y * x.inverse() * y.inverse()).trace();
}

// Rescale a nearly unimodular matrix to determinant one.
inline CMat normalize_det(const CMat& m) {
  Complex s = std::sqrt(m.det());
  return CMat(m.a / s, m.b / s, m.c / s, m.d / s);
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Mat2<T>& m) {
  return os << "[[" << m.a << ", " << m.b << "], [" << m.c << ", " << m.d << "]]";
}

inline std::ostream& operator<<(std::ostream& os, const GaussRational& g) { return os << g.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

}  // namespace xlk
