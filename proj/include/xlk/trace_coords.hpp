#pragma once

#include <array>
#include <type_traits>
#include <optional>
#include <string>
#include <vector>

#include "xlk/braid.hpp"
#include "xlk/laurent.hpp"
#include "xlk/mat2.hpp"

namespace xlk {

template <class S>
struct TraceCoord {
  S x, y, z, b, c;
  std::optional<S> a;  // common meridian trace, when known

  bool same_xyzbc(const TraceCoord& o) const { return x == o.x && y == o.y && z == o.z && b == o.b && c == o.c; }
};

using SymCoord = TraceCoord<LaurentPoly>;
using NumCoord = TraceCoord<Complex>;

inline const std::vector<std::string>& coord_vars() {
  static const std::vector<std::string> v{"x", "y", "z", "b", "c"};
  return v;
}

// x, y, z, b, c as free polynomial variables
SymCoord symbolic_coords();

template <class S>
S fricke_P(const TraceCoord<S>& k) {
  return k.x * k.y * k.z + k.x * k.x + k.y * k.y + k.z * k.z - k.b * (k.x + k.y + k.z) - k.c;
}

namespace detail {
template <class S>
bool scalar_close(const S& u, const S& v, double tol) {
  if constexpr (std::is_same_v<S, Complex>) return std::abs(u - v) < tol;
  else return u == v;
}
}  // namespace detail

template <class T>
TraceCoord<T> coords_from_triple(const Mat2<T>& g1, const Mat2<T>& g2, const Mat2<T>& g3, double tol = 1e-10) {
  T a = g1.trace();
  if (!detail::scalar_close(a, g2.trace(), tol) || !detail::scalar_close(a, g3.trace(), tol))
    throw Error(ErrorKind::UnequalTraces, "triple does not have equal traces");
  T tt = (g1 * g2 * g3).trace();
  TraceCoord<T> k{(g1 * g2).trace(), (g1 * g3).trace(), (g2 * g3).trace(), a * (a + tt),
                  T(4) - T(3) * a * a - tt * tt - a * a * a * tt, a};
  return k;
}

// One letter of the B_3 action on (x, y, z, b, c).
template <class S>
TraceCoord<S> act(const BraidLetter& g, const TraceCoord<S>& k) {
  TraceCoord<S> o = k;
  if (g.i == 1 && g.exp == 1) {
    o.y = k.z;
    o.z = k.b - k.y - k.x * k.z;
  } else if (g.i == 1 && g.exp == -1) {
    o.y = k.b - k.z - k.x * k.y;
    o.z = k.y;
  } else if (g.i == 2 && g.exp == 1) {
    o.x = k.y;
    o.y = k.b - k.x - k.y * k.z;
  } else if (g.i == 2 && g.exp == -1) {
    o.x = k.b - k.y - k.x * k.z;
    o.y = k.x;
  } else {
    throw Error(ErrorKind::Domain, "letter outside sigma_1^+-1, sigma_2^+-1");
  }
  return o;
}

template <class S>
TraceCoord<S> act_word(const BraidWord& b, TraceCoord<S> k) {
  if (b.strands() != 3) throw Error(ErrorKind::StrandMismatch, "trace action needs a 3-strand braid");
  for (const auto& l : b.letters()) k = act(l, k);
  return k;
}

struct QuotientReport {
  bool holds = false;
  bool decided = false;
  std::string method;  // "membership-certificate" or "numeric-witness"
  // classes in Q[x,y,z,c]/(b, x^2, y^2, z^2) with c = xyz
  LaurentPoly P_bar, X_bar, Y_bar, Z_bar, branch_bar, Y_minus_y_bar;
  // branch = alpha (X - z) + beta (Z - x), when found
  LaurentPoly alpha, beta;
  // point of V_0 where the branch factor is far from zero
  std::array<Complex, 4> witness{};  // x, y, z, b
  double witness_residual = 0;
  double witness_branch = 0;
};

// Decides whether Y - b + y + xz lies outside the ideal (X - z, Z - x).
QuotientReport quotient_claim_check(const BraidWord& b, int multiplier_degree = 1, unsigned seed = 7);

struct UPoint {
  NumCoord coords;            // a is filled in
  std::array<double, 4> residual{};  // |P|, |X - z|, |Z - x|, |Y - y|
  Complex T;                  // tr G1 G2 G3
  double branch = 0;          // |Y - b + y + xz|
};

struct UOptions {
  double residual_tol = 1e-10;
  double trace_margin = 1e-3;
  double branch_margin = 1e-3;
  double distinct = 1e-4;
  int max_starts = 400;
};

// Holds the symbolic system {P, X - z, Z - x, Y - y} for one braid.
class USolver {
 public:
  explicit USolver(const BraidWord& b, UOptions opt = {});
  const BraidWord& braid() const { return b_; }

  std::vector<UPoint> find(int count, unsigned seed) const;
  // Re-solve (x, y, z) at fixed meridian trace a and triple trace T.
  UPoint refine(Complex a, Complex T, const NumCoord& guess) const;
  // X, Y, Z and the residual data at a numeric point
  UPoint evaluate(const NumCoord& k) const;

 private:
  BraidWord b_;
  UOptions opt_;
  LaurentPoly X_, Y_, Z_;
  std::vector<LaurentPoly> eqs_;
};

std::vector<UPoint> find_U_points(const BraidWord& b, int count, unsigned seed, const UOptions& opt = {});

// Meridian traces a compatible with given (b, c): roots of
// s^3 - (b+4) s^2 + (2b + 4 - c) s - b^2 = 0 with s = a^2.
std::vector<Complex> meridian_traces(Complex b, Complex c);

Complex b_from(Complex a, Complex T);
Complex c_from(Complex a, Complex T);

std::array<CMat, 3> lift_triple(const NumCoord& coords, Complex a, double tol = 1e-9);

}  // namespace xlk
