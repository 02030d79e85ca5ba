#include "xlk/riley.hpp"

#include "xlk/errors.hpp"
#include "xlk/numeric.hpp"

namespace xlk {

namespace {

const std::vector<std::string> kVars = {"u", "m"};

LaurentPoly lp(int ue, int me, GaussRational c = 1) { return LaurentPoly::monomial(kVars, {ue, me}, c); }

}  // namespace

std::vector<int> two_bridge_signs(const TwoBridge& tb) {
  // the sign rule needs an odd representative of q mod p
  long q = tb.q % 2 == 1 ? tb.q : tb.q - tb.p;
  std::vector<int> eps;
  for (long i = 1; i < tb.p; ++i) {
    long f = i * q >= 0 ? (i * q) / tb.p : -((-i * q + tb.p - 1) / tb.p);
    eps.push_back(f % 2 == 0 ? 1 : -1);
  }
  return eps;
}

FreeWord two_bridge_word(const TwoBridge& tb) {
  std::vector<Letter> ls;
  auto eps = two_bridge_signs(tb);
  for (std::size_t i = 0; i < eps.size(); ++i) ls.push_back({i % 2 == 0 ? kRileyX : kRileyY, eps[i]});
  return FreeWord(ls);
}

RileyExpansion riley_expansion(const TwoBridge& tb) {
  PMat G(lp(0, 1), lp(0, 0), lp(0, 0, 0), lp(0, -1));
  PMat H(lp(0, 1), lp(0, 0, 0), lp(1, 0), lp(0, -1));
  PMat W = eval_word<LaurentPoly>(two_bridge_word(tb), {{kRileyX, G}, {kRileyY, H}});
  PMat E = W * G - H * W;
  return {E.a, E.b, E.c, E.d};
}

LaurentPoly riley_polynomial(const TwoBridge& tb) {
  auto E = riley_expansion(tb);
  if (!E.e11.is_zero() || !E.e22.is_zero())
    throw Error(ErrorKind::Convention, "Riley diagonal entries do not vanish for " + tb.to_string());
  LaurentPoly r = E.e12.with_vars(kVars);
  int deg = r.degree("u");
  if (deg != (tb.p - 1) / 2)
    throw Error(ErrorKind::Convention, "Riley polynomial has unexpected u-degree for " + tb.to_string());
  LaurentPoly lc = r.coeff("u", deg);
  if (!lc.is_monomial()) throw Error(ErrorKind::Convention, "Riley leading coefficient is not a unit");
  r = r * lc.with_vars(kVars).monomial_inverse();
  if (!reduce_modulo(E.e21.with_vars(kVars), r, "u").is_zero())
    throw Error(ErrorKind::Convention, "Riley (2,1) entry is not a multiple of the (1,2) entry");
  return r;
}

CMat riley_G(Complex m) { return CMat(m, 1.0, 0.0, 1.0 / m); }
CMat riley_H(Complex m, Complex u) { return CMat(m, 0.0, u, 1.0 / m); }

std::vector<Complex> riley_roots(const TwoBridge& tb, Complex m) {
  if (std::abs(m) < 1e-14) throw Error(ErrorKind::Domain, "m must be nonzero");
  LaurentPoly r = riley_polynomial(tb);
  int deg = r.degree("u");
  std::vector<Complex> c;
  for (int k = 0; k <= deg; ++k) c.push_back(r.coeff("u", k).eval({{"m", m}, {"u", 0.0}}));
  std::vector<Complex> out;
  for (Complex u : polynomial_roots(c))
    if (std::abs(u) > 1e-9) out.push_back(u);
  if (out.empty()) throw Error(ErrorKind::RootFinding, "no nonzero Riley root at this m");
  return out;
}

CMat centralizer_matrix(const CMat& G, Complex t) {
  if (std::abs(t) < 1e-14) throw Error(ErrorKind::Domain, "t must be nonzero");
  if (std::abs(G.c) > 1e-12 || std::abs(G.b - 1.0) > 1e-12 || std::abs(G.a * G.d - 1.0) > 1e-12)
    throw Error(ErrorKind::Domain, "G must have the form [[m,1],[0,1/m]]");
  Complex m = G.a;
  if (std::abs(m * m - 1.0) < 1e-12) return CMat(m, t, 0.0, 1.0 / m);
  return CMat(t, (t - 1.0 / t) / (m - 1.0 / m), 0.0, 1.0 / t);
}

QMat centralizer_matrix(const QMat& G, const GaussRational& t) {
  if (t.is_zero()) throw Error(ErrorKind::Domain, "t must be nonzero");
  if (!G.c.is_zero() || G.b != GaussRational(1) || G.a * G.d != GaussRational(1))
    throw Error(ErrorKind::Domain, "G must have the form [[m,1],[0,1/m]]");
  GaussRational m = G.a;
  if (m * m == GaussRational(1)) return QMat(m, t, 0, m.inverse());
  return QMat(t, (t - t.inverse()) / (m - m.inverse()), 0, t.inverse());
}

}  // namespace xlk
