#include "xlk/trace_coords.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include <Eigen/Dense>

#include "xlk/numeric.hpp"

namespace xlk {

SymCoord symbolic_coords() {
  const auto& v = coord_vars();
  SymCoord k{LaurentPoly::variable("x", v), LaurentPoly::variable("y", v), LaurentPoly::variable("z", v),
             LaurentPoly::variable("b", v), LaurentPoly::variable("c", v), std::nullopt};
  return k;
}

namespace {

// Monomials in x, y, z, b of total degree <= d.
std::vector<LaurentPoly> monomials_up_to(int d) {
  std::vector<LaurentPoly> out;
  const auto& v = coord_vars();
  for (int e0 = 0; e0 <= d; ++e0)
    for (int e1 = 0; e0 + e1 <= d; ++e1)
      for (int e2 = 0; e0 + e1 + e2 <= d; ++e2)
        for (int e3 = 0; e0 + e1 + e2 + e3 <= d; ++e3)
          out.push_back(LaurentPoly::monomial(v, {e0, e1, e2, e3, 0}));
  return out;
}

// Solve sum_j u_j cols[j] = rhs exactly; empty optional when inconsistent.
std::optional<std::vector<GaussRational>> solve_exact(const std::vector<LaurentPoly>& cols, const LaurentPoly& rhs) {
  std::map<LaurentPoly::Exponents, int> row_of;
  auto index = [&](const LaurentPoly& p) {
    for (const auto& [e, c] : p.terms()) row_of.emplace(e, 0);
  };
  for (const auto& c : cols) index(c);
  index(rhs);
  int r = 0;
  for (auto& [e, k] : row_of) k = r++;
  int n = static_cast<int>(cols.size());
  std::vector<std::vector<GaussRational>> m(r, std::vector<GaussRational>(n + 1, GaussRational(0)));
  for (int j = 0; j < n; ++j)
    for (const auto& [e, c] : cols[j].terms()) m[row_of[e]][j] = c;
  for (const auto& [e, c] : rhs.terms()) m[row_of[e]][n] = c;

  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < n && row < r; ++col) {
    int p = -1;
    for (int i = row; i < r; ++i)
      if (!m[i][col].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[p], m[row]);
    GaussRational inv = m[row][col].inverse();
    for (int j = col; j <= n; ++j) m[row][j] *= inv;
    for (int i = 0; i < r; ++i) {
      if (i == row || m[i][col].is_zero()) continue;
      GaussRational f = m[i][col];
      for (int j = col; j <= n; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (int i = row; i < r; ++i)
    if (!m[i][n].is_zero()) return std::nullopt;
  std::vector<GaussRational> u(n, GaussRational(0));
  for (int i = 0; i < row; ++i) u[pivot_col[i]] = m[i][n];
  return u;
}

Complex random_complex(std::mt19937_64& rng, double scale = 1.0) {
  // small-denominator rationals, so starts are exactly representable
  std::uniform_int_distribution<int> d(-16, 16);
  return {scale * d(rng) / 8.0, scale * d(rng) / 8.0};
}

}  // namespace

QuotientReport quotient_claim_check(const BraidWord& b, int multiplier_degree, unsigned seed) {
  SymCoord k = symbolic_coords();
  SymCoord h = act_word(b, k);
  QuotientReport rep;
  LaurentPoly branch = h.y - k.b + k.y + k.x * k.z;
  rep.P_bar = truncated_reduce(fricke_P(k));
  rep.X_bar = truncated_reduce(h.x);
  rep.Y_bar = truncated_reduce(h.y);
  rep.Z_bar = truncated_reduce(h.z);
  rep.branch_bar = truncated_reduce(branch);
  rep.Y_minus_y_bar = truncated_reduce(h.y - k.y);

  LaurentPoly f1 = h.x - k.z, f2 = h.z - k.x;
  auto mons = monomials_up_to(multiplier_degree);
  std::vector<LaurentPoly> cols;
  for (const auto& m : mons) cols.push_back(m * f1);
  for (const auto& m : mons) cols.push_back(m * f2);
  if (auto u = solve_exact(cols, branch)) {
    LaurentPoly alpha(coord_vars()), beta(coord_vars());
    for (std::size_t j = 0; j < mons.size(); ++j) {
      alpha += mons[j] * LaurentPoly((*u)[j]);
      beta += mons[j] * LaurentPoly((*u)[j + mons.size()]);
    }
    rep.alpha = alpha;
    rep.beta = beta;
    rep.holds = false;
    rep.decided = true;
    rep.method = "membership-certificate";
    return rep;
  }

  // Look for a point of V_0 where the branch factor does not vanish.
  PolySystem sys({f1, f2}, {"x", "z"}, {"y", "b"});
  CompiledPoly br(branch, {"x", "z", "y", "b"});
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<Complex> params{random_complex(rng), random_complex(rng)};
    VecC x0(2);
    x0 << random_complex(rng), random_complex(rng);
    auto fn = [&](const VecC& v, VecC& f, MatC& j) { sys.evaluate(v, params, f, j); };
    SolveResult s = levenberg_marquardt(fn, x0, 1e-13, 100);
    if (!s.converged) continue;
    double bv = std::abs(br({s.x(0), s.x(1), params[0], params[1]}));
    if (bv < 1e-3 || bv > 1e6) continue;
    rep.witness = {s.x(0), params[0], s.x(1), params[1]};
    rep.witness_residual = s.residual;
    rep.witness_branch = bv;
    rep.holds = true;
    rep.decided = true;
    rep.method = "numeric-witness";
    return rep;
  }
  rep.method = "undecided";
  return rep;
}

Complex b_from(Complex a, Complex T) { return a * (a + T); }
Complex c_from(Complex a, Complex T) { return 4.0 - 3.0 * a * a - T * T - a * a * a * T; }

std::vector<Complex> meridian_traces(Complex b, Complex c) {
  auto s = polynomial_roots({-b * b, 2.0 * b + 4.0 - c, -(b + 4.0), 1.0});
  std::vector<Complex> out;
  for (Complex r : s) {
    Complex a = std::sqrt(r);
    out.push_back(a);
    out.push_back(-a);
  }
  return out;
}

USolver::USolver(const BraidWord& b, UOptions opt) : b_(b), opt_(opt) {
  SymCoord k = symbolic_coords();
  SymCoord h = act_word(b, k);
  X_ = h.x;
  Y_ = h.y;
  Z_ = h.z;
  eqs_ = {fricke_P(k), h.x - k.z, h.z - k.x, h.y - k.y};
}

UPoint USolver::evaluate(const NumCoord& k) const {
  std::vector<Complex> pt{k.x, k.y, k.z, k.b, k.c};
  const auto& v = coord_vars();
  Complex X = CompiledPoly(X_, v)(pt), Y = CompiledPoly(Y_, v)(pt), Z = CompiledPoly(Z_, v)(pt);
  UPoint u;
  u.coords = k;
  u.residual = {std::abs(fricke_P(k)), std::abs(X - k.z), std::abs(Z - k.x), std::abs(Y - k.y)};
  u.branch = std::abs(Y - k.b + k.y + k.x * k.z);
  if (k.a) u.T = k.b / *k.a - *k.a;
  return u;
}

std::vector<UPoint> USolver::find(int count, unsigned seed) const {
  PolySystem sys(eqs_, {"x", "y", "z", "b"}, {"c"});
  std::mt19937_64 rng(seed);
  std::vector<UPoint> found;
  int converged = 0;
  double best = INFINITY;
  for (int start = 0; start < opt_.max_starts && static_cast<int>(found.size()) < count; ++start) {
    std::vector<Complex> params{random_complex(rng)};
    VecC x0(4);
    for (int j = 0; j < 4; ++j) x0(j) = random_complex(rng);
    auto fn = [&](const VecC& v, VecC& f, MatC& jac) { sys.evaluate(v, params, f, jac); };
    SolveResult s = levenberg_marquardt(fn, x0, 1e-14, 300);
    best = std::min(best, s.residual);
    if (s.residual >= opt_.residual_tol) continue;
    ++converged;
    NumCoord k{s.x(0), s.x(1), s.x(2), s.x(3), params[0], std::nullopt};
    UPoint u = evaluate(k);
    if (u.branch < opt_.branch_margin) continue;
    // choose a meridian trace: a != 0, T away from +-2, and liftable
    bool ok = false;
    for (Complex a : meridian_traces(k.b, k.c)) {
      if (std::abs(a) < 1e-3) continue;
      Complex T = k.b / a - a;
      if (std::abs(T - 2.0) <= opt_.trace_margin || std::abs(T + 2.0) <= opt_.trace_margin) continue;
      if (std::abs(c_from(a, T) - k.c) > 1e-8 * (1 + std::abs(k.c))) continue;
      k.a = a;
      try {
        lift_triple(k, a);
      } catch (const Error&) {
        continue;
      }
      u.coords = k;
      u.T = T;
      ok = true;
      break;
    }
    if (!ok) continue;
    bool distinct = true;
    for (const auto& f : found) {
      double d = std::sqrt(std::norm(f.coords.x - k.x) + std::norm(f.coords.y - k.y) + std::norm(f.coords.z - k.z) +
                           std::norm(f.coords.b - k.b) + std::norm(f.coords.c - k.c));
      if (d <= opt_.distinct) distinct = false;
    }
    if (distinct) found.push_back(u);
  }
  if (found.empty())
    throw Error(ErrorKind::NoPoints, "no point of U found for braid '" + b_.to_string() + "' (" +
                                         std::to_string(converged) + " converged starts, best residual " +
                                         std::to_string(best) + ")");
  auto key = [](const UPoint& u) {
    auto r = [](double v) { return std::round(v * 1e6) / 1e6; };
    const auto& k = u.coords;
    return std::vector<double>{r(k.x.real()), r(k.x.imag()), r(k.y.real()), r(k.y.imag()), r(k.z.real()),
                               r(k.z.imag()), r(k.b.real()), r(k.b.imag()), r(k.c.real()), r(k.c.imag())};
  };
  std::sort(found.begin(), found.end(), [&](const UPoint& p, const UPoint& q) { return key(p) < key(q); });
  return found;
}

UPoint USolver::refine(Complex a, Complex T, const NumCoord& guess) const {
  Complex b = b_from(a, T), c = c_from(a, T);
  PolySystem sys(eqs_, {"x", "y", "z"}, {"b", "c"});
  std::vector<Complex> params{b, c};
  VecC x0(3);
  x0 << guess.x, guess.y, guess.z;
  auto fn = [&](const VecC& v, VecC& f, MatC& jac) { sys.evaluate(v, params, f, jac); };
  SolveResult s = levenberg_marquardt(fn, x0, 1e-14, 200);
  NumCoord k{s.x(0), s.x(1), s.x(2), b, c, a};
  UPoint u = evaluate(k);
  u.T = T;
  return u;
}

std::vector<UPoint> find_U_points(const BraidWord& b, int count, unsigned seed, const UOptions& opt) {
  return USolver(b, opt).find(count, seed);
}

namespace {

// Solve for M with tr M = a, tr PM = t1, tr QM = t2, det M = 1.
std::vector<CMat> third_matrix(const CMat& P, const CMat& Q, Complex a, Complex t1, Complex t2) {
  // unknowns (m00, m01, m10, m11)
  Eigen::Matrix<Complex, 3, 4> A;
  A << 1, 0, 0, 1, P.a, P.c, P.b, P.d, Q.a, Q.c, Q.b, Q.d;
  Eigen::Matrix<Complex, 3, 1> rhs(a, t1, t2);
  Eigen::JacobiSVD<Eigen::Matrix<Complex, 3, 4>> svd(A, Eigen::ComputeFullU | Eigen::ComputeFullV);
  auto sv = svd.singularValues();
  if (sv(2) < 1e-10 * std::max(1.0, sv(0))) return {};
  Eigen::Matrix<Complex, 4, 1> m0 = svd.solve(rhs);
  Eigen::Matrix<Complex, 4, 1> n = svd.matrixV().col(3);
  // det(m0 + l n) = 1
  auto det = [](const Eigen::Matrix<Complex, 4, 1>& v) { return v(0) * v(3) - v(1) * v(2); };
  Complex qa = n(0) * n(3) - n(1) * n(2);
  Complex qb = m0(0) * n(3) + n(0) * m0(3) - m0(1) * n(2) - n(1) * m0(2);
  Complex qc = det(m0) - 1.0;
  std::vector<Complex> ls;
  if (std::abs(qa) < 1e-14) {
    if (std::abs(qb) < 1e-14) return {};
    ls.push_back(-qc / qb);
  } else {
    Complex disc = std::sqrt(qb * qb - 4.0 * qa * qc);
    if (std::abs(disc) < 1e-9 * (std::abs(qb) + 1)) throw Error(ErrorKind::DegenerateLift, "lift quadratic has a double root");
    ls.push_back((-qb + disc) / (2.0 * qa));
    ls.push_back((-qb - disc) / (2.0 * qa));
  }
  std::vector<CMat> out;
  for (Complex l : ls) {
    Eigen::Matrix<Complex, 4, 1> v = m0 + l * n;
    out.emplace_back(v(0), v(1), v(2), v(3));
  }
  return out;
}

}  // namespace

std::array<CMat, 3> lift_triple(const NumCoord& k, Complex a, double tol) {
  if (std::abs(a) < 1e-8) throw Error(ErrorKind::Domain, "meridian trace a = 0 is not supported");
  Complex T = k.b / a - a;
  Complex alpha = (a + std::sqrt(a * a - 4.0)) / 2.0;
  Complex ia = 1.0 / alpha;
  CMat n1(alpha, 1, 0, ia);
  // pair traces: (1,2) -> x, (1,3) -> y, (2,3) -> z
  const Complex t12 = k.x, t13 = k.y, t23 = k.z;
  struct Choice {
    int i, j, other;
    Complex tij, ti_other, tj_other;
  };
  const Choice choices[] = {{0, 1, 2, t12, t13, t23}, {0, 2, 1, t13, t12, t23}, {1, 2, 0, t23, t12, t13}};
  double scale = 1 + std::abs(k.x) + std::abs(k.y) + std::abs(k.z);
  for (const auto& ch : choices) {
    Complex r = ch.tij - alpha * alpha - ia * ia;
    if (std::abs(r) < 1e-9 * scale) continue;
    CMat n2(alpha, 0, r, ia);
    std::array<CMat, 3> g;
    g[ch.i] = n1;
    g[ch.j] = n2;
    auto cands = third_matrix(n1, n2, a, ch.ti_other, ch.tj_other);
    double best = INFINITY;
    std::array<CMat, 3> pick{};
    for (const auto& m : cands) {
      g[ch.other] = m;
      double d = std::abs((g[0] * g[1] * g[2]).trace() - T);
      if (d < best) {
        best = d;
        pick = g;
      }
    }
    if (cands.empty()) continue;
    NumCoord back = coords_from_triple(pick[0], pick[1], pick[2], 1e-6);
    double err = std::max({std::abs(back.x - k.x), std::abs(back.y - k.y), std::abs(back.z - k.z),
                           std::abs(back.b - k.b), std::abs(back.c - k.c)});
    if (err > tol * std::max(1.0, scale)) throw Error(ErrorKind::DegenerateLift, "lift does not reproduce the coordinates");
    return pick;
  }
  throw Error(ErrorKind::Reducible, "coordinates lie on the reducible locus");
}

}  // namespace xlk
