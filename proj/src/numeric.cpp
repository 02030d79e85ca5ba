#include "xlk/numeric.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "xlk/errors.hpp"

namespace xlk {

CompiledPoly::CompiledPoly(const LaurentPoly& p, const std::vector<std::string>& order) {
  std::vector<int> slot(p.vars().size(), -1);
  for (std::size_t k = 0; k < p.vars().size(); ++k) {
    auto it = std::find(order.begin(), order.end(), p.vars()[k]);
    if (it != order.end()) slot[k] = static_cast<int>(it - order.begin());
  }
  for (const auto& [e, c] : p.terms()) {
    Term t{c.to_complex(), {}};
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (slot[k] < 0) throw Error(ErrorKind::UnboundGenerator, "variable " + p.vars()[k] + " not in evaluation order");
      t.powers.emplace_back(slot[k], e[k]);
    }
    terms_.push_back(std::move(t));
  }
}

Complex CompiledPoly::operator()(const std::vector<Complex>& point) const {
  Complex sum = 0;
  for (const auto& t : terms_) {
    Complex v = t.coeff;
    for (const auto& [s, e] : t.powers) {
      Complex base = point[s];
      if (e < 0) base = 1.0 / base;
      int k = std::abs(e);
      Complex r = 1;
      while (k) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
      }
      v *= r;
    }
    sum += v;
  }
  return sum;
}

PolySystem::PolySystem(const std::vector<LaurentPoly>& equations, const std::vector<std::string>& unknowns,
                       const std::vector<std::string>& parameters)
    : n_(unknowns.size()) {
  std::vector<std::string> order = unknowns;
  order.insert(order.end(), parameters.begin(), parameters.end());
  for (const auto& eq : equations) {
    f_.emplace_back(eq, order);
    std::vector<CompiledPoly> row;
    for (const auto& u : unknowns) row.emplace_back(eq.derivative(u), order);
    df_.push_back(std::move(row));
  }
}

void PolySystem::evaluate(const VecC& x, const std::vector<Complex>& params, VecC& f, MatC& jac) const {
  std::vector<Complex> pt(x.data(), x.data() + x.size());
  pt.insert(pt.end(), params.begin(), params.end());
  f.resize(f_.size());
  jac.resize(f_.size(), n_);
  for (std::size_t i = 0; i < f_.size(); ++i) {
    f(i) = f_[i](pt);
    for (std::size_t j = 0; j < n_; ++j) jac(i, j) = df_[i][j](pt);
  }
}

VecC PolySystem::values(const VecC& x, const std::vector<Complex>& params) const {
  std::vector<Complex> pt(x.data(), x.data() + x.size());
  pt.insert(pt.end(), params.begin(), params.end());
  VecC f(f_.size());
  for (std::size_t i = 0; i < f_.size(); ++i) f(i) = f_[i](pt);
  return f;
}

SolveResult levenberg_marquardt(const ResidualFn& fn, VecC x, double tol, int max_iter) {
  VecC f;
  MatC jac;
  fn(x, f, jac);
  double lambda = 1e-3;
  SolveResult res;
  int it = 0;
  for (; it < max_iter; ++it) {
    if (!std::isfinite(f.norm())) break;
    if (f.cwiseAbs().maxCoeff() < tol) break;
    MatC jh = jac.adjoint();
    MatC normal = jh * jac;
    VecC g = jh * f;
    bool improved = false;
    while (lambda < 1e12) {
      MatC a = normal;
      a.diagonal().array() += lambda;
      VecC step = a.ldlt().solve(-g);
      VecC xn = x + step;
      VecC fn_;
      MatC jn;
      fn(xn, fn_, jn);
      if (std::isfinite(fn_.norm()) && fn_.norm() < f.norm()) {
        x = xn;
        f = fn_;
        jac = jn;
        lambda = std::max(lambda / 5, 1e-15);
        improved = true;
        break;
      }
      lambda *= 4;
    }
    if (!improved) break;
  }
  res.x = x;
  res.iterations = it;
  res.residual = std::isfinite(f.norm()) ? f.cwiseAbs().maxCoeff() : INFINITY;
  res.converged = res.residual < tol * 100;
  return res;
}

std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs) {
  std::vector<Complex> c = coeffs;
  while (!c.empty() && c.back() == Complex(0)) c.pop_back();
  if (c.size() < 2) return {};
  int deg = static_cast<int>(c.size()) - 1;
  MatC comp = MatC::Zero(deg, deg);
  for (int k = 0; k < deg; ++k) comp(0, k) = -c[deg - 1 - k] / c[deg];
  for (int k = 1; k < deg; ++k) comp(k, k - 1) = 1;
  Eigen::ComplexEigenSolver<MatC> es(comp, false);
  std::vector<Complex> roots;
  for (int k = 0; k < deg; ++k) {
    Complex z = es.eigenvalues()(k);
    for (int it = 0; it < 5; ++it) {
      Complex p = 0, dp = 0;
      for (int j = deg; j >= 0; --j) {
        dp = dp * z + p;
        p = p * z + c[j];
      }
      if (dp == Complex(0)) break;
      Complex step = p / dp;
      z -= step;
      if (std::abs(step) < 1e-16 * (1 + std::abs(z))) break;
    }
    roots.push_back(z);
  }
  std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return roots;
}

}  // namespace xlk
