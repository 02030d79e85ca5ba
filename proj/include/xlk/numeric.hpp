#pragma once

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "xlk/gaussian.hpp"
#include "xlk/laurent.hpp"

namespace xlk {

using VecC = Eigen::VectorXcd;
using MatC = Eigen::MatrixXcd;

// A polynomial flattened for fast complex evaluation at a point given in a
// fixed variable order.
class CompiledPoly {
 public:
  CompiledPoly() = default;
  CompiledPoly(const LaurentPoly& p, const std::vector<std::string>& order);
  Complex operator()(const std::vector<Complex>& point) const;

 private:
  struct Term {
    Complex coeff;
    std::vector<std::pair<int, int>> powers;  // (variable slot, exponent)
  };
  std::vector<Term> terms_;
};

// Square or overdetermined polynomial system with symbolic Jacobian.
class PolySystem {
 public:
  PolySystem(const std::vector<LaurentPoly>& equations, const std::vector<std::string>& unknowns,
             const std::vector<std::string>& parameters = {});
  std::size_t equations() const { return f_.size(); }
  std::size_t unknowns() const { return n_; }
  void evaluate(const VecC& x, const std::vector<Complex>& params, VecC& f, MatC& jac) const;
  VecC values(const VecC& x, const std::vector<Complex>& params) const;

 private:
  std::size_t n_;
  std::vector<CompiledPoly> f_;
  std::vector<std::vector<CompiledPoly>> df_;
};

struct SolveResult {
  VecC x;
  double residual = 0;  // max-abs residual
  int iterations = 0;
  bool converged = false;
};

using ResidualFn = std::function<void(const VecC& x, VecC& f, MatC& jac)>;

// Levenberg-Marquardt on complex unknowns; works for rank-deficient Jacobians.
SolveResult levenberg_marquardt(const ResidualFn& fn, VecC x0, double tol = 1e-13, int max_iter = 200);

// Roots of sum_k c[k] z^k via companion eigenvalues, polished by Newton.
std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs);

}  // namespace xlk
