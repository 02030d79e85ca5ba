#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "xlk/gaussian.hpp"

namespace xlk {

// Only these variables may carry negative exponents.
bool is_unit_variable(const std::string& name);

// Sparse multivariate Laurent polynomial over Q(i).
// Terms are kept in descending lexicographic order of exponent vectors.
class LaurentPoly {
 public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, GaussRational, std::greater<Exponents>>;

  LaurentPoly() = default;
  LaurentPoly(long c) : LaurentPoly(GaussRational(c)) {}
  LaurentPoly(const GaussRational& c);
  explicit LaurentPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static LaurentPoly variable(const std::string& name, std::vector<std::string> vars = {});
  static LaurentPoly monomial(std::vector<std::string> vars, Exponents e, GaussRational c = 1);
  static LaurentPoly parse(const std::string& text, std::vector<std::string> vars = {});

  const std::vector<std::string>& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  GaussRational constant_term() const;

  int var_index(const std::string& name) const;
  // Re-embed into a variable list that contains every variable in use.
  LaurentPoly with_vars(const std::vector<std::string>& vars) const;

  int degree(const std::string& name) const;
  int min_degree(const std::string& name) const;
  // Coefficient of name^k, as a polynomial with that exponent zeroed.
  LaurentPoly coeff(const std::string& name, int k) const;

  LaurentPoly subs(const std::string& name, const LaurentPoly& value) const;
  LaurentPoly derivative(const std::string& name) const;
  Complex eval(const std::map<std::string, Complex>& values) const;

  LaurentPoly pow(int k) const;
  // Inverse of a unit monomial.
  LaurentPoly monomial_inverse() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const GaussRational& c);
  static std::vector<std::string> merged_vars(const LaurentPoly& a, const LaurentPoly& b);

  std::vector<std::string> vars_;
  Terms terms_;
};

// Normal form in Q[x,y,z,b,c]/(b, x^2, y^2, z^2).
LaurentPoly truncated_reduce(const LaurentPoly& p);

// Remainder of p modulo f, viewed as polynomials in var. The leading
// coefficient of f in var must be a unit monomial.
LaurentPoly reduce_modulo(const LaurentPoly& p, const LaurentPoly& f, const std::string& var);

}  // namespace xlk
