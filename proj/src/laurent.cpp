#include "xlk/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "xlk/errors.hpp"

namespace xlk {

bool is_unit_variable(const std::string& name) { return name == "m" || name == "t"; }

LaurentPoly::LaurentPoly(const GaussRational& c) {
  if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

LaurentPoly LaurentPoly::variable(const std::string& name, std::vector<std::string> vars) {
  if (std::find(vars.begin(), vars.end(), name) == vars.end()) vars.push_back(name);
  Exponents e(vars.size(), 0);
  e[std::find(vars.begin(), vars.end(), name) - vars.begin()] = 1;
  return monomial(std::move(vars), std::move(e));
}

LaurentPoly LaurentPoly::monomial(std::vector<std::string> vars, Exponents e, GaussRational c) {
  if (e.size() != vars.size()) throw Error(ErrorKind::Domain, "exponent vector length mismatch");
  for (std::size_t k = 0; k < e.size(); ++k)
    if (e[k] < 0 && !is_unit_variable(vars[k]))
      throw Error(ErrorKind::Domain, "negative exponent on polynomial variable " + vars[k]);
  LaurentPoly p(std::move(vars));
  p.add_term(e, c);
  return p;
}

void LaurentPoly::add_term(const Exponents& e, const GaussRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
}

GaussRational LaurentPoly::constant_term() const {
  for (const auto& [e, c] : terms_)
    if (std::all_of(e.begin(), e.end(), [](int v) { return v == 0; })) return c;
  return GaussRational(0);
}

int LaurentPoly::var_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

LaurentPoly LaurentPoly::with_vars(const std::vector<std::string>& vars) const {
  if (vars == vars_) return *this;
  std::vector<int> map(vars_.size(), -1);
  for (std::size_t k = 0; k < vars_.size(); ++k) {
    auto it = std::find(vars.begin(), vars.end(), vars_[k]);
    if (it != vars.end()) map[k] = static_cast<int>(it - vars.begin());
  }
  LaurentPoly out(vars);
  for (const auto& [e, c] : terms_) {
    Exponents ne(vars.size(), 0);
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (map[k] < 0) throw Error(ErrorKind::Domain, "variable " + vars_[k] + " dropped while in use");
      ne[map[k]] = e[k];
    }
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

std::vector<std::string> LaurentPoly::merged_vars(const LaurentPoly& a, const LaurentPoly& b) {
  std::vector<std::string> v = a.vars_;
  for (const auto& s : b.vars_)
    if (std::find(v.begin(), v.end(), s) == v.end()) v.push_back(s);
  return v;
}

int LaurentPoly::degree(const std::string& name) const {
  int k = var_index(name);
  if (terms_.empty()) return 0;
  if (k < 0) return 0;
  int d = terms_.begin()->first[k];
  for (const auto& [e, c] : terms_) d = std::max(d, e[k]);
  return d;
}

int LaurentPoly::min_degree(const std::string& name) const {
  int k = var_index(name);
  if (terms_.empty() || k < 0) return 0;
  int d = terms_.begin()->first[k];
  for (const auto& [e, c] : terms_) d = std::min(d, e[k]);
  return d;
}

LaurentPoly LaurentPoly::coeff(const std::string& name, int deg) const {
  int k = var_index(name);
  if (k < 0) return deg == 0 ? *this : LaurentPoly(vars_);
  LaurentPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[k] != deg) continue;
    Exponents ne = e;
    ne[k] = 0;
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

LaurentPoly LaurentPoly::pow(int k) const {
  if (k < 0) return monomial_inverse().pow(-k);
  LaurentPoly result(GaussRational(1));
  result = result.with_vars(vars_);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly::monomial_inverse() const {
  if (terms_.size() != 1) throw Error(ErrorKind::Domain, "only monomials are invertible");
  const auto& [e, c] = *terms_.begin();
  Exponents ne(e.size());
  for (std::size_t k = 0; k < e.size(); ++k) ne[k] = -e[k];
  return monomial(vars_, ne, c.inverse());
}

LaurentPoly LaurentPoly::subs(const std::string& name, const LaurentPoly& value) const {
  int k = var_index(name);
  if (k < 0) return *this;
  std::vector<std::string> v = merged_vars(*this, value);
  LaurentPoly val = value.with_vars(v);
  std::map<int, LaurentPoly> powers;
  LaurentPoly out(v);
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    int d = rest[k];
    rest[k] = 0;
    rest.resize(v.size(), 0);
    auto it = powers.find(d);
    if (it == powers.end()) it = powers.emplace(d, val.pow(d)).first;
    out += monomial(v, rest, c) * it->second;
  }
  return out;
}

LaurentPoly LaurentPoly::derivative(const std::string& name) const {
  int k = var_index(name);
  LaurentPoly out(vars_);
  if (k < 0) return out;
  for (const auto& [e, c] : terms_) {
    if (e[k] == 0) continue;
    Exponents ne = e;
    ne[k] -= 1;
    out.add_term(ne, c * GaussRational(e[k]));
  }
  return out;
}

Complex LaurentPoly::eval(const std::map<std::string, Complex>& values) const {
  std::vector<Complex> x(vars_.size());
  for (std::size_t k = 0; k < vars_.size(); ++k) {
    auto it = values.find(vars_[k]);
    if (it != values.end()) x[k] = it->second;
  }
  Complex sum = 0;
  for (const auto& [e, c] : terms_) {
    Complex t = c.to_complex();
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (values.find(vars_[k]) == values.end())
        throw Error(ErrorKind::UnboundGenerator, "no value for variable " + vars_[k]);
      t *= std::pow(x[k], e[k]);
    }
    sum += t;
  }
  return sum;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.vars_ != vars_) {
    auto v = merged_vars(*this, o);
    *this = with_vars(v);
    LaurentPoly r = o.with_vars(v);
    for (const auto& [e, c] : r.terms_) add_term(e, c);
    return *this;
  }
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.vars_ != b.vars_) {
    auto v = LaurentPoly::merged_vars(a, b);
    return a.with_vars(v) * b.with_vars(v);
  }
  LaurentPoly out(a.vars_);
  LaurentPoly::Exponents e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  auto v = LaurentPoly::merged_vars(a, b);
  return a.with_vars(v).terms_ == b.with_vars(v).terms_;
}

namespace {

bool negative_leading(const GaussRational& c) {
  if (c.is_real()) return sgn(c.re()) < 0;
  return sgn(c.re()) == 0 && sgn(c.im()) < 0;
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[k];
      if (e[k] != 1) mono += "^" + std::to_string(e[k]);
    }
    bool neg = negative_leading(c);
    GaussRational mag = neg ? -c : c;
    if (first) os << (neg ? "-" : "");
    else os << (neg ? " - " : " + ");
    first = false;
    if (mono.empty()) os << mag.to_string();
    else if (mag.is_one()) os << mono;
    else os << mag.to_string() << "*" << mono;
  }
  return os.str();
}

namespace {

// Recursive-descent parser: sums of products of numbers, variables,
// the imaginary unit i, parentheses and integer powers.
class Parser {
 public:
  Parser(const std::string& s, std::vector<std::string> vars) : s_(s), vars_(std::move(vars)) {}

  LaurentPoly run() {
    LaurentPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p.with_vars(vars_);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw Error(ErrorKind::Parse, msg + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char ch) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(s_.substr(start, pos_ - start));
  }

  LaurentPoly expr() {
    LaurentPoly p;
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    LaurentPoly t = term();
    p = neg ? -t : t;
    while (true) {
      if (accept('+')) p += term();
      else if (accept('-')) p -= term();
      else break;
    }
    return p;
  }

  LaurentPoly term() {
    LaurentPoly p = factor();
    while (true) {
      if (accept('*')) {
        p *= factor();
      } else if (accept('/')) {
        LaurentPoly d = factor();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant");
        p *= LaurentPoly(d.constant_term().inverse());
      } else {
        break;
      }
    }
    return p;
  }

  LaurentPoly factor() {
    LaurentPoly b = base();
    if (accept('^')) {
      bool neg = accept('-');
      long k = integer();
      b = b.pow(neg ? -static_cast<int>(k) : static_cast<int>(k));
    }
    return b;
  }

  LaurentPoly base() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      LaurentPoly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return LaurentPoly(GaussRational(mpq_class(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      if (name == "i") return LaurentPoly(GaussRational::i());
      if (std::find(vars_.begin(), vars_.end(), name) == vars_.end()) vars_.push_back(name);
      return LaurentPoly::variable(name, vars_);
    }
    fail("unexpected character");
  }

  const std::string& s_;
  std::vector<std::string> vars_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text, std::vector<std::string> vars) {
  return Parser(text, std::move(vars)).run();
}

LaurentPoly truncated_reduce(const LaurentPoly& p) {
  const auto& v = p.vars();
  auto idx = [&](const char* n) { return p.var_index(n); };
  int ix = idx("x"), iy = idx("y"), iz = idx("z"), ib = idx("b");
  LaurentPoly out(v);
  for (const auto& [e, c] : p.terms()) {
    bool drop = false;
    for (int k : {ix, iy, iz, ib}) {
      if (k < 0) continue;
      if (e[k] < 0) throw Error(ErrorKind::Domain, "negative exponent in " + v[k]);
    }
    if (ib >= 0 && e[ib] >= 1) drop = true;
    for (int k : {ix, iy, iz})
      if (k >= 0 && e[k] >= 2) drop = true;
    if (!drop) out += LaurentPoly::monomial(v, e, c);
  }
  return out;
}

LaurentPoly reduce_modulo(const LaurentPoly& p, const LaurentPoly& f, const std::string& var) {
  int df = f.degree(var);
  if (f.min_degree(var) < 0) throw Error(ErrorKind::Domain, "modulus has negative degree in " + var);
  LaurentPoly lead = f.coeff(var, df);
  if (!lead.is_monomial()) throw Error(ErrorKind::Domain, "leading coefficient is not a unit monomial");
  for (const auto& [e, c] : lead.terms())
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k] != 0 && !is_unit_variable(lead.vars()[k]))
        throw Error(ErrorKind::Domain, "leading coefficient is not a unit monomial");
  LaurentPoly inv = lead.monomial_inverse();
  LaurentPoly x = LaurentPoly::variable(var, f.vars());
  LaurentPoly r = p;
  while (!r.is_zero() && r.degree(var) >= df) {
    int d = r.degree(var);
    LaurentPoly q = r.coeff(var, d) * inv * x.pow(d - df);
    r -= q * f;
  }
  return r;
}

}  // namespace xlk
