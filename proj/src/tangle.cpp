#include "xlk/tangle.hpp"

#include <numeric>
#include <sstream>

#include "xlk/errors.hpp"

namespace xlk {

using End = DiagramBuilder::End;

TwoBridge TwoBridge::make(long p, long q) {
  if (p < 0) p = -p;
  if (p < 3) throw Error(ErrorKind::NotAKnot, "two-bridge p must be >= 3, got " + std::to_string(p));
  if (p % 2 == 0) throw Error(ErrorKind::Parity, "two-bridge p must be odd, got " + std::to_string(p));
  q = ((q % p) + p) % p;
  if (std::gcd(p, q) != 1) throw Error(ErrorKind::NotCoprime, "p and q must be coprime");
  return {p, q};
}

TwoBridge TwoBridge::parse(const std::string& text) {
  auto k = text.find('/');
  if (k == std::string::npos) throw Error(ErrorKind::Parse, "expected p/q, got '" + text + "'");
  try {
    return make(std::stol(text.substr(0, k)), std::stol(text.substr(k + 1)));
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::Parse, "expected p/q, got '" + text + "'");
  }
}

RationalTangle RationalTangle::parse(const std::string& text) {
  RationalTangle r;
  auto k = text.find('/');
  if (k != std::string::npos) {
    mpq_class f;
    try {
      f = mpq_class(mpz_class(text.substr(0, k)), mpz_class(text.substr(k + 1)));
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "bad fraction '" + text + "'");
    }
    f.canonicalize();
    // ordinary continued fraction, then reversed to the Conway order
    std::vector<long> cf;
    mpz_class num = f.get_num(), den = f.get_den();
    while (den != 0) {
      mpz_class qt;
      mpz_fdiv_q(qt.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      cf.push_back(qt.get_si());
      mpz_class rem = num - qt * den;
      num = den;
      den = rem;
    }
    r.a.assign(cf.rbegin(), cf.rend());
  } else {
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
      try {
        std::size_t used = 0;
        r.a.push_back(std::stol(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw Error(ErrorKind::Parse, "bad tangle term '" + tok + "'");
      }
    }
  }
  if (r.a.empty()) throw Error(ErrorKind::Parse, "empty tangle");
  if (r.crossings() == 0) throw Error(ErrorKind::Domain, "tangle without crossings");
  return r;
}

mpq_class RationalTangle::fraction() const {
  mpq_class f = a.front();
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (f == 0) throw Error(ErrorKind::Domain, "continued fraction hits infinity");
    f = mpq_class(a[i]) + 1 / f;
  }
  f.canonicalize();
  return f;
}

int RationalTangle::crossings() const {
  long n = 0;
  for (long x : a) n += std::labs(x);
  return static_cast<int>(n);
}

std::string RationalTangle::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? " " : "") + std::to_string(a[i]);
  return s;
}

void tangle_twist(DiagramBuilder& d, char kind, int sign, const std::string& label) {
  // slots ccw: 0 toward NE, 1 toward NW, 2 toward SW, 3 toward SE
  int x = d.add_crossing(label, sign > 0);
  std::vector<std::pair<int, std::string>> olds, news;
  if (kind == 'h') {
    olds = {{1, "NE"}, {2, "SE"}};
    news = {{0, "NE"}, {3, "SE"}};
  } else {
    olds = {{1, "SW"}, {0, "SE"}};
    news = {{2, "SW"}, {3, "SE"}};
  }
  for (auto& [s, pos] : olds) {
    auto [i, side] = d.find_end(d.boundary(pos));
    (side == 0 ? d.edges[i].a : d.edges[i].b) = d.slot(x, s);
  }
  for (auto& [s, pos] : news) d.add_edge(d.slot(x, s), d.boundary(pos));
}

void tangle_join(DiagramBuilder& d, const std::string& p, const std::string& q) {
  auto [i, si] = d.find_end(d.boundary(p));
  auto [j, sj] = d.find_end(d.boundary(q));
  if (i == j) throw Error(ErrorKind::NotAKnot, "closure produces a crossingless loop");
  End a = si == 0 ? d.edges[i].b : d.edges[i].a;
  End b = sj == 0 ? d.edges[j].b : d.edges[j].a;
  int label = std::min(d.edges[i].label, d.edges[j].label);
  d.edges.erase(d.edges.begin() + std::max(i, j));
  d.edges.erase(d.edges.begin() + std::min(i, j));
  d.edges.push_back({label, a, b});
}

void tangle_numerator(DiagramBuilder& d) {
  tangle_join(d, "NW", "NE");
  tangle_join(d, "SW", "SE");
}

DiagramBuilder RationalTangle::build(const std::string& prefix) const {
  DiagramBuilder d;
  bool odd = a.size() % 2 == 1;
  if (odd) {
    d.add_edge(d.boundary("NW"), d.boundary("NE"));
    d.add_edge(d.boundary("SW"), d.boundary("SE"));
  } else {
    d.add_edge(d.boundary("NW"), d.boundary("SW"));
    d.add_edge(d.boundary("NE"), d.boundary("SE"));
  }
  int n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    char kind = ((i % 2 == 0) == odd) ? 'h' : 'v';
    for (long k = 0; k < std::labs(a[i]); ++k) tangle_twist(d, kind, a[i] > 0 ? 1 : -1, prefix + std::to_string(++n));
  }
  return d;
}

CClosure c_closure(const RationalTangle& r) {
  DiagramBuilder d = r.build();
  tangle_twist(d, 'h', 1, "X");
  tangle_numerator(d);
  PDCode pd = d.to_pd("c-closure " + r.to_string());
  mpq_class f = r.fraction() + 1;
  mpz_class p = abs(f.get_num()), q = f.get_den();
  if (p <= 1) throw Error(ErrorKind::NotAKnot, "c-closure is trivial");
  if (p % 2 == 0) throw Error(ErrorKind::NotAKnot, "c-closure is a two-component link");
  if (pd.num_components() != 1) throw Error(ErrorKind::NotAKnot, "c-closure is not a knot");
  long pl = p.get_si();
  long ql = mpz_class(((q % p) + p) % p).get_si();
  if (f < 0) ql = pl - ql;
  CClosure c{TwoBridge::make(pl, ql), 0, 0, pd, knot_determinant(pd)};
  c.closing_sign = pd.crossings()[pd.crossing_index("X")].sign;
  c.q_effective = c.closing_sign > 0 ? c.knot.q : pl - c.knot.q;
  if (c.determinant != pl)
    throw Error(ErrorKind::Convention, "c-closure determinant " + std::to_string(c.determinant) +
                                           " differs from fraction numerator " + std::to_string(pl));
  return c;
}

PDCode tangle_replace(const PDCode& pd, const std::string& c, const RationalTangle& r,
                      const std::string& name, const std::vector<std::pair<int, std::string>>& reference) {
  int ci = pd.crossing_index(c);
  DiagramBuilder L = DiagramBuilder::from_pd(pd);
  DiagramBuilder R = r.build(c + ".");
  static const char* pos[4] = {"NW", "SW", "SE", "NE"};
  auto pos_slot = [](const std::string& b) {
    for (int k = 0; k < 4; ++k)
      if (b == pos[k]) return k;
    return -1;
  };

  DiagramBuilder K;
  std::vector<int> lmap(L.xs.size(), -1);
  for (std::size_t x = 0; x < L.xs.size(); ++x)
    if (static_cast<int>(x) != ci) lmap[x] = K.add_crossing(L.xs[x].label, L.xs[x].over13);
  int off = static_cast<int>(K.xs.size());
  for (auto& x : R.xs) {
    for (auto& y : K.xs)
      if (y.label == x.label) throw Error(ErrorKind::Parse, "crossing label clash: " + x.label);
    K.add_crossing(x.label, x.over13);
  }
  int max_label = 0;
  for (auto& e : L.edges) max_label = std::max(max_label, e.label);
  K.next_label = max_label + 1;

  auto lend = [&](const End& e) { return End{lmap[e.x], e.slot, ""}; };
  auto rend = [&](const End& e) { return End{e.x + off, e.slot, ""}; };
  auto at_c = [&](const End& e) { return e.x == ci; };

  // exterior edges untouched by c
  std::vector<int> lslot(4, -1);  // L edge index at c's slot k
  for (std::size_t i = 0; i < L.edges.size(); ++i) {
    auto& e = L.edges[i];
    if (!at_c(e.a) && !at_c(e.b)) K.add_edge(lend(e.a), lend(e.b), e.label);
    if (at_c(e.a)) lslot[e.a.slot] = static_cast<int>(i);
    if (at_c(e.b)) lslot[e.b.slot] = static_cast<int>(i);
  }
  // R edges without boundary points
  for (auto& e : R.edges)
    if (e.a.x >= 0 && e.b.x >= 0) K.add_edge(rend(e.a), rend(e.b));

  // Walk glued chains: exterior end -> (L edge at slot k) -> R boundary k -> ...
  std::vector<bool> used_l(4, false);
  auto r_edge_at = [&](int k) { return R.find_end(R.boundary(pos[k])); };
  auto l_other = [&](int k) {  // other end of the L edge at c slot k
    auto& e = L.edges[lslot[k]];
    if (at_c(e.a) && e.a.slot == k) return e.b;
    return e.a;
  };
  auto r_other = [&](int k) {
    auto [i, s] = r_edge_at(k);
    return s == 0 ? R.edges[i].b : R.edges[i].a;
  };
  for (int k = 0; k < 4; ++k) {
    if (used_l[k]) continue;
    End start = l_other(k);
    if (at_c(start)) continue;  // handled from its other side
    used_l[k] = true;
    int label = L.edges[lslot[k]].label;
    int cur = k;
    for (;;) {
      End re = r_other(cur);
      if (re.x >= 0) {
        K.add_edge(lend(start), rend(re), label);
        break;
      }
      int k2 = pos_slot(re.boundary);
      used_l[k2] = true;
      End le = l_other(k2);
      label = std::min(label, L.edges[lslot[k2]].label);
      if (!at_c(le)) {
        K.add_edge(lend(start), lend(le), label);
        break;
      }
      cur = le.slot;
      used_l[cur] = true;
    }
  }
  // R edges with one boundary point not reached through an exterior chain
  // only arise when c carries a loop; glue those R ends pairwise
  for (int k = 0; k < 4; ++k) {
    if (used_l[k]) continue;
    End le = l_other(k);
    if (!at_c(le)) continue;
    int k2 = le.slot;
    used_l[k] = used_l[k2] = true;
    End a = r_other(k), b = r_other(k2);
    if (a.x < 0 || b.x < 0) throw Error(ErrorKind::NotAKnot, "replacement leaves a crossingless loop");
    K.add_edge(rend(a), rend(b), L.edges[lslot[k]].label);
  }
  return K.to_pd(name.empty() ? pd.name() + "[" + c + "->" + r.to_string() + "]" : name, reference);
}

BraidClosure braid_closure(const BraidWord& b) {
  int n = b.strands();
  DiagramBuilder d;
  // open[k]: edge whose upper end is still unset
  std::vector<int> open(n);
  std::vector<bool> touched(n, false);
  for (int k = 0; k < n; ++k) open[k] = d.add_edge(d.boundary("bot" + std::to_string(k)), End{});
  int count = 0;
  for (auto& l : b.letters()) {
    // slots ccw: 0 SW, 1 SE, 2 NE, 3 NW; the positive generator has the
    // strand from position i+1 over
    int i = l.i - 1;
    int x = d.add_crossing("b" + std::to_string(++count), l.exp > 0);
    touched[i] = touched[i + 1] = true;
    d.edges[open[i]].b = d.slot(x, 0);
    d.edges[open[i + 1]].b = d.slot(x, 1);
    open[i] = d.add_edge(d.slot(x, 3), End{});
    open[i + 1] = d.add_edge(d.slot(x, 2), End{});
  }
  for (int k = 0; k < n; ++k)
    if (!touched[k]) throw Error(ErrorKind::Domain, "braid strand " + std::to_string(k + 1) + " has no crossings");
  std::vector<int> bottom_label(n);
  std::vector<bool> drop(d.edges.size(), false);
  for (int k = 0; k < n; ++k) {
    auto [i, side] = d.find_end(d.boundary("bot" + std::to_string(k)));
    (void)side;
    d.edges[i].a = d.edges[open[k]].a;
    drop[open[k]] = true;
    bottom_label[k] = d.edges[i].label;
  }
  DiagramBuilder c;
  c.xs = d.xs;
  for (std::size_t i = 0; i < d.edges.size(); ++i)
    if (!drop[i]) c.add_edge(d.edges[i].a, d.edges[i].b, d.edges[i].label);
  return {c.to_pd("closure " + b.to_string()), bottom_label};
}

}  // namespace xlk
