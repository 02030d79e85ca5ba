#include "xlk/construction.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "xlk/errors.hpp"
#include "xlk/riley.hpp"

namespace xlk {

namespace {

std::string fmt(Complex z) {
  std::ostringstream s;
  s << z;
  return s.str();
}

std::string sci(double v) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << v;
  return s.str();
}

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

// ext edge of the replaced crossing that flows into the new disk
int edge_into_disk(const PDCode& K, const std::array<int, 4>& e, const std::string& c, std::initializer_list<int> slots) {
  for (int k : slots) {
    const auto& head = K.crossings()[K.edge_head(e[k]).crossing];
    if (starts_with(head.label, c + ".")) return e[k];
  }
  throw Error(ErrorKind::Orientation, "no strand of " + c + " enters the tangle");
}

std::pair<int, std::string> leaving_reference(const PDCode& L, int ci) {
  const auto& X = L.crossings()[ci];
  for (int k : {1, 3}) {
    auto t = L.edge_tail(X.e[k]);
    auto h = L.edge_head(X.e[k]);
    if (t.crossing == ci && t.slot == k && h.crossing != ci) return {X.e[k], L.crossings()[h.crossing].label};
  }
  throw Error(ErrorKind::Degenerate, "crossing " + X.label + " carries a loop");
}

std::vector<Complex> roots_or_empty(const TwoBridge& tb, Complex m) {
  try {
    return riley_roots(tb, m);
  } catch (const Error&) {
    return {};
  }
}

// Two-bridge types to try for T, the given one first.
std::vector<TwoBridge> with_mirror(const TwoBridge& tb) {
  std::vector<TwoBridge> out{tb};
  if (!(tb.mirror() == tb)) out.push_back(tb.mirror());
  return out;
}

// Arcs to pair with the G-colored arcs: partners at self crossings of T.
std::vector<int> partner_arcs(const PDCode& K, const PDCode& L, int t_comp, const std::set<int>& g_arcs) {
  std::vector<int> out;
  for (const auto& r : K.wirtinger()) {
    const auto& label = K.crossings()[r.crossing].label;
    int li;
    try {
      li = L.crossing_index(label);
    } catch (const Error&) {
      continue;
    }
    const auto& x = L.crossings()[li];
    if (L.component_of_edge(x.e[0]) != t_comp || L.component_of_edge(x.e[1]) != t_comp) continue;
    int other = -1;
    if (g_arcs.count(r.over)) other = r.in;
    else if (g_arcs.count(r.in)) other = r.over;
    else if (g_arcs.count(r.out)) other = r.over;
    if (other >= 0 && !g_arcs.count(other) && std::find(out.begin(), out.end(), other) == out.end()) out.push_back(other);
  }
  return out;
}

}  // namespace

LinkRoles link_roles(const PDCode& pd) {
  LinkRoles roles;
  const Json& meta = pd.meta();
  if (!meta.contains("components")) return roles;
  for (auto& [role, v] : meta["components"].items()) {
    int comp;
    if (v.contains("edge")) {
      comp = pd.component_of_edge(v["edge"].get<int>());
    } else if (v.contains("index") && meta.contains("component_edges")) {
      comp = pd.component_of_edge(meta["component_edges"].at(v["index"].get<int>()).at(0).get<int>());
    } else if (v.contains("index")) {
      comp = v["index"].get<int>();
    } else {
      throw Error(ErrorKind::Parse, "component role " + role + " needs an edge or index");
    }
    roles.component[role] = comp;
    if (v.contains("two_bridge") && !roles.knot) roles.knot = TwoBridge::parse(v["two_bridge"].get<std::string>());
  }
  return roles;
}

std::vector<std::pair<Complex, Complex>> product_grid(const std::vector<Complex>& ms, const std::vector<Complex>& ts) {
  std::vector<std::pair<Complex, Complex>> g;
  for (Complex m : ms)
    for (Complex t : ts) g.emplace_back(m, t);
  return g;
}

double meridian_trace_spread(const RepAssignment& rep, Complex expected) {
  double worst = 0;
  for (auto& [arc, M] : rep) worst = std::max(worst, std::abs(M.trace() - expected));
  return worst;
}

Construction1 construction1_family(const PDCode& L, const std::string& c, const RationalTangle& R,
                                   const std::vector<std::pair<Complex, Complex>>& grid,
                                   const ConstructionOptions& opt) {
  if (L.num_components() != 2) throw Error(ErrorKind::Domain, "expected a two-component split link");
  LinkRoles roles = link_roles(L);
  int ci = L.crossing_index(c);
  const auto X = L.crossings()[ci];
  int t_comp = L.component_of_edge(X.e[1]);
  int o_comp = L.component_of_edge(X.e[0]);
  if (t_comp == o_comp) throw Error(ErrorKind::Domain, "crossing " + c + " must join T and O");
  if (roles.component.count("T") && roles.component.at("T") != t_comp)
    throw Error(ErrorKind::Orientation, "crossing " + c + " must have T as its over strand");
  std::optional<TwoBridge> tk = opt.t_knot ? opt.t_knot : roles.knot;
  if (!tk) throw Error(ErrorKind::Domain, "two-bridge type of T is not known");

  Construction1 out{PDCode(), c_closure(R), *tk, {}, {}};
  auto ref = leaving_reference(L, ci);
  out.pdK = tangle_replace(L, c, R, L.name() + "+" + c + ":" + R.to_string(), {ref});
  const PDCode& K = out.pdK;
  if (K.num_components() != 1) throw Error(ErrorKind::NotAKnot, "replacement does not give a knot");
  int o_in = edge_into_disk(K, X.e, c, {0, 2});
  out.meridian_edges = {X.e[1], X.e[3], o_in};
  int g1 = K.arc_of_edge(X.e[1]), g3 = K.arc_of_edge(X.e[3]), h_arc = K.arc_of_edge(o_in);
  auto partners = partner_arcs(K, L, t_comp, {g1, g3});
  partners.erase(std::remove(partners.begin(), partners.end(), h_arc), partners.end());
  if (partners.empty()) throw Error(ErrorKind::Domain, "no self crossing of T next to the arc of " + c);

  long p = out.closure.knot.p;
  std::vector<long> qs{out.closure.q_effective};
  if (p - out.closure.q_effective != out.closure.q_effective) qs.push_back(p - out.closure.q_effective);

  for (auto [m, t] : grid) {
    CMat G = riley_G(m);
    CMat A = centralizer_matrix(G, t);
    auto main_roots = riley_roots(TwoBridge::make(p, qs[0]), m);
    std::size_t nb = opt.all_branches ? main_roots.size() : 1;
    for (std::size_t b = 0; b < nb; ++b) {
      FamilyPoint best;
      best.residual = 1e300;
      double scale = 1;
      // every seeding candidate is tried; the smallest residual wins
      for (long qc : qs) {
        auto us = qc == qs[0] ? main_roots : roots_or_empty(TwoBridge::make(p, qc), m);
        if (b >= us.size()) continue;
        Complex u = us[b];
        CMat HA = conjugate(A, riley_H(m, u));
        for (const auto& tb : with_mirror(*tk)) {
          for (Complex uT : roots_or_empty(tb, m)) {
            CMat HT = riley_H(m, uT);
            for (int other : partners) {
              Propagation P = propagate(K, {{g1, G}, {g3, G}, {other, HT}, {h_arc, HA}});
              if (!P.complete || P.residual >= best.residual) continue;
              scale = entry_scale(P.rep);
              best = {{m, t}, static_cast<int>(b), u, uT, qc, tb, other, P.rep, P.residual, P.worst_crossing};
            }
          }
        }
      }
      if (best.residual >= opt.tol * scale) {
        std::string where = best.worst_crossing >= 0 ? K.crossings()[best.worst_crossing].label : "?";
        throw Error(ErrorKind::Propagation, "no consistent extension at m=" + fmt(m) + ", t=" + fmt(t) +
                                                "; worst crossing " + where + ", residual " + sci(best.residual));
      }
      out.family.push_back(best);
    }
  }
  return out;
}

FamilyPoint construction1_point(const Construction1& c, const FamilyPoint& base, Complex m, Complex t) {
  const PDCode& K = c.pdK;
  auto nearest = [](const std::vector<Complex>& roots, Complex target) {
    if (roots.empty()) throw Error(ErrorKind::RootFinding, "Riley polynomial has no usable root");
    return *std::min_element(roots.begin(), roots.end(),
                             [&](Complex a, Complex b) { return std::abs(a - target) < std::abs(b - target); });
  };
  FamilyPoint out = base;
  out.params = {m, t};
  out.u = nearest(riley_roots(TwoBridge::make(c.closure.knot.p, base.q_used), m), base.u);
  out.u_T = nearest(riley_roots(base.t_used, m), base.u_T);
  CMat G = riley_G(m);
  CMat A = centralizer_matrix(G, t);
  RepAssignment seeds{{K.arc_of_edge(c.meridian_edges[0]), G},
                      {K.arc_of_edge(c.meridian_edges[1]), G},
                      {base.partner_arc, riley_H(m, out.u_T)},
                      {K.arc_of_edge(c.meridian_edges[2]), conjugate(A, riley_H(m, out.u))}};
  Propagation P = propagate(K, seeds);
  if (!P.complete) throw Error(ErrorKind::Propagation, "seeds do not reach every arc");
  out.rep = std::move(P.rep);
  out.residual = P.residual;
  out.worst_crossing = P.worst_crossing;
  return out;
}

CMat parabolic_matrix(Complex x, Complex y) { return CMat(1.0 + x * y, x * x, -y * y, 1.0 - x * y); }

namespace {

RepAssignment parabolic_seeds(const ParabolicFamily& f, Complex t, Complex x, Complex y) {
  RepAssignment s = f.t1_seeds;
  CMat A = CMat::identity() + (f.g_matrix - CMat::identity()).scaled(t);
  s[f.a_arcs[0]] = A;
  s[f.a_arcs[1]] = A;
  s[f.h_arc] = parabolic_matrix(x, y);
  return s;
}

VecC parabolic_residual(const ParabolicFamily& f, Complex t, Complex x, Complex y, Propagation* keep) {
  const PDCode& K = f.pdK;
  Propagation P = propagate(K, parabolic_seeds(f, t, x, y));
  if (!P.complete) throw Error(ErrorKind::Propagation, "parabolic seeds do not reach every arc");
  VecC r(4 * K.wirtinger().size());
  int k = 0;
  for (const auto& w : K.wirtinger()) {
    CMat d = signed_power(P.rep[w.over], w.sign) * P.rep[w.in] * signed_power(P.rep[w.over], -w.sign) - P.rep[w.out];
    r(k++) = d.a;
    r(k++) = d.b;
    r(k++) = d.c;
    r(k++) = d.d;
  }
  if (keep) *keep = std::move(P);
  return r;
}

}  // namespace

std::optional<FamilyPoint> parabolic_point(const ParabolicFamily& f, Complex x, Complex t0, Complex y0, double tol) {
  ResidualFn fn = [&](const VecC& z, VecC& r, MatC& jac) {
    r = parabolic_residual(f, z(0), x, z(1), nullptr);
    jac.resize(r.size(), 2);
    const double h = 1e-6;
    for (int j = 0; j < 2; ++j) {
      VecC zp = z, zm = z;
      zp(j) += h;
      zm(j) -= h;
      jac.col(j) = (parabolic_residual(f, zp(0), x, zp(1), nullptr) - parabolic_residual(f, zm(0), x, zm(1), nullptr)) / (2 * h);
    }
  };
  VecC z0(2);
  z0 << t0, y0;
  SolveResult sr = levenberg_marquardt(fn, z0, 1e-14, 200);
  Complex t = sr.x(0), y = sr.x(1);
  if (std::abs(t) < 1e-6 || std::abs(t) > 1e6 || std::abs(y) > 1e6) return std::nullopt;
  Propagation P;
  VecC r = parabolic_residual(f, t, x, y, &P);
  double res = r.cwiseAbs().maxCoeff();
  if (!(res <= tol)) return std::nullopt;
  // meridians at c1 and c2 must not commute
  for (const auto& pr : f.check_pairs)
    if (std::abs((P.rep.at(pr[0]) * P.rep.at(pr[1])).trace() - 2.0) < 1e-6) return std::nullopt;
  FamilyPoint fp;
  fp.params = {t, x, y};
  fp.rep = std::move(P.rep);
  fp.residual = res;
  fp.worst_crossing = P.worst_crossing;
  return fp;
}

bool single_arc_hypothesis(const PDCode& L, int t1, int t2) {
  std::map<int, int> parent;
  for (int e : L.components()[t1]) parent[e] = e;
  std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (const auto& x : L.crossings()) {
    bool under_t1 = L.component_of_edge(x.e[0]) == t1, over_t1 = L.component_of_edge(x.e[1]) == t1;
    if (over_t1) unite(x.e[1], x.e[3]);
    if (under_t1 && !over_t1) unite(x.e[0], x.e[2]);
  }
  std::set<int> arcs;
  for (const auto& x : L.crossings()) {
    int cu = L.component_of_edge(x.e[0]), co = L.component_of_edge(x.e[1]);
    if (cu == t1 && co == t2) arcs.insert(find(x.e[0]));
    if (co == t1 && cu == t2) arcs.insert(find(x.e[1]));
  }
  return arcs.size() == 1;
}

ParabolicFamily parabolic_family(const PDCode& L, const std::string& c1, const std::string& c2,
                                 const RationalTangle& R1, const RationalTangle& R2, const ParabolicOptions& opt) {
  if (L.num_components() != 3) throw Error(ErrorKind::Domain, "expected a three-component link");
  LinkRoles roles = link_roles(L);
  int i1 = L.crossing_index(c1), i2 = L.crossing_index(c2);
  const auto X1 = L.crossings()[i1];
  const auto X2 = L.crossings()[i2];
  int t1 = L.component_of_edge(X1.e[1]), t2 = L.component_of_edge(X2.e[1]);
  int oc = L.component_of_edge(X1.e[0]);
  if (L.component_of_edge(X2.e[0]) != oc || t1 == t2 || t1 == oc || t2 == oc)
    throw Error(ErrorKind::Domain, "c1 and c2 must have T1, T2 over the same unknot O");
  if (roles.component.count("T1") && roles.component.at("T1") != t1)
    throw Error(ErrorKind::Orientation, "crossing " + c1 + " must have T1 as its over strand");
  if (roles.component.count("T2") && roles.component.at("T2") != t2)
    throw Error(ErrorKind::Orientation, "crossing " + c2 + " must have T2 as its over strand");
  if (!single_arc_hypothesis(L, t1, t2)) throw Error(ErrorKind::Domain, "T2 meets T1 along more than one arc");
  std::optional<TwoBridge> tk = opt.t_knot ? opt.t_knot : roles.knot;
  if (!tk) throw Error(ErrorKind::Domain, "two-bridge type of T1 is not known");

  ParabolicFamily out;
  out.closure1 = c_closure(R1);
  out.closure2 = c_closure(R2);

  // parabolic representation of T1 on the diagram of L
  const Complex m = 1.0;
  CMat G = riley_G(m);
  int g_arc = L.arc_of_edge(X1.e[1]);
  auto partners = partner_arcs(L, L, t1, {g_arc});
  std::map<int, CMat> t1_color;  // edge label -> matrix
  for (const auto& tb : with_mirror(*tk)) {
    for (Complex uT : roots_or_empty(tb, m)) {
      for (int other : partners) {
        Propagation P = propagate(L, {{g_arc, G}, {other, riley_H(m, uT)}});
        bool all = true;
        for (int e : L.components()[t1]) all = all && P.rep.count(L.arc_of_edge(e));
        if (!all || P.residual > opt.tol) continue;
        for (int e : L.components()[t1]) t1_color[e] = P.rep.at(L.arc_of_edge(e));
        break;
      }
      if (!t1_color.empty()) break;
    }
    if (!t1_color.empty()) break;
  }
  if (t1_color.empty()) throw Error(ErrorKind::Propagation, "no parabolic representation of T1 on this diagram");
  // image of the clasp arc
  std::optional<CMat> gg;
  for (const auto& x : L.crossings()) {
    int cu = L.component_of_edge(x.e[0]), co = L.component_of_edge(x.e[1]);
    CMat cand;
    if (co == t1 && cu == t2) cand = t1_color.at(x.e[1]);
    else if (cu == t1 && co == t2) cand = t1_color.at(x.e[0]);
    else continue;
    if (gg && max_abs_diff(*gg, cand) > 1e-9) throw Error(ErrorKind::Domain, "T2 does not meet T1 along one arc");
    gg = cand;
  }
  if (!gg) throw Error(ErrorKind::Domain, "T2 does not meet T1");
  out.g_matrix = *gg;

  auto ref = leaving_reference(L, i1);
  PDCode K1 = tangle_replace(L, c1, R1, "", {ref});
  out.pdK = tangle_replace(K1, c2, R2, L.name() + "+" + c1 + ":" + R1.to_string() + "+" + c2 + ":" + R2.to_string(), {ref});
  const PDCode& K = out.pdK;
  if (K.num_components() != 1) throw Error(ErrorKind::NotAKnot, "double replacement does not give a knot");
  int o_in = edge_into_disk(K, X1.e, c1, {0, 2});
  int h_arc = K.arc_of_edge(o_in);

  out.t1_seeds.clear();
  for (auto& [e, M] : t1_color) out.t1_seeds[K.arc_of_edge(e)] = M;
  out.a_arcs = {K.arc_of_edge(X2.e[1]), K.arc_of_edge(X2.e[3])};
  out.h_arc = h_arc;
  out.check_pairs[0] = {K.arc_of_edge(X1.e[1]), h_arc};
  out.check_pairs[1] = {out.a_arcs[0], K.arc_of_edge(edge_into_disk(K, X2.e, c2, {0, 2}))};

  std::mt19937_64 rng(opt.seed);
  std::normal_distribution<double> nd;
  for (int s = 0; s < opt.samples; ++s) {
    Complex x(0.7 + 0.23 * s, 0.31 - 0.07 * s);
    for (int start = 0; start < opt.starts; ++start) {
      Complex t0(nd(rng), nd(rng)), y0(nd(rng), nd(rng));
      auto fp = parabolic_point(out, x, t0, y0, opt.tol);
      if (!fp) continue;
      out.family.push_back(std::move(*fp));
      break;
    }
  }
  if (out.family.empty()) throw Error(ErrorKind::Divergence, "Newton iteration failed from every start");
  return out;
}

}  // namespace xlk
