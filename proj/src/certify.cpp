#include "xlk/certify.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "xlk/construction.hpp"
#include "xlk/numeric.hpp"

namespace xlk {

namespace {

double size_scale(const std::vector<CMat>& ms) {
  double s = 1;
  for (const auto& m : ms) s = std::max(s, max_abs(m));
  return s * s;
}

std::map<int, CMat> as_assignment(const std::vector<CMat>& ms) {
  std::map<int, CMat> out;
  for (std::size_t k = 0; k < ms.size(); ++k) out[static_cast<int>(k) + 1] = ms[k];
  return out;
}

}  // namespace

CharCoordinateSet CharCoordinateSet::standard(const std::vector<int>& gens, int max_triple) {
  CharCoordinateSet s;
  std::size_t n = gens.size();
  for (int g : gens) s.words.push_back(FreeWord::generator(g));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      s.words.push_back(FreeWord({{gens[i], 1}, {gens[j], 1}}));
  if (static_cast<int>(n) <= max_triple)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k)
          s.words.push_back(FreeWord({{gens[i], 1}, {gens[j], 1}, {gens[k], 1}}));
  return s;
}

CharCoordinateSet& CharCoordinateSet::with_meridian(const FreeWord& w) {
  if (std::find(words.begin(), words.end(), w) == words.end()) words.push_back(w);
  return *this;
}

std::vector<Complex> CharCoordinateSet::evaluate(const std::map<int, CMat>& rep) const {
  std::vector<Complex> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(eval_word(w, rep).trace());
  return out;
}

IrreducibleWitness irreducibility_witness(const std::vector<CMat>& mats, double tol) {
  if (mats.empty()) throw Error(ErrorKind::Domain, "empty matrix list");
  std::vector<CMat> words;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < mats.size(); ++i) {
    words.push_back(mats[i]);
    names.push_back("m" + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < mats.size(); ++i)
    for (std::size_t j = 0; j < mats.size(); ++j) {
      if (i == j) continue;
      words.push_back(mats[i] * mats[j]);
      names.push_back("m" + std::to_string(i + 1) + "*m" + std::to_string(j + 1));
    }
  IrreducibleWitness w;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      double g = std::abs(trace_commutator(words[i], words[j]) - 2.0);
      if (g > w.gap) {
        w.gap = g;
        w.first = names[i];
        w.second = names[j];
      }
    }
  w.irreducible = w.gap > tol;
  return w;
}

bool irreducible(const std::vector<CMat>& mats, double tol) { return irreducibility_witness(mats, tol).irreducible; }

CMat intertwiner(const std::vector<CMat>& src, const std::vector<CMat>& dst, double tol) {
  if (src.size() != dst.size() || src.empty()) throw Error(ErrorKind::LengthMismatch, "tuples differ in length");
  std::vector<CMat> all = src;
  all.insert(all.end(), dst.begin(), dst.end());
  double scale = size_scale(all);

  // characters first
  std::vector<int> gens;
  for (std::size_t k = 1; k <= src.size(); ++k) gens.push_back(static_cast<int>(k));
  auto coords = CharCoordinateSet::standard(gens);
  auto cs = coords.evaluate(as_assignment(src)), cd = coords.evaluate(as_assignment(dst));
  for (std::size_t k = 0; k < cs.size(); ++k)
    if (std::abs(cs[k] - cd[k]) > tol * scale)
      throw Error(ErrorKind::NoIntertwiner, "characters differ on " + coords.words[k].to_string());

  // columns: dst E_k - E_k src for the four unit matrices
  MatC M(4 * src.size(), 4);
  const std::array<CMat, 4> unit{CMat(1, 0, 0, 0), CMat(0, 1, 0, 0), CMat(0, 0, 1, 0), CMat(0, 0, 0, 1)};
  for (std::size_t i = 0; i < src.size(); ++i)
    for (int k = 0; k < 4; ++k) {
      CMat d = dst[i] * unit[k] - unit[k] * src[i];
      M(4 * i, k) = d.a;
      M(4 * i + 1, k) = d.b;
      M(4 * i + 2, k) = d.c;
      M(4 * i + 3, k) = d.d;
    }
  Eigen::JacobiSVD<MatC> svd(M, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double top = std::max(1.0, sv(0));
  int nullity = 0;
  for (int k = 0; k < sv.size(); ++k)
    if (sv(k) < tol * top) ++nullity;
  nullity += 4 - static_cast<int>(sv.size());
  if (nullity != 1)
    throw Error(ErrorKind::Degenerate, "intertwiner space has dimension " + std::to_string(nullity));
  VecC v = svd.matrixV().col(3);
  CMat A(v(0), v(1), v(2), v(3));
  Complex det = A.det();
  if (std::abs(det) < 1e-12) throw Error(ErrorKind::Degenerate, "intertwiner is singular");
  A = normalize_det(A);

  // sign: first nonzero entry has argument in (-pi/2, pi/2]
  const double pi = std::numbers::pi;
  double big = max_abs(A);
  for (Complex z : {A.a, A.b, A.c, A.d}) {
    if (std::abs(z) <= 1e-9 * big) continue;
    double arg = std::arg(z);
    if (arg <= -pi / 2 + 1e-12 || arg > pi / 2 + 1e-12) A = -A;
    break;
  }
  for (std::size_t i = 0; i < src.size(); ++i)
    if (max_abs_diff(dst[i] * A, A * src[i]) > tol * scale * std::max(1.0, max_abs(A)))
      throw Error(ErrorKind::Degenerate, "intertwiner fails on generator " + std::to_string(i + 1));
  return A;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    default: return "inconclusive";
  }
}

ASquaredCheck check_A_squared(const CMat& A, const CMat& triple_product, double tol, double margin) {
  ASquaredCheck r;
  CMat I = CMat::identity();
  r.triple_margin = std::min(max_abs_diff(triple_product, I), max_abs_diff(triple_product, -I));
  r.a2_residual = max_abs(A * A + I);
  r.trace_abs = std::abs(A.trace());
  if (r.triple_margin <= margin) r.verdict = Verdict::Inconclusive;
  else r.verdict = (r.a2_residual < tol && r.trace_abs < tol) ? Verdict::True : Verdict::False;
  return r;
}

ClosureRep assemble_closure_rep(const BraidWord& b, const Involution& tau, const std::vector<CMat>& G,
                                const CMat& A, double tol) {
  if (static_cast<int>(G.size()) != b.strands()) throw Error(ErrorKind::LengthMismatch, "tuple length mismatch");
  ClosureRep out;
  std::vector<CMat> all = G;
  all.push_back(A);
  double scale = size_scale(all);

  auto H = artin_act(b, G);
  auto tG = involution_act(tau, G);
  for (std::size_t i = 0; i < G.size(); ++i)
    out.relation_residual = std::max(out.relation_residual, max_abs_diff(H[i], conjugate(A, tG[i])));
  out.a2_residual = max_abs(A * A + CMat::identity());
  if (out.relation_residual > tol * scale)
    throw Error(ErrorKind::Degenerate, "mapping-torus relation residual " + std::to_string(out.relation_residual));
  if (out.a2_residual > tol * scale)
    throw Error(ErrorKind::Degenerate, "A^2 + I residual " + std::to_string(out.a2_residual));

  out.word = b * star(b, tau);
  out.closure = braid_closure(out.word);
  const PDCode& pd = out.closure.pd;
  RepAssignment seeds;
  for (std::size_t k = 0; k < G.size(); ++k) seeds[pd.arc_of_edge(out.closure.bottom_edges[k])] = G[k];
  Propagation P = propagate(pd, seeds);
  if (!P.complete) throw Error(ErrorKind::Propagation, "closure assignment is incomplete");
  out.rep = std::move(P.rep);
  out.residual = P.residual;
  out.meridian_spread = 0;
  Complex tr = G[0].trace();
  for (auto& [arc, M] : out.rep) out.meridian_spread = std::max(out.meridian_spread, std::abs(M.trace() - tr));
  if (out.residual > 10 * tol * entry_scale(out.rep))
    throw Error(ErrorKind::Propagation, "closure residual " + std::to_string(out.residual));
  return out;
}

KleinResult klein_classify(const CMat& Ma, const CMat& Mb, double tol) {
  KleinResult r;
  double s = std::max({1.0, max_abs(Ma), max_abs(Mb)});
  s *= s;
  r.relation_residual = max_abs_diff(Ma * Mb * Ma.inverse(), Mb.inverse());
  r.trace_a = Ma.trace();
  r.trace_ab = (Ma * Mb).trace();
  if (r.relation_residual >= tol * s) return r;
  CMat I = CMat::identity();
  if (max_abs_diff(Mb, I) < tol * s || max_abs_diff(Mb, -I) < tol * s) r.kase = KleinCase::Case1;
  else if (std::abs(Mb.trace() - 2.0) > tol * s && std::abs(Mb.trace() + 2.0) > tol * s) r.kase = KleinCase::Case2;
  else r.kase = KleinCase::Case3;
  return r;
}

HypothesisReport hypothesis_check(const BraidWord& b, const Involution& tau, const std::vector<CMat>& G,
                                  const CMat& A, double tol) {
  int n = b.strands();
  if (static_cast<int>(G.size()) != n) throw Error(ErrorKind::LengthMismatch, "tuple length mismatch");
  HypothesisReport r;
  std::map<int, CMat> rho = as_assignment(G);
  rho[kLoopGenerator] = A;
  std::vector<CMat> all = G;
  all.push_back(A);
  double scale = size_scale(all);

  // relations of the mapping torus group, from the free-group side
  auto psi = loop_conjugation(b, tau);
  for (int j = 1; j <= n; ++j)
    r.closure_relation_residual =
        std::max(r.closure_relation_residual, max_abs_diff(conjugate(A, G[j - 1]), eval_word(psi[j - 1], rho)));
  r.A_square_residual = max_abs(A * A + CMat::identity());
  if (r.closure_relation_residual > tol * scale) {
    r.inconclusive = true;
    r.diagnostics = "mapping-torus relation residual " + std::to_string(r.closure_relation_residual);
    return r;
  }

  auto klein = [&](const std::string& name, const FreeWord& aw, const FreeWord& bw) {
    KleinCheck k;
    k.name = name;
    k.a_word = aw;
    k.b_word = bw;
    CMat Ma = eval_word(aw, rho), Mb = eval_word(bw, rho);
    KleinResult kr = klein_classify(Ma, Mb, tol);
    k.relation_residual = kr.relation_residual;
    k.kase = kr.kase;
    k.commutator_gap = std::abs(trace_commutator(Ma, Mb) - 2.0);
    k.irreducible = kr.kase != KleinCase::NotARep && k.commutator_gap > tol;
    return k;
  };

  // disk boundary: the loop reverses the boundary word
  FreeWord w;
  for (const auto& g : free_generators(n)) w = w * g;
  FreeWord image;
  for (const auto& p : psi) image = image * p;
  if (!(image.reduced() == w.inverse())) {
    r.inconclusive = true;
    r.diagnostics += "loop image of the boundary word is " + image.reduced().to_string() + "; ";
  }
  r.klein.push_back(klein("disk", FreeWord::generator(kLoopGenerator), w));
  // strand torus of the closure: one orbit, so strand 1 represents it
  try {
    FreeWord u = strand_holonomy(b, tau, 1);
    r.klein.push_back(klein("strand 1", u, FreeWord::generator(1)));
  } catch (const Error& e) {
    r.inconclusive = true;
    r.diagnostics += std::string("strand holonomy: ") + e.what() + "; ";
  }
  bool all_rep = true;
  r.condition_a = !r.klein.empty();
  for (const auto& k : r.klein) {
    all_rep = all_rep && k.kase != KleinCase::NotARep;
    r.condition_a = r.condition_a && k.irreducible;
  }
  if (!all_rep) {
    r.inconclusive = true;
    r.diagnostics += "a Klein relation fails numerically; ";
  }

  // orientation-preserving subgroup: g_i, a g_i a^-1 and the central a^2
  std::vector<CMat> sub = G;
  for (const auto& g : G) sub.push_back(conjugate(A, g));
  r.witness_b = irreducibility_witness(sub, tol);
  r.condition_b = r.witness_b.irreducible;
  return r;
}

std::vector<TorusPoint> find_mapping_torus_points(const BraidWord& b, const Involution& tau, int count,
                                                  std::uint64_t seed, double tol, int max_starts) {
  const int n = b.strands();
  const Complex I(0, 1);
  const CMat A(I, 0, 0, -I);
  // meet in the middle: act(b1, G) = act(b2^-1, A tau(G) A^-1) with b = b1 b2
  std::size_t mid = b.length() / 2;
  BraidWord b1(n, {b.letters().begin(), b.letters().begin() + mid});
  BraidWord b2inv = BraidWord(n, {b.letters().begin() + mid, b.letters().end()}).inverse();
  auto unpack = [n](const VecC& z) {
    std::vector<CMat> G;
    for (int j = 0; j < n; ++j) G.emplace_back(z(4 * j), z(4 * j + 1), z(4 * j + 2), z(4 * j + 3));
    return G;
  };
  auto equations = [&](const VecC& z) {
    auto G = unpack(z);
    auto H = artin_act(b1, G);
    auto tG = involution_act(tau, G);
    for (auto& m : tG) m = conjugate(A, m);
    tG = artin_act(b2inv, tG);
    VecC f(6 * n);
    int k = 0;
    for (int j = 0; j < n; ++j) {
      CMat d = H[j] - tG[j];
      f(k++) = d.a;
      f(k++) = d.b;
      f(k++) = d.c;
      f(k++) = d.d;
    }
    for (int j = 0; j < n; ++j) f(k++) = G[j].det() - 1.0;
    for (int j = 1; j < n; ++j) f(k++) = G[j].trace() - G[0].trace();
    // kill the diagonal conjugations commuting with A
    f(k++) = G[0].b - 1.0;
    return f;
  };
  ResidualFn fn = [&](const VecC& z, VecC& f, MatC& jac) {
    f = equations(z);
    jac.resize(f.size(), z.size());
    const double h = 1e-7;
    for (int j = 0; j < z.size(); ++j) {
      VecC zp = z, zm = z;
      zp(j) += h;
      zm(j) -= h;
      jac.col(j) = (equations(zp) - equations(zm)) / (2 * h);
    }
  };
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  std::vector<TorusPoint> out;
  for (int s = 0; s < max_starts && static_cast<int>(out.size()) < count; ++s) {
    VecC z0(4 * n);
    for (int j = 0; j < z0.size(); ++j) z0(j) = Complex(nd(rng), nd(rng));
    for (int j = 0; j < n; ++j) {
      CMat m = normalize_det(unpack(z0)[j]);
      z0.segment(4 * j, 4) << m.a, m.b, m.c, m.d;
    }
    SolveResult r = levenberg_marquardt(fn, z0, 1e-14, 300);
    auto G = unpack(r.x);
    // report the unsplit relation together with the side conditions
    double res = equations(r.x).cwiseAbs().maxCoeff();
    auto full = artin_act(b, G);
    auto tG = involution_act(tau, G);
    for (int j = 0; j < n; ++j) res = std::max(res, max_abs_diff(full[j], conjugate(A, tG[j])));
    double big = 0;
    for (const auto& g : G) big = std::max(big, max_abs(g));
    if (!(res < tol) || big > 1e4) continue;
    if (!irreducible(G, 1e-6)) continue;
    bool fresh = true;
    for (const auto& p : out) fresh = fresh && std::abs(p.G[0].trace() - G[0].trace()) > 1e-6;
    if (!fresh) continue;
    out.push_back({G, A, res});
  }
  return out;
}

RankResult jacobian_rank(const FamilyFn& family, const std::vector<Complex>& point, const CharCoordinateSet& coords,
                         const RankOptions& opt) {
  std::size_t np = point.size();
  if (np == 0) throw Error(ErrorKind::Domain, "no parameters");
  // stencil: center, then +h and -h along each parameter
  std::vector<std::vector<Complex>> pts{point};
  for (std::size_t k = 0; k < np; ++k) {
    auto p = point, m = point;
    p[k] += opt.h;
    m[k] -= opt.h;
    pts.push_back(p);
    pts.push_back(m);
  }
  std::vector<FamilySample> samples(pts.size());
  if (opt.parallel) {
    std::vector<std::future<FamilySample>> jobs;
    for (const auto& p : pts) jobs.push_back(std::async(std::launch::async, family, p));
    for (std::size_t k = 0; k < jobs.size(); ++k) samples[k] = jobs[k].get();
  } else {
    for (std::size_t k = 0; k < pts.size(); ++k) samples[k] = family(pts[k]);
  }
  RankResult r;
  for (const auto& s : samples) r.stencil_residual = std::max(r.stencil_residual, s.residual / s.scale);
  if (!(r.stencil_residual < opt.stencil_tol))
    throw Error(ErrorKind::StencilResidual, "stencil residual " + std::to_string(r.stencil_residual));

  MatC J(coords.size(), np);
  for (std::size_t k = 0; k < np; ++k) {
    auto fp = coords.evaluate(samples[1 + 2 * k].rep), fm = coords.evaluate(samples[2 + 2 * k].rep);
    for (std::size_t i = 0; i < coords.size(); ++i) J(i, k) = (fp[i] - fm[i]) / (2 * opt.h);
  }
  Eigen::JacobiSVD<MatC> svd(J);
  const auto& sv = svd.singularValues();
  for (int k = 0; k < sv.size(); ++k) r.singular_values.push_back(sv(k));
  double top = r.singular_values.empty() ? 0 : r.singular_values.front();
  double cut = opt.cutoff * std::max(top, 1.0);
  double floor = 1e-10 * std::max(top, 1.0);
  r.rank = 0;
  for (double s : r.singular_values)
    if (s > cut) ++r.rank;
  double accepted = r.rank > 0 ? r.singular_values[r.rank - 1] : cut;
  double rejected = r.rank < static_cast<int>(r.singular_values.size()) ? r.singular_values[r.rank] : 0.0;
  r.gap = accepted / std::max(rejected, floor);
  r.certificate_grade = r.gap >= opt.certificate_gap;
  if (r.gap < opt.min_gap)
    throw Error(ErrorKind::IndeterminateRank, "spectral gap " + std::to_string(r.gap) + " below " +
                                                  std::to_string(opt.min_gap));
  return r;
}

}  // namespace xlk
