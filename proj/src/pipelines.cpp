#include "xlk/pipelines.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <numbers>
#include <random>

#include "xlk/construction.hpp"
#include "xlk/riley.hpp"
#include "xlk/tangle.hpp"
#include "xlk/trace_coords.hpp"

namespace xlk {

namespace {

// uniform in [0, 1) from the top 53 bits; identical on every platform
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Complex polar_sample(std::mt19937_64& rng, double r0, double r1, double th0, double th1) {
  double r = r0 + (r1 - r0) * unit(rng);
  double th = th0 + (th1 - th0) * unit(rng);
  return std::polar(r, th);
}

// n distinct indices out of [0, total), in increasing order
std::vector<int> pick(std::mt19937_64& rng, int total, int n) {
  std::vector<int> idx(total);
  for (int k = 0; k < total; ++k) idx[k] = k;
  for (int k = total - 1; k > 0; --k) std::swap(idx[k], idx[static_cast<int>(unit(rng) * (k + 1))]);
  idx.resize(std::min(n, total));
  std::sort(idx.begin(), idx.end());
  return idx;
}

RankOptions rank_options(const RunConfig& cfg) {
  RankOptions o;
  o.h = cfg.h;
  o.cutoff = cfg.cutoff;
  o.certificate_gap = cfg.gap;
  o.min_gap = cfg.min_gap;
  o.stencil_tol = std::max(cfg.tol, 1e-12);
  return o;
}

std::vector<int> all_arcs(const PDCode& pd) {
  std::vector<int> out;
  for (int a = 0; a < pd.num_arcs(); ++a) out.push_back(a);
  return out;
}

Json braid_json(const BraidWord& b) { return {{"word", b.to_string()}, {"strands", b.strands()}}; }

Json closure_json(const BraidWord& b, const Involution& tau) {
  BraidWord w = b * star(b, tau);
  Json j = {{"star", star(b, tau).to_string()},
            {"word", w.to_string()},
            {"permutation_b_tau", perm_image(b, tau).to_string()},
            {"closure_is_knot", closure_is_knot(b, tau)}};
  if (closure_is_knot(b, tau)) {
    BraidClosure bc = braid_closure(w);
    j["crossings"] = bc.pd.size();
    j["determinant"] = knot_determinant(bc.pd);
  }
  return j;
}

// Everything about one mapping-torus point (G, A) of b*tau.
Json torus_point_json(const BraidWord& b, const Involution& tau, const std::vector<CMat>& G, const CMat& A,
                      bool with_closure) {
  Json j;
  Json gs = Json::array();
  for (const auto& g : G) gs.push_back(mat_json(g));
  j["G"] = gs;
  j["A"] = mat_json(A);
  CMat prod = CMat::identity();
  for (const auto& g : G) prod = prod * g;
  ASquaredCheck aq = check_A_squared(A, prod);
  j["A_squared"] = {{"verdict", verdict_name(aq.verdict)},
                    {"a2_residual", aq.a2_residual},
                    {"trace_abs", aq.trace_abs},
                    {"triple_margin", aq.triple_margin}};
  if (with_closure) {
    ClosureRep cr = assemble_closure_rep(b, tau, G, A, 1e-9);
    j["closure"] = {{"relation_residual", cr.relation_residual},
                    {"residual", cr.residual},
                    {"meridian_spread", cr.meridian_spread}};
  }
  j["hypothesis"] = hypothesis_json(hypothesis_check(b, tau, G, A));
  return j;
}

struct UPointData {
  UPoint u;
  std::vector<CMat> G;
  CMat A;
};

UPointData u_point_data(const BraidWord& b, const Involution& tau, const UPoint& u) {
  auto T = lift_triple(u.coords, *u.coords.a);
  std::vector<CMat> G(T.begin(), T.end());
  CMat A = intertwiner(involution_act(tau, G), artin_act(b, G));
  return {u, G, A};
}

// (a, T) -> representation of the closure of b * star(b)
FamilyFn u_family(const BraidWord& b, const Involution& tau, const NumCoord& guess) {
  auto solver = std::make_shared<USolver>(b);
  auto bc = std::make_shared<BraidClosure>(braid_closure(b * star(b, tau)));
  return [solver, bc, guess](const std::vector<Complex>& q) {
    UPoint u = solver->refine(q[0], q[1], guess);
    auto T = lift_triple(u.coords, q[0]);
    RepAssignment seeds;
    for (int k = 0; k < 3; ++k) seeds[bc->pd.arc_of_edge(bc->bottom_edges[k])] = T[k];
    Propagation P = propagate(bc->pd, seeds);
    if (!P.complete) throw Error(ErrorKind::Propagation, "closure assignment is incomplete");
    double ures = *std::max_element(u.residual.begin(), u.residual.end());
    return FamilySample{P.rep, std::max(P.residual, ures), entry_scale(P.rep)};
  };
}

CharCoordinateSet closure_coords(const BraidWord& b, const Involution& tau) {
  BraidClosure bc = braid_closure(b * star(b, tau));
  std::vector<int> gens;
  for (int e : bc.bottom_edges) gens.push_back(bc.pd.arc_of_edge(e));
  return CharCoordinateSet::standard(gens);
}

Json u_point_json(const UPoint& u) {
  return {{"a", complex_json(*u.coords.a)},
          {"T", complex_json(u.T)},
          {"x", complex_json(u.coords.x)},
          {"y", complex_json(u.coords.y)},
          {"z", complex_json(u.coords.z)},
          {"b", complex_json(u.coords.b)},
          {"c", complex_json(u.coords.c)},
          {"u_residuals", u.residual},
          {"residual", *std::max_element(u.residual.begin(), u.residual.end())},
          {"branch_factor", u.branch}};
}

std::string resolve(const std::string& file) {
  namespace fs = std::filesystem;
  if (fs::path(file).is_absolute() || fs::exists(file)) return file;
  return data_path(file);
}

}  // namespace

Json RunConfig::to_json() const {
  return {{"seed", seed}, {"tol", tol},     {"cutoff", cutoff}, {"gap", gap},
          {"min_gap", min_gap}, {"h", h}, {"count", count},   {"grid", grid}};
}

RunConfig RunConfig::from_json(const Json& j) {
  RunConfig c;
  c.seed = j.value("seed", c.seed);
  c.tol = j.value("tol", c.tol);
  c.cutoff = j.value("cutoff", c.cutoff);
  c.gap = j.value("gap", c.gap);
  c.min_gap = j.value("min_gap", c.min_gap);
  c.h = j.value("h", c.h);
  c.count = j.value("count", c.count);
  c.grid = j.value("grid", c.grid);
  return c;
}

void RunConfig::validate() const {
  if (!(tol > 0 && cutoff > 0 && gap > 0 && min_gap > 0 && h > 0))
    throw Error(ErrorKind::Domain, "tolerances must be positive");
  if (count < 1 || grid < 1) throw Error(ErrorKind::Domain, "counts must be positive");
}

std::string data_dir() {
  if (const char* d = std::getenv("XLK_DATA_DIR"); d && *d) return d;
  return XLK_DEFAULT_DATA_DIR;
}

std::string data_path(const std::string& file) { return (std::filesystem::path(data_dir()) / file).string(); }

Json instances() { return read_json(data_path("instances.json")); }

Json trace_action_report(const BraidWord& b) {
  SymCoord k = symbolic_coords();
  SymCoord img = act_word(b, k);
  LaurentPoly P = fricke_P(k), Pimg = fricke_P(img);
  Json j = {{"braid", braid_json(b)},
            {"X", img.x.to_string()},
            {"Y", img.y.to_string()},
            {"Z", img.z.to_string()},
            {"b", img.b.to_string()},
            {"c", img.c.to_string()},
            {"P_preserved", Pimg == P}};
  return j;
}

Json quotient_claim_report(const BraidWord& b, const RunConfig& cfg) {
  QuotientReport q = quotient_claim_check(b, 1, static_cast<unsigned>(cfg.seed));
  Json j = {{"braid", braid_json(b)},
            {"holds", q.holds},
            {"decided", q.decided},
            {"method", q.method},
            {"P_bar", q.P_bar.to_string()},
            {"X_bar", q.X_bar.to_string()},
            {"Y_bar", q.Y_bar.to_string()},
            {"Z_bar", q.Z_bar.to_string()},
            {"branch_bar", q.branch_bar.to_string()},
            {"Y_minus_y_bar", q.Y_minus_y_bar.to_string()}};
  if (q.method == "membership-certificate") j["certificate"] = {{"alpha", q.alpha.to_string()}, {"beta", q.beta.to_string()}};
  if (q.method == "numeric-witness") {
    Json w = Json::array();
    for (Complex z : q.witness) w.push_back(complex_json(z));
    j["witness"] = {{"xyzb", w}, {"residual", q.witness_residual}, {"branch", q.witness_branch}};
  }
  j["report"] = q.holds ? "claim holds" : "claim fails";
  return j;
}

Json riley_report(const std::string& two_bridge, const std::vector<Complex>& ms) {
  TwoBridge tb = TwoBridge::parse(two_bridge);
  Json j = {{"two_bridge", tb.to_string()},
            {"word", two_bridge_word(tb).to_string({{kRileyX, "x"}, {kRileyY, "y"}})},
            {"polynomial", riley_polynomial(tb).to_string()}};
  Json roots = Json::array();
  for (Complex m : ms) {
    Json r = Json::array();
    for (Complex u : riley_roots(tb, m)) r.push_back(complex_json(u));
    roots.push_back({{"m", complex_json(m)}, {"u", r}});
  }
  j["roots"] = roots;
  return j;
}

Json u_points_report(const BraidWord& b, const RunConfig& cfg) {
  cfg.validate();
  auto pts = find_U_points(b, cfg.count, static_cast<unsigned>(cfg.seed));
  Json j = {{"braid", braid_json(b)}, {"config", cfg.to_json()}};
  Json arr = Json::array();
  for (const auto& u : pts) arr.push_back(u_point_json(u));
  j["points"] = arr;
  return j;
}

Json hypothesis_report(const BraidWord& b, const Involution& tau, const RunConfig& cfg) {
  cfg.validate();
  Json j = {{"braid", braid_json(b)}, {"involution", tau.name()}, {"config", cfg.to_json()}};
  j["closure"] = closure_json(b, tau);
  Json arr = Json::array();
  bool any = false;
  if (b.strands() == 3 && tau.kind == InvolutionKind::Reflect) {
    j["points_from"] = "U";
    for (const auto& u : find_U_points(b, cfg.count, static_cast<unsigned>(cfg.seed))) {
      auto d = u_point_data(b, tau, u);
      Json p = u_point_json(u);
      p.update(torus_point_json(b, tau, d.G, d.A, closure_is_knot(b, tau)));
      arr.push_back(p);
    }
  } else {
    j["points_from"] = "mapping-torus solve";
    for (const auto& t : find_mapping_torus_points(b, tau, cfg.count, cfg.seed, cfg.tol)) {
      Json p = torus_point_json(b, tau, t.G, t.A, closure_is_knot(b, tau));
      p["residual"] = t.residual;
      arr.push_back(p);
    }
  }
  for (const auto& p : arr) any = any || (p["hypothesis"]["condition_a"].get<bool>() && p["hypothesis"]["condition_b"].get<bool>() &&
                                          !p["hypothesis"]["inconclusive"].get<bool>());
  j["points"] = arr;
  j["hypothesis_verified"] = any;
  return j;
}

Json turks_head_report(int p, int q, bool certify, const RunConfig& cfg) {
  cfg.validate();
  TurksHead th = turks_head(p, q);
  Involution tau = Involution::parse("reflect", p);
  Json j = certificate_skeleton("turks-head", certify ? "II" : "none", "Th(" + std::to_string(p) + "," + std::to_string(q) + ")");
  j["input"] = {{"p", p}, {"q", q}, {"certify", certify}};
  j["config"] = cfg.to_json();
  // semantic equality: conjugate of full equals half * star(half) as automorphisms
  auto gens = free_generators(p);
  BraidWord hh = th.half * star(th.half, tau);
  BraidWord conj = th.conjugator.inverse() * th.full * th.conjugator;
  bool same = artin_act(conj, gens) == artin_act(hh, gens);
  j["derived"] = {{"full", th.full.to_string()},
                  {"half", th.half.to_string()},
                  {"conjugator", th.conjugator.to_string()},
                  {"semantic_equal", same},
                  {"closure", closure_json(th.half, tau)}};
  bool knot = closure_is_knot(th.half, tau);
  Json arr = Json::array();
  double max_res = 0;
  bool all_b = true, any_point = false;
  std::vector<UPoint> us;
  if (p == 3) {
    try {
      us = find_U_points(th.half, cfg.count, static_cast<unsigned>(cfg.seed));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoPoints) throw;
    }
  }
  j["points_from"] = us.empty() ? "mapping-torus solve" : "U";
  if (!us.empty()) {
    for (const auto& u : us) {
      auto d = u_point_data(th.half, tau, u);
      Json pt = u_point_json(u);
      pt.update(torus_point_json(th.half, tau, d.G, d.A, knot));
      if (certify && knot)
        pt["rank"] = rank_json(jacobian_rank(u_family(th.half, tau, u.coords), {*u.coords.a, u.T},
                                             closure_coords(th.half, tau), rank_options(cfg)));
      arr.push_back(pt);
    }
  } else {
    for (const auto& t : find_mapping_torus_points(th.half, tau, cfg.count, cfg.seed, cfg.tol)) {
      Json pt = torus_point_json(th.half, tau, t.G, t.A, knot);
      pt["residual"] = t.residual;
      arr.push_back(pt);
    }
  }
  for (const auto& pt : arr) {
    any_point = true;
    max_res = std::max(max_res, pt["residual"].get<double>());
    all_b = all_b && pt["hypothesis"]["condition_b"].get<bool>();
  }
  j["points"] = arr;
  j["verdict"] = {{"max_residual", max_res},
                  {"closure_is_knot", knot},
                  {"semantic_equal", same},
                  {"condition_b_all", any_point && all_b},
                  {"passed", knot && same && any_point && all_b}};
  return j;
}

Json construction1_certificate(const std::string& name, const std::string& link_file, const std::string& crossing,
                               const std::string& tangle, const RunConfig& cfg, const std::string& note) {
  cfg.validate();
  PDCode L = PDCode::load(resolve(link_file));
  RationalTangle R = RationalTangle::parse(tangle);
  std::mt19937_64 rng(cfg.seed);
  std::vector<Complex> ms, ts;
  for (int k = 0; k < cfg.grid; ++k) ms.push_back(polar_sample(rng, 1.15, 1.8, 0.25, 2.9));
  for (int k = 0; k < cfg.grid; ++k) ts.push_back(polar_sample(rng, 0.9, 2.0, 0, 2 * std::numbers::pi));
  ConstructionOptions o;
  o.tol = cfg.tol;
  o.all_branches = false;
  Construction1 C = construction1_family(L, crossing, R, product_grid(ms, ts), o);

  Json cert = certificate_skeleton("construction1", "I", name);
  cert["input"] = {{"link", link_file}, {"crossing", crossing}, {"tangle", tangle}, {"note", note}};
  cert["config"] = cfg.to_json();
  Json gm = Json::array(), gt = Json::array();
  for (Complex m : ms) gm.push_back(complex_json(m));
  for (Complex t : ts) gt.push_back(complex_json(t));
  cert["derived"] = {{"knot", {{"crossings", C.pdK.size()},
                               {"components", C.pdK.num_components()},
                               {"determinant", knot_determinant(C.pdK)}}},
                     {"c_closure", {{"two_bridge", C.closure.knot.to_string()},
                                    {"closing_sign", C.closure.closing_sign},
                                    {"q_effective", C.closure.q_effective},
                                    {"determinant", C.closure.determinant}}},
                     {"t_knot", C.t_knot.to_string()},
                     {"meridian_edges", C.meridian_edges},
                     {"grid_m", gm},
                     {"grid_t", gt}};

  auto coords = CharCoordinateSet::standard(all_arcs(C.pdK));
  auto chosen = pick(rng, static_cast<int>(C.family.size()), cfg.count);
  Json pts = Json::array();
  double max_res = 0;
  int min_rank = 1 << 30, ranked = 0;
  bool grade = true;
  for (std::size_t k = 0; k < C.family.size(); ++k) {
    const FamilyPoint& f = C.family[k];
    Json p = {{"params", {complex_json(f.params[0]), complex_json(f.params[1])}},
              {"branch", f.branch},
              {"u", complex_json(f.u)},
              {"u_T", complex_json(f.u_T)},
              {"q_used", f.q_used},
              {"t_used", f.t_used.to_string()},
              {"residual", f.residual},
              {"scale", entry_scale(f.rep)}};
    max_res = std::max(max_res, f.residual);
    if (std::binary_search(chosen.begin(), chosen.end(), static_cast<int>(k))) {
      FamilyFn fam = [&C, f](const std::vector<Complex>& q) {
        FamilyPoint g = construction1_point(C, f, q[0], q[1]);
        return FamilySample{g.rep, g.residual, entry_scale(g.rep)};
      };
      RankResult r = jacobian_rank(fam, f.params, coords, rank_options(cfg));
      p["rank"] = rank_json(r);
      min_rank = std::min(min_rank, r.rank);
      grade = grade && r.certificate_grade;
      ++ranked;
    }
    pts.push_back(p);
  }
  cert["points"] = pts;
  bool res_ok = max_res < cfg.tol;
  cert["verdict"] = {{"max_residual", max_res},
                     {"residuals_ok", res_ok},
                     {"ranked_points", ranked},
                     {"min_rank", ranked ? min_rank : 0},
                     {"expected_rank", 2},
                     {"certificate_grade", grade && ranked > 0},
                     {"passed", res_ok && ranked >= cfg.count && min_rank >= 2 && grade}};
  return cert;
}

Json construction2_certificate(const std::string& name, const BraidWord& b, const Involution& tau,
                               const RunConfig& cfg) {
  cfg.validate();
  if (b.strands() != 3) throw Error(ErrorKind::StrandMismatch, "construction II certificates use 3-strand braids");
  Json cert = certificate_skeleton("construction2", "II", name);
  cert["input"] = {{"braid", b.to_string()}, {"strands", b.strands()}, {"involution", tau.name()}};
  cert["config"] = cfg.to_json();
  cert["derived"] = {{"closure", closure_json(b, tau)}};
  auto us = find_U_points(b, cfg.count, static_cast<unsigned>(cfg.seed));
  auto coords = closure_coords(b, tau);
  Json pts = Json::array();
  double max_res = 0, max_a2 = 0, max_tr = 0, max_closure = 0;
  int min_rank = 1 << 30;
  bool grade = true, a2_ok = true, b_ok = true;
  for (const auto& u : us) {
    auto d = u_point_data(b, tau, u);
    Json p = u_point_json(u);
    p.update(torus_point_json(b, tau, d.G, d.A, true));
    RankResult r = jacobian_rank(u_family(b, tau, u.coords), {*u.coords.a, u.T}, coords, rank_options(cfg));
    p["rank"] = rank_json(r);
    max_res = std::max(max_res, p["residual"].get<double>());
    max_a2 = std::max(max_a2, p["A_squared"]["a2_residual"].get<double>());
    max_tr = std::max(max_tr, p["A_squared"]["trace_abs"].get<double>());
    max_closure = std::max(max_closure, p["closure"]["residual"].get<double>());
    a2_ok = a2_ok && p["A_squared"]["verdict"] == "true";
    b_ok = b_ok && p["hypothesis"]["condition_b"].get<bool>();
    min_rank = std::min(min_rank, r.rank);
    grade = grade && r.certificate_grade;
    pts.push_back(p);
  }
  cert["points"] = pts;
  int n = static_cast<int>(us.size());
  bool passed = n >= cfg.count && max_res < cfg.tol && a2_ok && max_a2 < 1e-8 && max_tr < 1e-8 &&
                max_closure < 1e-8 && min_rank >= 2 && grade;
  cert["verdict"] = {{"max_residual", max_res},
                     {"max_A_squared_residual", max_a2},
                     {"max_trace_A", max_tr},
                     {"max_closure_residual", max_closure},
                     {"condition_b_all", b_ok},
                     {"min_rank", n ? min_rank : 0},
                     {"expected_rank", 2},
                     {"certificate_grade", grade && n > 0},
                     {"passed", passed}};
  return cert;
}

Json parabolic_certificate(const std::string& name, const std::string& link_file, const std::string& c1,
                           const std::string& c2, const std::string& r1, const std::string& r2, const RunConfig& cfg,
                           const std::string& note) {
  cfg.validate();
  PDCode L = PDCode::load(resolve(link_file));
  ParabolicOptions o;
  o.tol = cfg.tol;
  o.samples = cfg.count;
  o.seed = cfg.seed;
  ParabolicFamily F = parabolic_family(L, c1, c2, RationalTangle::parse(r1), RationalTangle::parse(r2), o);
  Json cert = certificate_skeleton("parabolic", "parabolic", name);
  cert["input"] = {{"link", link_file}, {"c1", c1}, {"c2", c2}, {"tangles", {r1, r2}}, {"note", note}};
  cert["config"] = cfg.to_json();
  cert["derived"] = {{"knot", {{"crossings", F.pdK.size()},
                               {"components", F.pdK.num_components()},
                               {"determinant", knot_determinant(F.pdK)}}},
                     {"c_closures", {F.closure1.knot.to_string(), F.closure2.knot.to_string()}},
                     {"g_matrix", mat_json(F.g_matrix)}};
  auto coords = CharCoordinateSet::standard(all_arcs(F.pdK));
  Json pts = Json::array();
  double max_res = 0, max_spread = 0;
  int min_rank = 1 << 30;
  for (const auto& f : F.family) {
    Json p = {{"params", {complex_json(f.params[0]), complex_json(f.params[1]), complex_json(f.params[2])}},
              {"residual", f.residual},
              {"meridian_spread", meridian_trace_spread(f.rep, 2.0)}};
    FamilyFn fam = [&F, f, tol = cfg.tol](const std::vector<Complex>& q) {
      auto g = parabolic_point(F, q[0], f.params[0], f.params[2], tol);
      if (!g) throw Error(ErrorKind::StencilResidual, "parabolic solve failed on the stencil");
      return FamilySample{g->rep, g->residual, 1.0};
    };
    RankResult r = jacobian_rank(fam, {f.params[1]}, coords, rank_options(cfg));
    p["rank"] = rank_json(r);
    max_res = std::max(max_res, f.residual);
    max_spread = std::max(max_spread, p["meridian_spread"].get<double>());
    min_rank = std::min(min_rank, r.rank);
    pts.push_back(p);
  }
  cert["points"] = pts;
  int n = static_cast<int>(F.family.size());
  cert["verdict"] = {{"max_residual", max_res},
                     {"max_meridian_spread", max_spread},
                     {"min_rank", n ? min_rank : 0},
                     {"expected_rank", 1},
                     {"passed", n >= 3 && max_res < cfg.tol && max_spread < 1e-12 && min_rank >= 1}};
  return cert;
}

namespace {

Json bundle(std::vector<Json> certs) {
  Json j = {{"schema", "xlk-bundle"}, {"version", kCertificateVersion}};
  j["certificates"] = certs;
  return j;
}

const Json& instance(const Json& all, const std::string& key) {
  if (!all.contains(key)) throw Error(ErrorKind::Io, "instances.json has no entry " + key);
  return all.at(key);
}

Json run_instance(const std::string& key, const Json& in, const RunConfig& cfg) {
  std::string pipe = in.at("pipeline");
  if (pipe == "construction1")
    return construction1_certificate(key, in.at("link"), in.at("crossing"), in.at("tangle"), cfg, in.value("note", ""));
  if (pipe == "construction2") {
    int n = in.value("strands", 3);
    return construction2_certificate(key, BraidWord::parse(in.at("braid"), n), Involution::parse(in.at("involution"), n), cfg);
  }
  if (pipe == "parabolic") {
    auto t = in.at("tangles");
    return parabolic_certificate(key, in.at("link"), in.at("c1"), in.at("c2"), t.at(0), t.at(1), cfg, in.value("note", ""));
  }
  throw Error(ErrorKind::Parse, "unknown pipeline " + pipe);
}

}  // namespace

Json certify_10_98(const RunConfig& cfg) {
  Json all = instances();
  return bundle({run_instance("10_98", instance(all, "10_98"), cfg)});
}

Json certify_10_99(const RunConfig& cfg) {
  Json all = instances();
  return bundle({run_instance("10_99_I", instance(all, "10_99_I"), cfg),
                 run_instance("10_99_II", instance(all, "10_99_II"), cfg)});
}

Json certify_10_123(const RunConfig& cfg) {
  Json all = instances();
  return bundle({run_instance("10_123", instance(all, "10_123"), cfg)});
}

Json certify_parabolic(const RunConfig& cfg) {
  Json all = instances();
  return bundle({run_instance("parabolic", instance(all, "parabolic"), cfg)});
}

bool certificate_passed(const Json& j) {
  if (j.value("schema", "") == "xlk-bundle") {
    for (const auto& c : j.at("certificates"))
      if (!certificate_passed(c)) return false;
    return true;
  }
  return j.contains("verdict") && j.at("verdict").value("passed", false);
}

Json rerun_certificate(const Json& cert) {
  RunConfig cfg = RunConfig::from_json(cert.at("config"));
  const Json& in = cert.at("input");
  std::string pipe = cert.at("pipeline");
  std::string name = cert.value("name", "");
  if (pipe == "construction1")
    return construction1_certificate(name, in.at("link"), in.at("crossing"), in.at("tangle"), cfg, in.value("note", ""));
  if (pipe == "construction2") {
    int n = in.value("strands", 3);
    return construction2_certificate(name, BraidWord::parse(in.at("braid"), n), Involution::parse(in.at("involution"), n), cfg);
  }
  if (pipe == "parabolic") {
    auto t = in.at("tangles");
    return parabolic_certificate(name, in.at("link"), in.at("c1"), in.at("c2"), t.at(0), t.at(1), cfg, in.value("note", ""));
  }
  if (pipe == "turks-head") return turks_head_report(in.at("p"), in.at("q"), in.at("certify"), cfg);
  throw Error(ErrorKind::Parse, "unknown pipeline " + pipe);
}

VerifyReport verify_certificate(const Json& cert) {
  VerifyReport r;
  if (cert.value("schema", "") == "xlk-bundle") {
    const auto& cs = cert.at("certificates");
    for (std::size_t k = 0; k < cs.size(); ++k) {
      VerifyReport s = verify_certificate(cs[k]);
      for (auto& p : s.problems) r.problems.push_back("certificates/" + std::to_string(k) + p);
    }
    r.ok = r.problems.empty() && !cs.empty();
    if (cs.empty()) r.problems.push_back("empty bundle");
    return r;
  }
  r.problems = certificate_consistency(cert);
  if (r.problems.empty()) {
    Json fresh;
    try {
      fresh = rerun_certificate(cert);
    } catch (const Error& e) {
      r.problems.push_back(std::string("re-run failed: ") + e.what());
    }
    if (!fresh.is_null()) {
      auto diff = compare_json(cert, fresh);
      r.problems.insert(r.problems.end(), diff.begin(), diff.end());
    }
  }
  r.ok = r.problems.empty();
  return r;
}

}  // namespace xlk
