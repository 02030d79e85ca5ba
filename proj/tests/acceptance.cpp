// One pass/fail line per acceptance criterion. Exit status is 0 when every
// failure is a documented one (see README), 1 otherwise.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "support.hpp"
#include "xlk/certify.hpp"
#include "xlk/pipelines.hpp"
#include "xlk/riley.hpp"
#include "xlk/trace_coords.hpp"

using namespace xlk;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
  bool documented = false;  // the failure is a known, recorded one
};

struct Line {
  int id;
  std::string title;
  double budget;
  Outcome out;
  double seconds = 0;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

Line run(int id, const std::string& title, double budget, const std::function<Outcome()>& fn) {
  Line l{id, title, budget, {}, 0};
  auto t0 = std::chrono::steady_clock::now();
  try {
    l.out = fn();
  } catch (const std::exception& e) {
    l.out = {false, std::string("exception: ") + e.what(), false};
  }
  l.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (l.seconds >= budget) {
    l.out.pass = false;
    l.out.documented = false;
    l.out.detail += "; over the time budget";
  }
  return l;
}

const BraidWord k123 = BraidWord::parse("s1 S2 s1 S2 s1", 3);

Outcome c1_invariance() {
  SymCoord s = symbolic_coords();
  LaurentPoly p = fricke_P(s);
  int ok = 0;
  for (BraidLetter l : {BraidLetter{1, 1}, {1, -1}, {2, 1}, {2, -1}}) ok += fricke_P(act(l, s)) == p;
  return {ok == 4, std::to_string(ok) + "/4 letters preserve P as polynomials"};
}

Outcome c2_quotient() {
  auto q = quotient_claim_check(k123);
  bool forms = q.P_bar == LaurentPoly::parse("x*y*z - c") && q.X_bar == LaurentPoly::parse("y") &&
               q.Y_bar == LaurentPoly::parse("-x - y*z") && q.Z_bar == LaurentPoly::parse("z");
  auto f = quotient_claim_check(BraidWord::parse("s1 s2 s1 s2 s1", 3));
  bool pass = forms && q.holds && f.decided && !f.holds;
  return {pass, "P = " + q.P_bar.to_string() + ", (X,Y,Z) = (" + q.X_bar.to_string() + ", " +
                    q.Y_bar.to_string() + ", " + q.Z_bar.to_string() + "), claim " +
                    (q.holds ? "holds" : "fails") + "; s1 s2 s1 s2 s1: claim " + (f.holds ? "holds" : "fails")};
}

Outcome c3_oracle() {
  std::mt19937_64 rng(2024);
  int n = 120, ok = 0;
  for (int k = 0; k < n; ++k) {
    auto t = test::random_equal_trace_triple(rng);
    std::vector<QMat> v(t.begin(), t.end());
    BraidWord b = test::random_braid(rng, 3, 8);
    auto w = artin_act(b, v);
    ok += coords_from_triple(w[0], w[1], w[2]).same_xyzbc(act_word(b, coords_from_triple(v[0], v[1], v[2])));
  }
  return {ok == n, std::to_string(ok) + "/" + std::to_string(n) + " exact agreements (braids of length <= 8)"};
}

Outcome c4_riley() {
  LaurentPoly r = riley_polynomial(TwoBridge::make(3, 1));
  LaurentPoly want = LaurentPoly::parse("u + m^2 - 1 + m^-2", {"m", "u"}).with_vars(r.vars());
  bool anchor = false;
  // up to a unit monomial
  if (!r.is_zero()) {
    LaurentPoly lead = r.coeff("u", r.degree("u"));
    anchor = lead.is_monomial() && r * lead.monomial_inverse() == want;
  }
  LaurentPoly m = LaurentPoly::variable("m", {"m", "u"}), u = LaurentPoly::variable("u", {"m", "u"});
  PMat G(m, 1, 0, m.monomial_inverse()), H(m, 0, u, m.monomial_inverse());
  PMat d = G * H * G - H * G * H;
  bool braid = true;
  for (const LaurentPoly* e : {&d.a, &d.b, &d.c, &d.d}) braid = braid && reduce_modulo(*e, r, "u").is_zero();
  return {anchor && braid, "riley(3/1) = " + r.to_string() + "; GHG - HGH reduces to 0: " + (braid ? "yes" : "no")};
}

// Points carrying rank data; all must be rank >= want with the given gap.
std::string rank_summary(const Json& cert, int want, double gap, bool& ok, int& ranked) {
  double min_gap = 1e300;
  int min_rank = 1 << 30;
  for (const auto& p : cert["points"]) {
    if (!p.contains("rank")) continue;
    ++ranked;
    int r = p["rank"]["rank"];
    double g = p["rank"]["gap"];
    min_rank = std::min(min_rank, r);
    min_gap = std::min(min_gap, g);
    ok = ok && r >= want && g >= gap;
  }
  return std::to_string(ranked) + " ranked points, min rank " + std::to_string(ranked ? min_rank : 0) +
         ", min gap " + fmt("%.2e", ranked ? min_gap : 0.0);
}

Outcome c5_10_98() {
  RunConfig cfg;
  Json cert = certify_10_98(cfg)["certificates"][0];
  double res = cert["verdict"]["max_residual"];
  bool ok = cert["points"].size() == 25 && res < 1e-10;
  int ranked = 0;
  std::string rs = rank_summary(cert, 2, 1e6, ok, ranked);
  ok = ok && ranked >= 5 && certificate_passed(cert);
  return {ok, std::to_string(cert["points"].size()) + " grid points, max residual " + fmt("%.2e", res) + "; " + rs};
}

Outcome c6_10_123() {
  RunConfig cfg;
  Json cert = certify_10_123(cfg)["certificates"][0];
  const Json& v = cert["verdict"];
  double res = v["max_residual"], a2 = v["max_A_squared_residual"], tr = v["max_trace_A"],
         cl = v["max_closure_residual"];
  bool ok = cert["points"].size() >= 5 && res < 1e-10 && a2 < 1e-8 && tr < 1e-8 && cl < 1e-8;
  int ranked = 0;
  std::string rs = rank_summary(cert, 2, 1e6, ok, ranked);
  ok = ok && ranked == static_cast<int>(cert["points"].size()) && certificate_passed(cert);
  return {ok, std::to_string(cert["points"].size()) + " U points, max residual " + fmt("%.2e", res) +
                  ", |A^2+I| " + fmt("%.1e", a2) + ", |tr A| " + fmt("%.1e", tr) + ", closure " +
                  fmt("%.1e", cl) + "; " + rs};
}

Outcome c7_10_99() {
  RunConfig cfg;
  Json b = certify_10_99(cfg);
  bool ok = b["certificates"].size() == 2;
  std::string detail;
  for (const auto& cert : b["certificates"]) {
    int ranked = 0;
    bool rank_ok = true;
    std::string rs = rank_summary(cert, 2, 1e6, rank_ok, ranked);
    bool pass = rank_ok && ranked > 0 && certificate_passed(cert);
    ok = ok && pass;
    detail += cert["name"].get<std::string>() + " (" + cert["construction"].get<std::string>() + "): " +
              (pass ? "rank 2, " : "not certified, ") + rs + "; ";
  }
  return {ok, detail};
}

Outcome c8_klein() {
  std::mt19937_64 rng(48);
  std::normal_distribution<double> nd(0, 1);
  int n = 300, ok = 0;
  double worst = 0;
  for (int k = 0; k < n; ++k) {
    CMat C = test::random_cmat(rng);
    int kase = k % 3 + 1;
    Complex lam(1.5 + std::abs(nd(rng)), nd(rng)), s(nd(rng), nd(rng)), x(nd(rng), nd(rng));
    CMat a, b;
    if (kase == 1) {
      a = test::random_cmat(rng);
      b = k % 2 ? CMat() : -CMat();
    } else if (kase == 2) {
      b = CMat(lam, 0, 0, 1.0 / lam);
      a = CMat(0, s, -1.0 / s, 0);
    } else {
      b = CMat(1, x, 0, 1);
      a = CMat(Complex(0, 1), s, 0, Complex(0, -1));
    }
    auto r = klein_classify(conjugate(C, a), conjugate(C, b));
    bool good = static_cast<int>(r.kase) == kase;
    if (kase == 2) {
      worst = std::max({worst, std::abs(r.trace_a), std::abs(r.trace_ab)});
      good = good && std::abs(r.trace_a) < 1e-10 && std::abs(r.trace_ab) < 1e-10;
    }
    ok += good;
  }
  return {ok == n, std::to_string(ok) + "/" + std::to_string(n) + " classified; case 2 max |chi| " + fmt("%.1e", worst)};
}

Outcome c9_turks_head() {
  RunConfig cfg;
  bool ok = true, only_documented = true;
  std::string detail;
  for (auto [p, q] : {std::pair{3, 3}, {3, 5}, {5, 3}}) {
    Json r = turks_head_report(p, q, true, cfg);
    const Json& v = r["verdict"];
    bool knot = v["closure_is_knot"], same = v["semantic_equal"];
    bool completed = true;
    for (const auto& pt : r["points"]) completed = completed && pt.contains("hypothesis");
    bool b35 = true;
    if (p == 3 && q == 5) {
      int certified = 0;
      for (const auto& pt : r["points"])
        if (pt.contains("rank") && pt["rank"]["certificate_grade"].get<bool>()) {
          ++certified;
          b35 = b35 && pt["hypothesis"]["condition_b"].get<bool>();
        }
      b35 = b35 && certified > 0;
    }
    bool pass = knot && same && completed && b35;
    ok = ok && pass;
    // Th(3,3) closes to a link; that is the one recorded failure
    if (!pass && !(p == 3 && q == 3 && !knot && same && completed)) only_documented = false;
    detail += "Th(" + std::to_string(p) + "," + std::to_string(q) + "): knot " + (knot ? "yes" : "NO") +
              ", semantic " + (same ? "equal" : "DIFFERENT") + ", " + std::to_string(r["points"].size()) +
              " points" + (p == 3 && q == 5 ? std::string(", condition (b) ") + (b35 ? "true" : "FALSE") : "") + "; ";
  }
  if (!ok && only_documented) detail += "documented failure: Th(3,3) is a 3-component link";
  return {ok, detail, !ok && only_documented};
}

Outcome c10_parabolic() {
  RunConfig cfg;
  Json cert = certify_parabolic(cfg)["certificates"][0];
  double spread = cert["verdict"]["max_meridian_spread"];
  bool ok = spread < 1e-12;
  int ranked = 0;
  std::string rs = rank_summary(cert, 1, 0, ok, ranked);
  ok = ok && ranked >= 3 && certificate_passed(cert);
  return {ok, "meridian trace spread " + fmt("%.1e", spread) + "; " + rs};
}

Outcome c11_determinism() {
  RunConfig cfg;
  std::vector<std::function<Json()>> runs{[&] { return certify_10_98(cfg); }, [&] { return certify_10_99(cfg); },
                                          [&] { return certify_10_123(cfg); },
                                          [&] { return certify_parabolic(cfg); }};
  int same = 0, verified = 0;
  std::string problems;
  for (const auto& f : runs) {
    Json a = f(), b = f();
    same += emit_certificate(a) == emit_certificate(b);
    auto v = verify_certificate(Json::parse(emit_certificate(a)));
    verified += v.ok;
    for (const auto& p : v.problems) problems += p + "; ";
  }
  int n = static_cast<int>(runs.size());
  return {same == n && verified == n, std::to_string(same) + "/" + std::to_string(n) + " bundles byte-identical, " +
                                          std::to_string(verified) + "/" + std::to_string(n) + " verified" +
                                          (problems.empty() ? "" : ": " + problems)};
}

}  // namespace

int main() {
  std::vector<Line> lines;
  lines.push_back(run(1, "exact B3-action invariance of P", 1, c1_invariance));
  lines.push_back(run(2, "exact quotient-ring claim", 5, c2_quotient));
  lines.push_back(run(3, "trace action vs matrix oracle", 30, c3_oracle));
  lines.push_back(run(4, "Riley anchor", 5, c4_riley));
  lines.push_back(run(5, "10_98 construction I certificate", 60, c5_10_98));
  lines.push_back(run(6, "10_123 construction II certificate", 120, c6_10_123));
  lines.push_back(run(7, "10_99 both constructions", 120, c7_10_99));
  lines.push_back(run(8, "Klein classifier", 10, c8_klein));
  lines.push_back(run(9, "Turk's head sweep", 300, c9_turks_head));
  lines.push_back(run(10, "parabolic family", 120, c10_parabolic));
  lines.push_back(run(11, "determinism and verify", 600, c11_determinism));

  int undocumented = 0;
  for (const auto& l : lines) {
    const char* tag = l.out.pass ? "PASS" : (l.out.documented ? "FAIL (documented)" : "FAIL");
    std::printf("criterion %2d %-18s %-36s %7.2f s  %s\n", l.id, tag, l.title.c_str(), l.seconds, l.out.detail.c_str());
    if (!l.out.pass && !l.out.documented) ++undocumented;
  }
  return undocumented ? 1 : 0;
}
