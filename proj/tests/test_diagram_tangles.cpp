#include <doctest.h>

#include <numeric>
#include <set>
#include <random>

#include "support.hpp"
#include "xlk/construction.hpp"
#include "xlk/pipelines.hpp"
#include "xlk/riley.hpp"

using namespace xlk;

namespace {

PDCode split_link() { return PDCode::load(data_path("3_1_split.pd.json")); }

PDCode relabeled(const PDCode& pd, int shift) {
  std::vector<PDCrossing> xs = pd.crossings();
  for (auto& x : xs)
    for (int& e : x.e) e += shift;
  return PDCode(xs, pd.name(), pd.meta());
}

}  // namespace

TEST_CASE("bundled split link is well formed") {
  PDCode pd = split_link();
  CHECK(pd.size() == 9);
  CHECK(pd.num_components() == 2);
  std::map<int, int> seen;
  for (const auto& x : pd.crossings())
    for (int e : x.e) ++seen[e];
  for (auto [e, k] : seen) CHECK(k == 2);
  CHECK(relabeled(pd, 100).num_components() == 2);
  CHECK(relabeled(pd, 100).num_arcs() == pd.num_arcs());
  CHECK(PDCode::from_json(pd.to_json()).to_json() == pd.to_json());
  // one Wirtinger record per crossing, arcs in range
  CHECK(pd.wirtinger().size() == pd.size());
  for (const auto& w : pd.wirtinger()) {
    CHECK(std::abs(w.sign) == 1);
    for (int a : {w.over, w.in, w.out}) CHECK((a >= 0 && a < pd.num_arcs()));
  }
}

TEST_CASE("wirtinger residual of trivial and abelian assignments") {
  PDCode pd = split_link();
  RepAssignment id;
  for (int a = 0; a < pd.num_arcs(); ++a) id[a] = CMat();
  CHECK(wirtinger_residual(pd, id) == 0.0);
  std::mt19937_64 rng(31);
  CMat M = test::random_cmat(rng);
  for (int comp = 0; comp < 2; ++comp) {
    RepAssignment rep;
    for (int a = 0; a < pd.num_arcs(); ++a) rep[a] = pd.component_of_arc(a) == comp ? M : CMat();
    CHECK(wirtinger_residual(pd, rep) < 1e-12);
  }
}

TEST_CASE("rational tangles") {
  auto r = RationalTangle::parse("2 1");
  CHECK(r.fraction() == mpq_class(3, 2));
  CHECK(r.crossings() == 3);
  for (const char* s : {"2", "3", "2 2", "2 1 3", "7/3", "5/2"}) {
    mpq_class f = RationalTangle::parse(s).fraction();
    mpq_class g = f;
    g.canonicalize();
    CHECK(f.get_num() == g.get_num());
    CHECK(f.get_den() == g.get_den());
  }
  CHECK(RationalTangle::parse("7/3").fraction() == mpq_class(7, 3));
}

TEST_CASE("c-closure examples") {
  CClosure t = c_closure(RationalTangle::parse("2"));
  CHECK(t.knot.p == 3);
  CHECK(t.determinant == 3);
  CHECK(t.pd.num_components() == 1);
  CClosure f = c_closure(RationalTangle::parse("2 1"));
  CHECK(f.knot.p == 5);
  CHECK(f.determinant == 5);
  CHECK(knot_determinant(f.pd) == 5);
  CHECK_THROWS_AS(c_closure(RationalTangle::parse("1")), Error);
}

TEST_CASE("tangle replacement") {
  PDCode L = split_link();
  PDCode same = tangle_replace(L, "c", RationalTangle::parse("1"));
  CHECK(same.size() == L.size());
  CHECK(same.num_components() == L.num_components());
  PDCode K = tangle_replace(L, "c", RationalTangle::parse("2"));
  CHECK(K.size() == 10);
  CHECK(K.num_components() == 1);
  for (const char* s : {"2", "2 1", "2 2", "4"}) {
    CClosure cc = c_closure(RationalTangle::parse(s));
    CHECK(cc.pd.num_components() == 1);
    CHECK(tangle_replace(L, "c", RationalTangle::parse(s)).num_components() == 1);
  }
  // exterior edges keep their labels
  std::set<int> before, after;
  int ci = L.crossing_index("c");
  for (std::size_t k = 0; k < L.size(); ++k)
    if (static_cast<int>(k) != ci)
      for (int e : L.crossings()[k].e) before.insert(e);
  for (const auto& x : K.crossings())
    for (int e : x.e) after.insert(e);
  for (int e : L.crossings()[ci].e) before.erase(e);
  for (int e : before) CHECK(after.count(e) == 1);
}

TEST_CASE("two-bridge words and signs") {
  CHECK(two_bridge_signs(TwoBridge::make(3, 1)) == std::vector<int>{1, 1});
  CHECK(two_bridge_signs(TwoBridge::make(5, 3)) == std::vector<int>{1, -1, -1, 1});
  CHECK(two_bridge_word(TwoBridge::make(3, 1)) == FreeWord({{kRileyX, 1}, {kRileyY, 1}}));
  for (long p = 3; p <= 13; p += 2)
    for (long q = 1; q < p; ++q)
      if (std::gcd(p, q) == 1) CHECK(two_bridge_word(TwoBridge::make(p, q)).length() == std::size_t(p - 1));
  CHECK_THROWS_AS(TwoBridge::make(4, 1), Error);
  CHECK_THROWS_AS(TwoBridge::make(9, 3), Error);
}

TEST_CASE("riley polynomial anchor") {
  LaurentPoly r = riley_polynomial(TwoBridge::make(3, 1));
  CHECK(r == LaurentPoly::parse("u + m^2 - 1 + m^-2", {"m", "u"}).with_vars(r.vars()));
  // G H G = H G H modulo the Riley polynomial, exactly
  LaurentPoly m = LaurentPoly::variable("m", {"m", "u"}), u = LaurentPoly::variable("u", {"m", "u"});
  PMat G(m, 1, 0, m.monomial_inverse()), H(m, 0, u, m.monomial_inverse());
  PMat d = G * H * G - H * G * H;
  for (const LaurentPoly* e : {&d.a, &d.b, &d.c, &d.d}) CHECK(reduce_modulo(*e, r, "u").is_zero());
  auto roots = riley_roots(TwoBridge::make(3, 1), 1.0);
  REQUIRE(roots.size() == 1);
  CHECK(std::abs(roots[0] + 1.0) < 1e-12);
  QMat g(1, 1, 0, 1), h(1, 0, -1, 1);
  CHECK(g * h * g == h * g * h);
}

TEST_CASE("riley polynomial degrees and diagonal entries") {
  for (long q : {1, 3}) CHECK(riley_polynomial(TwoBridge::make(5, q)).degree("u") == 2);
  for (long p = 3; p <= 13; p += 2)
    for (long q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      RileyExpansion e = riley_expansion(TwoBridge::make(p, q));
      CHECK(e.e11.is_zero());
      CHECK(e.e22.is_zero());
      CHECK(riley_polynomial(TwoBridge::make(p, q)).degree("u") == (p - 1) / 2);
    }
}

TEST_CASE("centralizer matrix") {
  CMat G = riley_G(1.7);
  CHECK(max_abs_diff(centralizer_matrix(G, 1.0), CMat()) < 1e-15);
  QMat P(1, 1, 0, 1);
  for (long t : {-2, 1, 3}) {
    QMat A = centralizer_matrix(P, GaussRational(t));
    CHECK(A == QMat(1, t, 0, 1));
    CHECK(A * P * A.inverse() == P);
  }
  std::mt19937_64 rng(32);
  // A centralizes G, so the witness pairs H^A with a matrix A does not fix
  CMat H = test::random_cmat(rng), K = test::random_cmat(rng);
  std::vector<Complex> tr;
  for (Complex t : {Complex(0.8), Complex(1.3), Complex(0.5, 0.7)}) {
    CMat A = centralizer_matrix(G, t);
    CHECK(max_abs_diff(A * G * A.inverse(), G) < 1e-12);
    tr.push_back((A * H * A.inverse() * K).trace());
  }
  CHECK(std::abs(tr[0] - tr[1]) > 1e-6);
  CHECK(std::abs(tr[1] - tr[2]) > 1e-6);
}

TEST_CASE("construction I on the split trefoil") {
  PDCode L = split_link();
  auto R = RationalTangle::parse("2");
  ConstructionOptions opt;
  opt.all_branches = false;
  auto c = construction1_family(L, "c", R, {{2.0, 1.0}}, opt);
  REQUIRE(c.family.size() == 1);
  CHECK(c.family[0].residual < 1e-10 * entry_scale(c.family[0].rep));
  CHECK(c.pdK.num_components() == 1);
  CHECK(c.pdK.size() == 10);

  std::vector<Complex> ms{1.2, 1.5, Complex(1.3, 0.4)}, ts{0.9, 1.4, Complex(1.1, -0.6)};
  auto grid = construction1_family(L, "c", R, product_grid(ms, ts), opt);
  REQUIRE(grid.family.size() == 9);
  for (const auto& p : grid.family) {
    CHECK(p.residual < 1e-10 * entry_scale(p.rep));
    Complex m = p.params[0];
    CHECK(meridian_trace_spread(p.rep, m + 1.0 / m) < 1e-10 * entry_scale(p.rep));
  }
  // at fixed m, distinct t give distinct characters: a T meridian not
  // centralized by A times the conjugated O meridian
  auto word_trace = [&](const FamilyPoint& p) {
    int o = grid.pdK.arc_of_edge(grid.meridian_edges[2]);
    return (p.rep.at(p.partner_arc) * p.rep.at(o)).trace();
  };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = j + 1; k < 3; ++k)
        CHECK(std::abs(word_trace(grid.family[3 * i + j]) - word_trace(grid.family[3 * i + k])) > 1e-6);
}

TEST_CASE("construction I at m = 1 uses u = -1") {
  auto c = construction1_family(split_link(), "c", RationalTangle::parse("2"), {{1.0, 0.7}});
  REQUIRE(!c.family.empty());
  CHECK(std::abs(c.family[0].u_T + 1.0) < 1e-9);
}

TEST_CASE("parabolic family") {
  CMat X = parabolic_matrix(Complex(0.3, 1.1), Complex(-0.7, 0.2));
  CHECK(std::abs(X.det() - 1.0) < 1e-14);
  CHECK(std::abs(X.trace() - 2.0) < 1e-14);
  PDCode L = PDCode::load(data_path("parabolic_link.pd.json"));
  ParabolicOptions opt;
  opt.samples = 3;
  auto f = parabolic_family(L, "c1", "c2", RationalTangle::parse("2"), RationalTangle::parse("2 1"), opt);
  REQUIRE(f.family.size() == 3);
  CHECK(f.pdK.num_components() == 1);
  for (const auto& p : f.family) {
    CHECK(meridian_trace_spread(p.rep, 2.0) < 1e-12);
    CHECK(p.residual < 1e-10 * entry_scale(p.rep));
  }
}
