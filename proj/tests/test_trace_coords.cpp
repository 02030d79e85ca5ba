#include <doctest.h>

#include <random>

#include "support.hpp"
#include "xlk/trace_coords.hpp"

using namespace xlk;

namespace {

const std::vector<BraidLetter> kLetters{{1, 1}, {1, -1}, {2, 1}, {2, -1}};

template <class T>
TraceCoord<T> coords_of(const std::vector<Mat2<T>>& t) {
  return coords_from_triple(t[0], t[1], t[2]);
}

NumCoord numeric(const TraceCoord<GaussRational>& k) {
  NumCoord o{k.x.to_complex(), k.y.to_complex(), k.z.to_complex(), k.b.to_complex(), k.c.to_complex(), {}};
  if (k.a) o.a = k.a->to_complex();
  return o;
}

}  // namespace

TEST_CASE("fricke_P examples") {
  TraceCoord<GaussRational> zero{0, 0, 0, 0, 0, {}};
  CHECK(fricke_P(zero) == GaussRational(0));
  TraceCoord<GaussRational> ones{1, 1, 1, 1, 0, {}};
  CHECK(fricke_P(ones) == GaussRational(1));
}

TEST_CASE("coords of the identity triple") {
  auto k = coords_from_triple(QMat(), QMat(), QMat());
  CHECK(k.x == GaussRational(2));
  CHECK(k.y == GaussRational(2));
  CHECK(k.z == GaussRational(2));
  CHECK(k.b == GaussRational(8));
  CHECK(k.c == GaussRational(-28));
  CHECK(fricke_P(k) == GaussRational(0));
}

TEST_CASE("P vanishes on equal-trace triples and coords are conjugation invariant") {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 100; ++k) {
    auto t = test::random_equal_trace_triple(rng);
    auto c = coords_from_triple(t[0], t[1], t[2]);
    CHECK(fricke_P(c) == GaussRational(0));
    QMat m = test::random_sl2(rng, 2);
    auto d = coords_from_triple(conjugate(m, t[0]), conjugate(m, t[1]), conjugate(m, t[2]));
    CHECK(d.same_xyzbc(c));
  }
  CHECK_THROWS_AS(coords_from_triple(QMat(), QMat(2, 0, 0, GaussRational::frac(1, 2)), QMat()), Error);
}

TEST_CASE("the action preserves P exactly, letter by letter") {
  SymCoord s = symbolic_coords();
  LaurentPoly p = fricke_P(s);
  for (const auto& l : kLetters) CHECK(fricke_P(act(l, s)) == p);
}

TEST_CASE("letter inverses and word functoriality") {
  SymCoord s = symbolic_coords();
  CHECK(act(BraidLetter{1, 1}, act(BraidLetter{1, -1}, s)).same_xyzbc(s));
  CHECK(act(BraidLetter{2, -1}, act(BraidLetter{2, 1}, s)).same_xyzbc(s));
  CHECK(act_word(BraidWord(3, {}), s).same_xyzbc(s));
  std::mt19937_64 rng(22);
  for (int k = 0; k < 20; ++k) {
    BraidWord b = test::random_braid(rng, 3, 4), c = test::random_braid(rng, 3, 3);
    CHECK(act_word(b * c, s).same_xyzbc(act_word(c, act_word(b, s))));
    CHECK(act_word(b.inverse(), act_word(b, s)).same_xyzbc(s));
  }
  CHECK_THROWS_AS(act_word(BraidWord::parse("s1", 4), s), Error);
}

TEST_CASE("trace action agrees with the matrix action, exactly") {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 100; ++k) {
    auto t = test::random_equal_trace_triple(rng);
    std::vector<QMat> v(t.begin(), t.end());
    BraidWord b = test::random_braid(rng, 3, 8);
    CHECK(coords_of(artin_act(b, v)).same_xyzbc(act_word(b, coords_of(v))));
  }
}

TEST_CASE("10_123 half braid on symbolic coords matches numeric samples") {
  BraidWord b = BraidWord::parse("s1 S2 s1 S2 s1", 3);
  SymCoord img = act_word(b, symbolic_coords());
  std::mt19937_64 rng(24);
  for (int k = 0; k < 100; ++k) {
    auto t = test::random_equal_trace_triple(rng);
    std::vector<QMat> v(t.begin(), t.end());
    NumCoord c = numeric(coords_of(v));
    std::map<std::string, Complex> at{{"x", c.x}, {"y", c.y}, {"z", c.z}, {"b", c.b}, {"c", c.c}};
    NumCoord want = numeric(coords_of(artin_act(b, v)));
    CHECK(std::abs(img.x.eval(at) - want.x) < 1e-6 * (1 + std::abs(want.x)));
    CHECK(std::abs(img.y.eval(at) - want.y) < 1e-6 * (1 + std::abs(want.y)));
    CHECK(std::abs(img.z.eval(at) - want.z) < 1e-6 * (1 + std::abs(want.z)));
  }
}

TEST_CASE("quotient claim") {
  auto yes = quotient_claim_check(BraidWord::parse("s1 S2 s1 S2 s1", 3));
  CHECK(yes.decided);
  CHECK(yes.holds);
  CHECK(yes.P_bar == LaurentPoly::parse("x*y*z - c"));
  CHECK(yes.X_bar == LaurentPoly::parse("y"));
  CHECK(yes.Y_bar == LaurentPoly::parse("-x - y*z"));
  CHECK(yes.Z_bar == LaurentPoly::parse("z"));
  auto k99 = quotient_claim_check(BraidWord::parse("s1 S2 S2 s1 s1", 3));
  CHECK(k99.holds);
  auto no = quotient_claim_check(BraidWord::parse("s1 s2 s1 s2 s1", 3));
  CHECK(no.decided);
  CHECK_FALSE(no.holds);
}

TEST_CASE("U points of the 10_123 braid") {
  BraidWord b = BraidWord::parse("s1 S2 s1 S2 s1", 3);
  auto pts = find_U_points(b, 5, 7);
  REQUIRE(pts.size() == 5);
  for (const auto& p : pts) {
    for (double r : p.residual) CHECK(r < 1e-10);
    CHECK(p.branch >= 1e-3);
    CHECK(std::abs(p.T - 2.0) > 1e-3);
    CHECK(std::abs(p.T + 2.0) > 1e-3);
  }
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const auto &u = pts[i].coords, &v = pts[j].coords;
      double d = std::sqrt(std::norm(u.x - v.x) + std::norm(u.y - v.y) + std::norm(u.z - v.z) +
                           std::norm(u.b - v.b) + std::norm(u.c - v.c));
      CHECK(d > 1e-4);
    }
}

TEST_CASE("U points of the failing braid") {
  BraidWord b = BraidWord::parse("s1 s2 s1 s2 s1", 3);
  try {
    auto pts = find_U_points(b, 3, 7);
    for (const auto& p : pts) {
      bool margin_ok = std::abs(p.T - 2.0) > 1e-3 && std::abs(p.T + 2.0) > 1e-3;
      CHECK_FALSE(margin_ok);
    }
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoPoints);
  }
}

TEST_CASE("lift_triple round trip") {
  std::mt19937_64 rng(25);
  int lifted = 0;
  for (int k = 0; k < 40; ++k) {
    std::array<CMat, 3> t;
    CMat g = test::random_cmat(rng);
    t[0] = g;
    t[1] = conjugate(test::random_cmat(rng), g);
    t[2] = conjugate(test::random_cmat(rng), g);
    NumCoord c = coords_from_triple(t[0], t[1], t[2], 1e-9);
    auto h = lift_triple(c, *c.a);
    ++lifted;
    NumCoord d = coords_from_triple(h[0], h[1], h[2], 1e-8);
    double s = 1 + std::abs(c.c);
    CHECK(std::abs(d.x - c.x) < 1e-9 * s);
    CHECK(std::abs(d.y - c.y) < 1e-9 * s);
    CHECK(std::abs(d.z - c.z) < 1e-9 * s);
    CHECK(std::abs(d.b - c.b) < 1e-9 * s);
    CHECK(std::abs(d.c - c.c) < 1e-9 * s);
    // b = a (a + T) with T the triple product trace
    Complex T = (h[0] * h[1] * h[2]).trace();
    CHECK(std::abs(b_from(*c.a, T) - c.b) < 1e-9 * s);
    // words of length <= 3
    std::vector<std::vector<int>> words{{0, 1}, {0, 2}, {1, 2}, {0, 1, 2}, {0, 2, 1}, {0, 0, 1}, {1, 1, 2}};
    for (const auto& w : words) {
      CMat a, e;
      for (int i : w) {
        a = a * t[i];
        e = e * h[i];
      }
      CHECK(std::abs(a.trace() - e.trace()) < 1e-8 * s);
    }
  }
  CHECK(lifted == 40);
  NumCoord id{2, 2, 2, 8, -28, Complex(2)};
  CHECK_THROWS_AS(lift_triple(id, 2.0), Error);
}

TEST_CASE("meridian traces solve the cubic") {
  std::mt19937_64 rng(26);
  for (int k = 0; k < 20; ++k) {
    CMat g = test::random_cmat(rng);
    NumCoord c = coords_from_triple(g, conjugate(test::random_cmat(rng), g), conjugate(test::random_cmat(rng), g), 1e-9);
    auto as = meridian_traces(c.b, c.c);
    double best = 1e300;
    for (Complex a : as) best = std::min({best, std::abs(a - *c.a), std::abs(a + *c.a)});
    CHECK(best < 1e-6);
  }
}
