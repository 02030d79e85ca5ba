#include <doctest.h>

#include <random>

#include "support.hpp"
#include "xlk/braid.hpp"

using namespace xlk;

namespace {

const Involution kReflect{InvolutionKind::Reflect, 3};
const Involution kMirror{InvolutionKind::Mirror, 3};

std::vector<QMat> random_tuple(std::mt19937_64& rng, int n) {
  std::vector<QMat> t;
  for (int k = 0; k < n; ++k) t.push_back(test::random_sl2(rng, 2));
  return t;
}

}  // namespace

TEST_CASE("braid text round trip") {
  BraidWord b = BraidWord::parse("s1 S2 s1", 3);
  CHECK(b.length() == 3);
  CHECK(b.letters()[1] == BraidLetter{2, -1});
  CHECK(BraidWord::parse(b.to_string(), 3) == b);
  CHECK_THROWS_AS(BraidWord::parse("s3", 3), Error);
  CHECK_THROWS_AS(BraidWord::parse("q1", 3), Error);
}

TEST_CASE("star examples") {
  CHECK(star(BraidWord::parse("s1 S2 s1 S2 s1", 3), kReflect) == BraidWord::parse("S2 s1 S2 s1 S2", 3));
  CHECK(star(BraidWord::parse("s1 S2 S2 s1 s1", 3), kMirror) == BraidWord::parse("S1 s2 s2 S1 S1", 3));
}

TEST_CASE("star is an involution and letterwise") {
  std::mt19937_64 rng(5);
  for (int n : {3, 4, 5}) {
    for (auto kind : {InvolutionKind::Reflect, InvolutionKind::Mirror}) {
      Involution tau{kind, n};
      for (int k = 0; k < 100; ++k) {
        BraidWord b = test::random_braid(rng, n, 10), c = test::random_braid(rng, n, 6);
        CHECK(star(star(b, tau), tau) == b);
        CHECK(star(b * c, tau) == star(b, tau) * star(c, tau));
      }
    }
  }
}

TEST_CASE("perm_image examples") {
  CHECK(perm_image(BraidWord(3, {})) == Perm(3));
  CHECK(perm_image(BraidWord::parse("s1", 2)) == Perm(std::vector<int>{2, 1}));
  Perm p = perm_image(BraidWord::parse("s1 S2 s1 S2 s1", 3), kReflect);
  CHECK(p.is_full_cycle());
  CHECK(perm_image(BraidWord(3, {}), kReflect) == Perm(std::vector<int>{3, 2, 1}));
}

TEST_CASE("perm_image is a homomorphism") {
  std::mt19937_64 rng(6);
  for (int k = 0; k < 100; ++k) {
    BraidWord b = test::random_braid(rng, 5, 8), c = test::random_braid(rng, 5, 8);
    CHECK(perm_image(b * c) == perm_image(b).then(perm_image(c)));
    CHECK(perm_image(b.inverse()).then(perm_image(b)) == Perm(5));
  }
}

TEST_CASE("closure_is_knot") {
  std::mt19937_64 rng(7);
  for (int n : {2, 4, 6})
    for (int k = 0; k < 20; ++k) {
      BraidWord b = test::random_braid(rng, n, 8);
      CHECK_FALSE(closure_is_knot(b, Involution{InvolutionKind::Reflect, n}));
      CHECK_FALSE(closure_is_knot(b, Involution{InvolutionKind::Mirror, n}));
    }
  CHECK(closure_is_knot(BraidWord::parse("s1 S2 s1 S2 s1", 3), kReflect));
  CHECK_FALSE(closure_is_knot(BraidWord(3, {}), kReflect));
  for (int k = 0; k < 100; ++k) {
    BraidWord b = test::random_braid(rng, 5, 8);
    for (auto kind : {InvolutionKind::Reflect, InvolutionKind::Mirror}) {
      Involution tau{kind, 5};
      CHECK(closure_is_knot(b, tau) == closure_is_knot(star(b, tau), tau));
    }
  }
}

TEST_CASE("artin_act letter conventions") {
  std::mt19937_64 rng(8);
  auto t = random_tuple(rng, 3);
  CHECK(artin_act(BraidWord(3, {}), t) == t);
  auto s = artin_act(BraidWord::parse("s1", 3), t);
  CHECK(s[0] == t[1]);
  CHECK(s[1] == t[1].inverse() * t[0] * t[1]);
  CHECK(s[2] == t[2]);
  auto si = artin_act(BraidWord::parse("S1", 3), t);
  CHECK(si[0] == t[0] * t[1] * t[0].inverse());
  CHECK(si[1] == t[0]);
  CHECK_THROWS_AS(artin_act(BraidWord::parse("s1", 3), random_tuple(rng, 2)), Error);
}

TEST_CASE("artin_act composition, inverses and product invariance") {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 100; ++k) {
    auto t = random_tuple(rng, 3);
    BraidWord b = test::random_braid(rng, 3, 6), c = test::random_braid(rng, 3, 4);
    auto bt = artin_act(b, t);
    CHECK(artin_act(b * c, t) == artin_act(c, bt));
    CHECK(artin_act(b.inverse(), bt) == t);
    CHECK(bt[0] * bt[1] * bt[2] == t[0] * t[1] * t[2]);
  }
}

TEST_CASE("involution action matches star") {
  // tau acts as an anti-automorphism partner of star: tau(act(b, T)) = act(star(b), tau(T))
  std::mt19937_64 rng(10);
  for (auto kind : {InvolutionKind::Reflect, InvolutionKind::Mirror}) {
    Involution tau{kind, 3};
    for (int k = 0; k < 40; ++k) {
      auto t = random_tuple(rng, 3);
      BraidWord b = test::random_braid(rng, 3, 6);
      CHECK(involution_act(tau, artin_act(b, t)) == artin_act(star(b, tau), involution_act(tau, t)));
      CHECK(involution_act(tau, involution_act(tau, t)) == t);
    }
  }
}

TEST_CASE("turks_head words") {
  TurksHead th = turks_head(3, 3);
  CHECK(th.full == BraidWord::parse("s1 S2 s1 S2 s1 S2", 3));
  CHECK(th.half == BraidWord::parse("s1 S2 s1", 3));
  CHECK(turks_head(3, 5).half == BraidWord::parse("s1 S2 s1 S2 s1", 3));
  std::mt19937_64 rng(11);
  for (auto [p, q] : {std::pair{3, 3}, {3, 5}, {5, 3}, {5, 5}}) {
    TurksHead h = turks_head(p, q);
    Involution tau{InvolutionKind::Reflect, p};
    BraidWord joined = h.half * star(h.half, tau);
    BraidWord conj = h.conjugator.inverse() * h.full * h.conjugator;
    auto t = random_tuple(rng, p);
    CHECK(artin_act(conj, t) == artin_act(joined, t));
    CHECK(artin_act(conj, free_generators(p)) == artin_act(joined, free_generators(p)));
  }
}

TEST_CASE("strand holonomy inverts its generator on free words") {
  BraidWord b = BraidWord::parse("s1 S2 s1 S2 s1", 3);
  auto phi = loop_conjugation(b, kReflect);
  REQUIRE(phi.size() == 3);
  FreeWord a = FreeWord::generator(kLoopGenerator);
  std::map<int, FreeWord> img;
  for (int j = 1; j <= 3; ++j) img[j] = phi[j - 1];
  for (int i = 1; i <= 3; ++i) {
    FreeWord u = strand_holonomy(b, kReflect, i);
    CHECK(u.exponent_sum(kLoopGenerator) == 3);
  }
  // a g_j a^-1 = phi_j, and the product of phi is w^-1 for w = g1 g2 g3
  FreeWord prod;
  for (const auto& w : phi) prod = group_mul(prod, w);
  FreeWord g123 = FreeWord::generator(1) * FreeWord::generator(2) * FreeWord::generator(3);
  CHECK(prod == g123.inverse().reduced());
}
