#include <doctest.h>

#include <random>

#include "support.hpp"
#include "xlk/certify.hpp"
#include "xlk/construction.hpp"

using namespace xlk;

namespace {

const Involution kReflect{InvolutionKind::Reflect, 3};

std::vector<CMat> random_irreducible(std::mt19937_64& rng, int n) {
  std::vector<CMat> g;
  CMat m = test::random_cmat(rng);
  for (int k = 0; k < n; ++k) g.push_back(conjugate(test::random_cmat(rng), m));
  return g;
}

// two-generator family with Riley-type normal forms; its characters have rank 2
FamilySample riley_pair(const std::vector<Complex>& p) {
  FamilySample s;
  s.rep[1] = CMat(p[0], 1, 0, 1.0 / p[0]);
  s.rep[2] = CMat(p[0], 0, p[1], 1.0 / p[0]);
  return s;
}

}  // namespace

TEST_CASE("irreducibility witness") {
  std::mt19937_64 rng(41);
  auto g = random_irreducible(rng, 3);
  auto w = irreducibility_witness(g);
  CHECK(w.irreducible);
  CHECK(w.gap > 1e-8);
  CHECK_FALSE(irreducible({CMat(2, 1, 0, 0.5), CMat(3, -1, 0, 1.0 / 3), CMat(1, 4, 0, 1)}));
  CHECK_FALSE(irreducible({CMat(), CMat()}));
}

TEST_CASE("intertwiner round trip") {
  std::mt19937_64 rng(42);
  for (int k = 0; k < 30; ++k) {
    auto g = random_irreducible(rng, 3);
    CMat A = test::random_cmat(rng);
    std::vector<CMat> h;
    for (const auto& m : g) h.push_back(conjugate(A, m));
    CMat B = intertwiner(g, h);
    CHECK(std::abs(B.det() - 1.0) < 1e-9);
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(max_abs_diff(h[i] * B, B * g[i]) < 1e-8 * (1 + max_abs(A)));
    CHECK(std::min(max_abs_diff(B, A), max_abs_diff(B, -A)) < 1e-7 * (1 + max_abs(A)));
  }
  auto g = random_irreducible(rng, 3), h = random_irreducible(rng, 3);
  CHECK_THROWS_AS(intertwiner(g, h), Error);
}

TEST_CASE("A squared check") {
  CMat J(Complex(0, 1), 0, 0, Complex(0, -1));
  auto ok = check_A_squared(J, CMat(2, 1, 0, 0.5));
  CHECK(ok.verdict == Verdict::True);
  auto bad = check_A_squared(CMat(2, 0, 0, 0.5), CMat(2, 1, 0, 0.5));
  CHECK(bad.verdict == Verdict::False);
  auto unsure = check_A_squared(CMat(2, 0, 0, 0.5), CMat());
  CHECK(unsure.verdict == Verdict::Inconclusive);
}

TEST_CASE("Klein classifier on conjugated normal forms") {
  std::mt19937_64 rng(43);
  std::normal_distribution<double> nd(0, 1);
  for (int k = 0; k < 90; ++k) {
    CMat C = test::random_cmat(rng);
    Complex lam(1.5 + std::abs(nd(rng)), nd(rng)), s(nd(rng), nd(rng)), x(nd(rng), nd(rng));
    int kase = k % 3 + 1;
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
    CHECK(static_cast<int>(r.kase) == kase);
    if (kase == 2) {
      CHECK(std::abs(r.trace_a) < 1e-10);
      CHECK(std::abs(r.trace_ab) < 1e-10);
    }
    // invariance under further conjugation
    CMat D = test::random_cmat(rng);
    CHECK(klein_classify(conjugate(D, conjugate(C, a)), conjugate(D, conjugate(C, b))).kase == r.kase);
  }
  CHECK(klein_classify(CMat(2, 1, 0, 0.5), CMat(1, 1, 0, 1)).kase == KleinCase::NotARep);
}

TEST_CASE("jacobian rank of a rank-two family") {
  auto coords = CharCoordinateSet::standard({1, 2});
  auto r = jacobian_rank(riley_pair, {Complex(1.3, 0.2), Complex(-0.8, 0.5)}, coords);
  CHECK(r.rank == 2);
  CHECK(r.certificate_grade);
  CHECK(r.gap >= 1e6);
  // affine reparameterization keeps the rank
  FamilyFn affine = [](const std::vector<Complex>& q) {
    return riley_pair({2.0 * q[0] + q[1] + 0.1, q[0] - q[1]});
  };
  Complex q0 = (Complex(1.3, 0.2) + Complex(-0.8, 0.5) - 0.1) / 3.0;
  Complex q1 = q0 - Complex(-0.8, 0.5);
  auto ra = jacobian_rank(affine, {q0, q1}, coords);
  CHECK(ra.rank == 2);
}

TEST_CASE("jacobian rank zero for constant and conjugation families") {
  auto coords = CharCoordinateSet::standard({1, 2});
  FamilyFn constant = [](const std::vector<Complex>&) { return riley_pair({1.4, 0.3}); };
  auto r0 = jacobian_rank(constant, {0.5, 0.5}, coords);
  CHECK(r0.rank == 0);
  CHECK(r0.certificate_grade);
  FamilyFn conj = [](const std::vector<Complex>& p) {
    FamilySample s = riley_pair({1.4, 0.3});
    CMat A(1, p[0], p[1], 1.0 + p[0] * p[1]);
    for (auto& [k, m] : s.rep) m = conjugate(A, m);
    return s;
  };
  auto r1 = jacobian_rank(conj, {Complex(0.2, 0.1), Complex(-0.3, 0.4)}, coords);
  CHECK(r1.rank == 0);
}

TEST_CASE("jacobian rank rejects bad stencils") {
  auto coords = CharCoordinateSet::standard({1, 2});
  FamilyFn broken = [](const std::vector<Complex>& p) {
    FamilySample s = riley_pair(p);
    s.residual = 1.0;
    return s;
  };
  CHECK_THROWS_AS(jacobian_rank(broken, {1.3, 0.4}, coords), Error);
}

TEST_CASE("meridian trace spread") {
  RepAssignment rep{{0, CMat(2, 1, 0, 0.5)}, {1, conjugate(CMat(1, 2, 1, 3), CMat(2, 1, 0, 0.5))}};
  CHECK(meridian_trace_spread(rep, 2.5) < 1e-12);
  rep[2] = CMat(3, 0, 0, 1.0 / 3);
  CHECK(meridian_trace_spread(rep, 2.5) > 0.8);
}

TEST_CASE("mapping torus points of the 10_123 braid") {
  BraidWord b = BraidWord::parse("s1 S2 s1 S2 s1", 3);
  auto pts = find_mapping_torus_points(b, kReflect, 2, 7);
  REQUIRE(pts.size() == 2);
  for (const auto& p : pts) {
    CHECK(p.residual < 1e-10);
    // act(b, G) = A tau(G) A^-1
    auto lhs = artin_act(b, p.G);
    auto rhs = involution_act(kReflect, p.G);
    for (std::size_t j = 0; j < 3; ++j) CHECK(max_abs_diff(lhs[j], conjugate(p.A, rhs[j])) < 1e-8);
    auto cr = assemble_closure_rep(b, kReflect, p.G, p.A);
    CHECK(cr.residual < 1e-8 * entry_scale(cr.rep));
    CHECK(cr.a2_residual < 1e-8);
    CHECK(cr.closure.pd.num_components() == 1);
    auto h = hypothesis_check(b, kReflect, p.G, p.A);
    CHECK_FALSE(h.inconclusive);
    CHECK(h.condition_b);
    CHECK(h.A_square_residual < 1e-8);
    // the intertwiner recovered from the character data is +-A
    CMat B = intertwiner(involution_act(kReflect, p.G), lhs);
    CHECK(std::min(max_abs_diff(B, p.A), max_abs_diff(B, -p.A)) < 1e-7);
  }
}
