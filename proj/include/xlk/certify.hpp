#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "xlk/braid.hpp"
#include "xlk/diagram.hpp"
#include "xlk/free_word.hpp"
#include "xlk/mat2.hpp"
#include "xlk/tangle.hpp"

namespace xlk {

// Words whose traces serve as local coordinates on the character variety.
struct CharCoordinateSet {
  std::vector<FreeWord> words;

  // generators, products of distinct pairs, and products of distinct
  // triples when there are at most max_triple generators
  static CharCoordinateSet standard(const std::vector<int>& gens, int max_triple = 8);
  // adds the meridian word if it is not already there
  CharCoordinateSet& with_meridian(const FreeWord& w);
  std::vector<Complex> evaluate(const std::map<int, CMat>& rep) const;
  std::size_t size() const { return words.size(); }
};

// Irreducibility by commutator traces of words of length <= 2.
struct IrreducibleWitness {
  bool irreducible = false;
  std::string first, second;  // e.g. "m1", "m1*m3"
  double gap = 0;             // |tr[X, Y] - 2| for the best pair
};
IrreducibleWitness irreducibility_witness(const std::vector<CMat>& mats, double tol = 1e-8);
bool irreducible(const std::vector<CMat>& mats, double tol = 1e-8);

// A with det 1 and dst_i A = A src_i, normalized so the first nonzero
// entry has argument in (-pi/2, pi/2].
CMat intertwiner(const std::vector<CMat>& src, const std::vector<CMat>& dst, double tol = 1e-8);

enum class Verdict { False, True, Inconclusive };
const char* verdict_name(Verdict v);

struct ASquaredCheck {
  Verdict verdict = Verdict::Inconclusive;
  double a2_residual = 0;   // |A^2 + I|
  double trace_abs = 0;     // |tr A|
  double triple_margin = 0; // distance of the triple product from +-I
};
ASquaredCheck check_A_squared(const CMat& A, const CMat& triple_product, double tol = 1e-8, double margin = 1e-6);

// Representation of the closure of b * star(b) from a mapping-torus point.
struct ClosureRep {
  BraidWord word;
  BraidClosure closure;
  RepAssignment rep;
  double relation_residual = 0;  // |act(b, G) - A tau(G) A^-1|
  double a2_residual = 0;
  double residual = 0;           // Wirtinger residual on the closure
  double meridian_spread = 0;
};
ClosureRep assemble_closure_rep(const BraidWord& b, const Involution& tau, const std::vector<CMat>& G,
                                const CMat& A, double tol = 1e-8);

// Representations of the Klein bottle group <a, b | a b a^-1 = b^-1>.
enum class KleinCase { NotARep = 0, Case1 = 1, Case2 = 2, Case3 = 3 };
struct KleinResult {
  KleinCase kase = KleinCase::NotARep;
  double relation_residual = 0;
  Complex trace_a, trace_ab;
};
// Tolerances are relative to the squared entry size of the pair.
KleinResult klein_classify(const CMat& Ma, const CMat& Mb, double tol = 1e-9);

struct KleinCheck {
  std::string name;  // "disk" or "strand i"
  FreeWord a_word, b_word;
  double relation_residual = 0;
  double commutator_gap = 0;  // |tr[a, b] - 2|
  KleinCase kase = KleinCase::NotARep;
  bool irreducible = false;
};

struct HypothesisReport {
  bool inconclusive = false;
  std::string diagnostics;
  bool condition_a = false;
  std::vector<KleinCheck> klein;
  bool condition_b = false;
  IrreducibleWitness witness_b;
  double A_square_residual = 0;
  double closure_relation_residual = 0;  // |A g_j A^-1 - rho(loop image)|
};
HypothesisReport hypothesis_check(const BraidWord& b, const Involution& tau, const std::vector<CMat>& G,
                                  const CMat& A, double tol = 1e-8);

// Points (G, A) of the mapping torus of b*tau with A = diag(i, -i) fixed:
// act(b, G) = A tau(G) A^-1, det G_j = 1, equal traces, G irreducible.
struct TorusPoint {
  std::vector<CMat> G;
  CMat A;
  double residual = 0;
};
std::vector<TorusPoint> find_mapping_torus_points(const BraidWord& b, const Involution& tau, int count,
                                                  std::uint64_t seed, double tol = 1e-10, int max_starts = 200);

// Numeric dimension witness from the trace map of a parameterized family.
struct FamilySample {
  RepAssignment rep;
  double residual = 0;
  double scale = 1;  // residual is compared against tol * scale
};
using FamilyFn = std::function<FamilySample(const std::vector<Complex>&)>;

struct RankOptions {
  double h = 1e-5;
  double cutoff = 1e-3;           // relative to max(sigma_max, 1)
  double certificate_gap = 1e6;
  double min_gap = 1e2;           // below this the rank is indeterminate
  double stencil_tol = 1e-8;
  bool parallel = true;
};

struct RankResult {
  std::vector<double> singular_values;
  int rank = 0;
  double gap = 0;
  bool certificate_grade = false;
  double stencil_residual = 0;  // worst residual / scale over the stencil
};
RankResult jacobian_rank(const FamilyFn& family, const std::vector<Complex>& point, const CharCoordinateSet& coords,
                         const RankOptions& opt = {});

}  // namespace xlk
