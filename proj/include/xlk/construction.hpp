#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "xlk/diagram.hpp"
#include "xlk/numeric.hpp"
#include "xlk/tangle.hpp"

namespace xlk {

// Component roles of a bundled link, read from meta.components or inferred.
struct LinkRoles {
  std::map<std::string, int> component;  // role -> component index of the PDCode
  std::optional<TwoBridge> knot;         // two-bridge type of T (or T1)
};

LinkRoles link_roles(const PDCode& pd);

struct FamilyPoint {
  std::vector<Complex> params;  // (m, t) or (t, x, y)
  int branch = 0;               // Riley root index of the c-closure
  Complex u, u_T;
  long q_used = 0;              // c-closure q actually used
  TwoBridge t_used;             // two-bridge type used on T
  int partner_arc = -1;         // arc seeded with H_T
  RepAssignment rep;            // arc id of pdK -> matrix
  double residual = 0;
  int worst_crossing = -1;
};

struct Construction1 {
  PDCode pdK;
  CClosure closure;
  TwoBridge t_knot;
  std::vector<int> meridian_edges;  // edges of pdK carrying G, G, H^A
  std::vector<FamilyPoint> family;
};

struct ConstructionOptions {
  double tol = 1e-10;  // scaled by entry_scale of the assignment
  std::optional<TwoBridge> t_knot;  // overrides the diagram metadata
  bool all_branches = true;         // every Riley root of the c-closure
};

// Construction I: replace c in the split link T + O by R and
// extend a representation of T over the new knot for each (m, t).
Construction1 construction1_family(const PDCode& L, const std::string& c, const RationalTangle& R,
                                   const std::vector<std::pair<Complex, Complex>>& grid,
                                   const ConstructionOptions& opt = {});

// Re-evaluate one family member at nearby (m, t), following the Riley roots
// of base continuously. The residual is reported, not checked.
FamilyPoint construction1_point(const Construction1& c, const FamilyPoint& base, Complex m, Complex t);

// Two-sided grid helper: m values times t values.
std::vector<std::pair<Complex, Complex>> product_grid(const std::vector<Complex>& ms, const std::vector<Complex>& ts);

// Trace-2 matrix [[1+xy, x^2], [-y^2, 1-xy]].
CMat parabolic_matrix(Complex x, Complex y);

struct ParabolicFamily {
  PDCode pdK;
  CClosure closure1, closure2;
  std::vector<FamilyPoint> family;  // params (t, x, y)
  CMat g_matrix;                    // image of the clasp arc of T1
  RepAssignment t1_seeds;           // arcs of pdK coming from T1
  std::array<int, 2> a_arcs{};      // over arcs of c2, carrying A(t)
  int h_arc = -1;                   // O arc entering the c1 disk
  std::array<int, 2> check_pairs[2]{};  // meridian pairs that must not commute
};

struct ParabolicOptions {
  double tol = 1e-10;
  int samples = 5;
  int starts = 40;
  std::uint64_t seed = 11;
  std::optional<TwoBridge> t_knot;
};

// Double replacement on T1 u T2 + O with parabolic meridians.
ParabolicFamily parabolic_family(const PDCode& L, const std::string& c1, const std::string& c2,
                                 const RationalTangle& R1, const RationalTangle& R2,
                                 const ParabolicOptions& opt = {});

// Solve for (t, y) at fixed x starting from (t0, y0); nullopt if the solve
// fails or lands on a degenerate point.
std::optional<FamilyPoint> parabolic_point(const ParabolicFamily& f, Complex x, Complex t0, Complex y0,
                                           double tol = 1e-10);

// Checks that every crossing between T2 and T1 lies on one arc of the
// diagram of T1 alone.
bool single_arc_hypothesis(const PDCode& L, int t1, int t2);


// trace of every arc minus the common value; returns the max deviation
double meridian_trace_spread(const RepAssignment& rep, Complex expected);

}  // namespace xlk
