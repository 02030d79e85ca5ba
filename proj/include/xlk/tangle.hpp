#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "xlk/braid.hpp"
#include "xlk/diagram.hpp"

namespace xlk {

// Two-bridge knot b(p, q): p odd >= 3, 0 < q < p, gcd(p, q) = 1.
struct TwoBridge {
  long p = 3;
  long q = 1;
  static TwoBridge make(long p, long q);  // normalizes q mod p, validates
  static TwoBridge parse(const std::string& text);  // "p/q"
  TwoBridge mirror() const { return make(p, p - q); }
  std::string to_string() const { return std::to_string(p) + "/" + std::to_string(q); }
  bool operator==(const TwoBridge& o) const { return p == o.p && q == o.q; }
};

// Conway continued fraction [a1 ... ak]; value ak + 1/(a(k-1) + ...).
// The o-labelled boundary points are NE and SW.
struct RationalTangle {
  std::vector<long> a;

  // "2 1" (continued fraction) or "p/q" (expanded with positive terms)
  static RationalTangle parse(const std::string& text);
  mpq_class fraction() const;
  int crossings() const;
  // four boundary points NW, SW, SE, NE; crossing labels prefix1, prefix2, ...
  DiagramBuilder build(const std::string& prefix = "r") const;
  std::string to_string() const;
};

// Horizontal twist on (NE, SE) or vertical twist on (SW, SE).
void tangle_twist(DiagramBuilder& d, char kind, int sign, const std::string& label);
void tangle_join(DiagramBuilder& d, const std::string& p, const std::string& q);
void tangle_numerator(DiagramBuilder& d);

struct CClosure {
  TwoBridge knot;      // from the fraction of R + [1]
  int closing_sign = 1;  // sign of the extra crossing in the closed diagram
  long q_effective = 0;  // q when closing_sign = +1, else p - q
  PDCode pd;
  long determinant = 0;  // structural check: equals p
};

CClosure c_closure(const RationalTangle& r);

// Replace crossing c by R. Slots 0..3 of c go to NW, SW, SE, NE of R, so
// c's over strand meets the o points. Exterior edge labels are kept.
PDCode tangle_replace(const PDCode& pd, const std::string& c, const RationalTangle& r,
                      const std::string& name = "",
                      const std::vector<std::pair<int, std::string>>& reference = {});

// Closure of a braid with strands running upward. bottom_edges[k] is the
// edge at position k+1 below the first letter.
struct BraidClosure {
  PDCode pd;
  std::vector<int> bottom_edges;
};

BraidClosure braid_closure(const BraidWord& b);

}  // namespace xlk
