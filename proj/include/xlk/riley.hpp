#pragma once

#include <vector>

#include "xlk/free_word.hpp"
#include "xlk/mat2.hpp"
#include "xlk/tangle.hpp"

namespace xlk {

// x is generator 1, y is generator 2.
constexpr int kRileyX = 1;
constexpr int kRileyY = 2;

std::vector<int> two_bridge_signs(const TwoBridge& tb);
FreeWord two_bridge_word(const TwoBridge& tb);

// (1,2) entry of WG - HW in (u, m), made monic in u.
LaurentPoly riley_polynomial(const TwoBridge& tb);

struct RileyExpansion {
  LaurentPoly e11, e12, e21, e22;
};
// Raw entries of WG - HW, before normalization.
RileyExpansion riley_expansion(const TwoBridge& tb);

// Normal forms [[m,1],[0,1/m]] and [[m,0],[u,1/m]].
CMat riley_G(Complex m);
CMat riley_H(Complex m, Complex u);

// Roots in u at a numeric m, sorted; u = 0 is dropped.
std::vector<Complex> riley_roots(const TwoBridge& tb, Complex m);

// A with A G A^-1 = G for G = [[m,1],[0,1/m]].
CMat centralizer_matrix(const CMat& G, Complex t);
QMat centralizer_matrix(const QMat& G, const GaussRational& t);

}  // namespace xlk
