#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "xlk/braid.hpp"
#include "xlk/mat2.hpp"

namespace xlk::test {

inline GaussRational small_gauss(std::mt19937_64& rng, int r = 2) {
  std::uniform_int_distribution<int> d(-r, r);
  return GaussRational(mpq_class(d(rng)), mpq_class(d(rng)));
}

// Product of elementary matrices; det 1 by construction.
inline QMat random_sl2(std::mt19937_64& rng, int factors = 3) {
  QMat m;
  for (int k = 0; k < factors; ++k) {
    m = m * QMat(1, small_gauss(rng), 0, 1);
    m = m * QMat(1, 0, small_gauss(rng), 1);
  }
  return m;
}

// Conjugates of one matrix, so the three traces agree.
inline std::array<QMat, 3> random_equal_trace_triple(std::mt19937_64& rng) {
  QMat g = random_sl2(rng, 2);
  QMat p = random_sl2(rng, 2), q = random_sl2(rng, 2);
  return {g, conjugate(p, g), conjugate(q, g)};
}

inline CMat random_cmat(std::mt19937_64& rng) {
  std::normal_distribution<double> nd(0, 1);
  CMat m({nd(rng), nd(rng)}, {nd(rng), nd(rng)}, {nd(rng), nd(rng)}, {nd(rng), nd(rng)});
  return normalize_det(m);
}

inline BraidWord random_braid(std::mt19937_64& rng, int n, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), gen(1, n - 1), sgn(0, 1);
  std::vector<BraidLetter> ls;
  int l = len(rng);
  for (int k = 0; k < l; ++k) ls.push_back({gen(rng), sgn(rng) ? 1 : -1});
  return BraidWord(n, ls);
}

}  // namespace xlk::test
