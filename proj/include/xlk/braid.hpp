#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xlk/errors.hpp"
#include "xlk/free_word.hpp"
#include "xlk/mat2.hpp"

namespace xlk {

struct BraidLetter {
  int i;    // 1 <= i <= n-1
  int exp;  // +1 or -1
  bool operator==(const BraidLetter& o) const { return i == o.i && exp == o.exp; }
};

class BraidWord {
 public:
  BraidWord() = default;
  BraidWord(int n, std::vector<BraidLetter> letters);
  // "s1 S2 s1": lowercase positive, uppercase inverse
  static BraidWord parse(const std::string& text, int n);

  int strands() const { return n_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }

  BraidWord operator*(const BraidWord& o) const;
  BraidWord inverse() const;
  BraidWord pow(int k) const;
  bool operator==(const BraidWord& o) const { return n_ == o.n_ && letters_ == o.letters_; }

  std::string to_string() const;

 private:
  int n_ = 2;
  std::vector<BraidLetter> letters_;
};

enum class InvolutionKind { Reflect, Mirror };

struct Involution {
  InvolutionKind kind = InvolutionKind::Reflect;
  int n = 3;
  static Involution parse(const std::string& name, int n);
  std::string name() const { return kind == InvolutionKind::Reflect ? "reflect" : "mirror"; }
};

// Permutation of {1..n}; image(i) is where the strand starting at i ends.
class Perm {
 public:
  explicit Perm(int n);
  explicit Perm(std::vector<int> images);
  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i - 1]; }
  const std::vector<int>& images() const { return img_; }
  // this first, then o
  Perm then(const Perm& o) const;
  std::vector<std::vector<int>> cycles() const;
  bool is_full_cycle() const;
  bool operator==(const Perm& o) const { return img_ == o.img_; }
  std::string to_string() const;

 private:
  std::vector<int> img_;
};

BraidWord star(const BraidWord& b, const Involution& tau);
Perm perm_image(const BraidWord& b, const std::optional<Involution>& tau = std::nullopt);
bool closure_is_knot(const BraidWord& b, const Involution& tau);

// Group plumbing shared by matrices and free words.
inline FreeWord group_mul(const FreeWord& x, const FreeWord& y) { return (x * y).reduced(); }
inline FreeWord group_inv(const FreeWord& x) { return x.inverse(); }
template <class T>
Mat2<T> group_mul(const Mat2<T>& x, const Mat2<T>& y) { return x * y; }
template <class T>
Mat2<T> group_inv(const Mat2<T>& x) { return x.inverse(); }

// sigma_i:    (M_i, M_{i+1}) -> (M_{i+1}, M_{i+1}^-1 M_i M_{i+1})
// sigma_i^-1: (M_i, M_{i+1}) -> (M_i M_{i+1} M_i^-1, M_i)
template <class G>
std::vector<G> artin_act(const BraidWord& b, std::vector<G> m) {
  if (static_cast<int>(m.size()) != b.strands())
    throw Error(ErrorKind::LengthMismatch, "tuple length " + std::to_string(m.size()) +
                                               " for " + std::to_string(b.strands()) + " strands");
  for (const auto& l : b.letters()) {
    G x = m[l.i - 1], y = m[l.i];
    if (l.exp > 0) {
      m[l.i - 1] = y;
      m[l.i] = group_mul(group_mul(group_inv(y), x), y);
    } else {
      m[l.i - 1] = group_mul(group_mul(x, y), group_inv(x));
      m[l.i] = x;
    }
  }
  return m;
}

// The involution acting on tuples, compatible with star():
//   Reflect: M_i -> M_{n+1-i}^-1
//   Mirror:  M_i -> P_i M_i^-1 P_i^-1 with P_i = M_1 ... M_{i-1}
template <class G>
std::vector<G> involution_act(const Involution& tau, const std::vector<G>& m) {
  if (static_cast<int>(m.size()) != tau.n) throw Error(ErrorKind::LengthMismatch, "tuple length mismatch");
  std::vector<G> out;
  out.reserve(m.size());
  if (tau.kind == InvolutionKind::Reflect) {
    for (std::size_t k = 0; k < m.size(); ++k) out.push_back(group_inv(m[m.size() - 1 - k]));
    return out;
  }
  G prefix = group_mul(m[0], group_inv(m[0]));
  for (std::size_t k = 0; k < m.size(); ++k) {
    out.push_back(group_mul(group_mul(prefix, group_inv(m[k])), group_inv(prefix)));
    prefix = group_mul(prefix, m[k]);
  }
  return out;
}

// Free generators g_1..g_n carry ids 1..n; the mapping-torus loop has id 0.
constexpr int kLoopGenerator = 0;
std::vector<FreeWord> free_generators(int n);
std::map<int, std::string> generator_names(int n);

struct TurksHead {
  BraidWord full;
  BraidWord half;
  // full and half*star(half) agree after conjugating full by this braid
  BraidWord conjugator;
};

TurksHead turks_head(int p, int q);

// Word u with u g_i u^-1 = g_i^-1 in the mapping-torus group of b*tau.
FreeWord strand_holonomy(const BraidWord& b, const Involution& tau, int i);

// Images of g_1..g_n under conjugation by the loop: a g_j a^-1 = phi_j.
std::vector<FreeWord> loop_conjugation(const BraidWord& b, const Involution& tau);

}  // namespace xlk
