#pragma once

#include <map>
#include <string>
#include <vector>

#include "xlk/errors.hpp"
#include "xlk/mat2.hpp"

namespace xlk {

struct Letter {
  int gen;
  int exp;  // +1 or -1
  bool operator==(const Letter& o) const { return gen == o.gen && exp == o.exp; }
};

class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::vector<Letter> letters);
  static FreeWord generator(int g, int exp = 1) { return FreeWord({{g, exp}}); }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  FreeWord inverse() const;
  FreeWord reduced() const;
  bool is_reduced() const;
  int exponent_sum(int g) const;
  // apply a substitution g -> word, letterwise
  FreeWord substitute(const std::map<int, FreeWord>& images) const;

  FreeWord operator*(const FreeWord& o) const;
  bool operator==(const FreeWord& o) const { return letters_ == o.letters_; }

  // names[g] is printed for generator g; inverse letters get a trailing "^-1"
  std::string to_string(const std::map<int, std::string>& names = {}) const;

 private:
  std::vector<Letter> letters_;
};

template <class T>
Mat2<T> eval_word(const FreeWord& w, const std::map<int, Mat2<T>>& assign) {
  Mat2<T> out = Mat2<T>::identity();
  for (const auto& l : w.letters()) {
    auto it = assign.find(l.gen);
    if (it == assign.end())
      throw Error(ErrorKind::UnboundGenerator, "generator " + std::to_string(l.gen) + " has no assignment");
    out = out * (l.exp > 0 ? it->second : it->second.inverse());
  }
  return out;
}

}  // namespace xlk
